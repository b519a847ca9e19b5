#include "torzeta/errors.hpp"
#include "torzeta/format.hpp"
#include "torzeta/random.hpp"
#include "torzeta/spectrum.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace torzeta {

namespace {

constexpr std::int64_t kHardCap = 1'000'000;

// Integrated intensity on [systole, x].
double cumulative_intensity(const DensityProfile& p, double systole, double x) {
    if (p.kind == DensityKind::poisson_linear) {
        return p.rate * (x - systole);
    }
    return std::expm1(p.exponent * (x - systole));
}

double inverse_intensity(const DensityProfile& p, double systole, double mass) {
    if (p.kind == DensityKind::poisson_linear) {
        return systole + mass / p.rate;
    }
    return systole + std::log1p(mass) / p.exponent;
}

std::int64_t cap_of(const DensityProfile& p) {
    return p.kind == DensityKind::capped_exponential ? p.max_count : kHardCap;
}

} // namespace

DensityProfile DensityProfile::parse(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw std::invalid_argument("density must be poisson-linear:RATE or capped-exp:C,MAX");
    }
    const std::string name = text.substr(0, colon);
    const std::string args = text.substr(colon + 1);
    DensityProfile p;
    try {
        if (name == "poisson-linear") {
            p.kind = DensityKind::poisson_linear;
            std::size_t used = 0;
            p.rate = std::stod(args, &used);
            if (used != args.size() || !(p.rate > 0.0)) {
                throw std::invalid_argument("bad rate");
            }
            return p;
        }
        if (name == "capped-exp") {
            p.kind = DensityKind::capped_exponential;
            const auto comma = args.find(',');
            if (comma == std::string::npos) {
                throw std::invalid_argument("missing MAX");
            }
            std::size_t used = 0;
            p.exponent = std::stod(args.substr(0, comma), &used);
            if (used != comma) {
                throw std::invalid_argument("bad exponent");
            }
            const std::string max_text = args.substr(comma + 1);
            const double max_count = std::stod(max_text, &used);
            if (used != max_text.size() || max_count < 1.0 || max_count != std::floor(max_count)) {
                throw std::invalid_argument("bad max");
            }
            p.max_count = static_cast<std::int64_t>(max_count);
            if (!(p.exponent > 0.0 && p.exponent <= 2.0)) {
                throw std::invalid_argument("exponent outside (0, 2]");
            }
            return p;
        }
    } catch (const std::exception& err) {
        throw std::invalid_argument("cannot parse density '" + text + "': " + err.what());
    }
    throw std::invalid_argument("unknown density profile '" + name + "'");
}

double expected_count(const DensityProfile& profile, double systole, double cutoff) {
    return 1.0 + cumulative_intensity(profile, systole, cutoff);
}

LengthSpectrum generate_synthetic(std::uint64_t seed, double systole, double cutoff,
                                  const DensityProfile& profile, std::optional<double> volume) {
    if (!(systole > 0.0 && systole < cutoff)) {
        throw std::invalid_argument("synthetic spectra need 0 < systole < cutoff");
    }
    const std::int64_t cap = cap_of(profile);
    const double expected = expected_count(profile, systole, cutoff);
    if (expected > static_cast<double>(cap)) {
        std::string hint;
        if (profile.kind == DensityKind::capped_exponential) {
            hint = "; use cutoff <= " +
                   format_double(systole + std::log1p(static_cast<double>(cap) - 1.0) / profile.exponent);
        } else {
            hint = "; use cutoff <= " +
                   format_double(systole + (static_cast<double>(cap) - 1.0) / profile.rate);
        }
        throw std::invalid_argument("density profile expects " + format_double(std::round(expected)) +
                                    " classes, above the limit " + std::to_string(cap) + hint);
    }

    std::mt19937_64 rng(seed);
    std::vector<GeodesicClass> entries;
    entries.push_back({systole, reduce_angle(kTwoPi * uniform01(rng)), 1});
    const double total_mass = cumulative_intensity(profile, systole, cutoff);
    double mass = 0.0;
    for (;;) {
        mass -= std::log1p(-uniform01(rng));
        if (mass > total_mass) {
            break;
        }
        const double length = std::min(cutoff, std::max(systole, inverse_intensity(profile, systole, mass)));
        entries.push_back({length, reduce_angle(kTwoPi * uniform01(rng)), 1});
        if (static_cast<std::int64_t>(entries.size()) > cap) {
            throw std::invalid_argument("sampled class count exceeds the limit " + std::to_string(cap) +
                                        "; use a smaller cutoff");
        }
    }
    LengthSpectrum provisional(entries, cutoff, 1e300, volume);
    const double growth = std::max(1.0, provisional.growth_sup(2.0) * (1.0 + 1e-12));
    return LengthSpectrum(std::move(entries), cutoff, growth, volume);
}

} // namespace torzeta
