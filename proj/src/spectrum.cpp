#include "torzeta/spectrum.hpp"

#include "torzeta/errors.hpp"
#include "torzeta/format.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace torzeta {

double reduce_angle(double theta) {
    constexpr double snap = 1e-12;
    double r = std::fmod(theta, kTwoPi);
    if (r < 0.0) {
        r += kTwoPi;
    }
    if (r < snap || kTwoPi - r < snap) {
        r = 0.0;
    }
    return r;
}

namespace {

bool class_less(const GeodesicClass& a, const GeodesicClass& b) {
    return std::tie(a.length, a.holonomy, a.multiplicity) <
           std::tie(b.length, b.holonomy, b.multiplicity);
}

// Largest counting(x) * exp(-exponent * x) over the jump points.
double growth_ratio(const std::vector<GeodesicClass>& entries, double exponent) {
    double worst = 0.0;
    std::int64_t count = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        count += entries[i].multiplicity;
        if (i + 1 < entries.size() && entries[i + 1].length == entries[i].length) {
            continue;
        }
        worst = std::max(worst, static_cast<double>(count) * std::exp(-exponent * entries[i].length));
    }
    return worst;
}

} // namespace

LengthSpectrum::LengthSpectrum(std::vector<GeodesicClass> entries, double cutoff,
                               double growth_constant, std::optional<double> volume)
    : entries_(std::move(entries)), cutoff_(cutoff), growth_constant_(growth_constant),
      volume_(volume) {
    if (!(cutoff_ > 0.0) || !std::isfinite(cutoff_)) {
        throw SpectrumError("cutoff must be a positive finite number");
    }
    if (!(growth_constant_ > 0.0) || !std::isfinite(growth_constant_)) {
        throw SpectrumError("growth constant must be a positive finite number");
    }
    if (volume_ && !(*volume_ >= 0.0 && std::isfinite(*volume_))) {
        throw SpectrumError("volume must be a nonnegative finite number");
    }
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const auto& e = entries_[i];
        if (!(e.length > 0.0) || !std::isfinite(e.length)) {
            throw SpectrumError("nonpositive length in entry " + std::to_string(i + 1));
        }
        if (!(e.holonomy >= 0.0 && e.holonomy < kTwoPi)) {
            throw SpectrumError("holonomy out of range [0, 2pi) in entry " + std::to_string(i + 1));
        }
        if (e.multiplicity < 1) {
            throw SpectrumError("multiplicity below 1 in entry " + std::to_string(i + 1));
        }
        if (e.length > cutoff_) {
            throw SpectrumError("entry " + std::to_string(i + 1) + " has length beyond the cutoff");
        }
    }
    std::sort(entries_.begin(), entries_.end(), class_less);
    if (growth_ratio(entries_, 2.0) > growth_constant_) {
        throw SpectrumError("counting function exceeds growth_constant * exp(2x)");
    }
}

std::int64_t LengthSpectrum::total_multiplicity() const {
    std::int64_t total = 0;
    for (const auto& e : entries_) {
        total += e.multiplicity;
    }
    return total;
}

bool LengthSpectrum::certifies_growth(double exponent) const {
    return growth_ratio(entries_, exponent) <= growth_constant_;
}

double LengthSpectrum::growth_sup(double exponent) const {
    return growth_ratio(entries_, exponent);
}

LengthSpectrum LengthSpectrum::truncated(double new_cutoff) const {
    std::vector<GeodesicClass> kept;
    for (const auto& e : entries_) {
        if (e.length <= new_cutoff) {
            kept.push_back(e);
        }
    }
    return LengthSpectrum(std::move(kept), new_cutoff, growth_constant_, volume_);
}

LengthSpectrum LengthSpectrum::with_volume(std::optional<double> volume) const {
    LengthSpectrum copy = *this;
    if (volume && !(*volume >= 0.0 && std::isfinite(*volume))) {
        throw SpectrumError("volume must be a nonnegative finite number");
    }
    copy.volume_ = volume;
    return copy;
}

std::int64_t counting_function(const LengthSpectrum& spectrum, double x) {
    if (x > spectrum.cutoff()) {
        throw SpectrumError("counting at x = " + format_double(x) +
                            " is beyond completeness radius " + format_double(spectrum.cutoff()));
    }
    std::int64_t count = 0;
    for (const auto& e : spectrum.entries()) {
        if (e.length > x) {
            break;
        }
        count += e.multiplicity;
    }
    return count;
}

std::vector<ClassTerm> iterate_classes(const LengthSpectrum& spectrum, double length_limit) {
    std::vector<ClassTerm> terms;
    for (const auto& e : spectrum.entries()) {
        if (e.length > length_limit) {
            break;
        }
        for (std::int64_t n = 1;; ++n) {
            const double len = static_cast<double>(n) * e.length;
            if (len > length_limit) {
                break;
            }
            terms.push_back({len, reduce_angle(static_cast<double>(n) * e.holonomy), n,
                             static_cast<double>(e.multiplicity), e.length});
        }
    }
    std::sort(terms.begin(), terms.end(), [](const ClassTerm& a, const ClassTerm& b) {
        return std::tie(a.length, a.power, a.holonomy, a.weight) <
               std::tie(b.length, b.power, b.holonomy, b.weight);
    });
    return terms;
}

} // namespace torzeta
