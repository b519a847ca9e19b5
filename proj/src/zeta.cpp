#include "torzeta/zeta.hpp"

#include "torzeta/errors.hpp"
#include "torzeta/format.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace torzeta {

namespace {

constexpr double kDefaultGrowthExponent = 2.0;
// -log(1e-18): terms below this many e-folds are dropped.
constexpr double kPowerCutoffLog = 41.446531673892822;
constexpr double kDefaultTableLength = 28.0;

std::string describe_s(cplx s) {
    return format_double(s.real()) + (s.imag() < 0 ? "" : "+") + format_double(s.imag()) + "i";
}

void require_convergent(double re_s, double boundary, const std::string& what) {
    if (!(re_s > boundary)) {
        throw DivergenceError(what + " diverges: Re(s) = " + format_double(re_s) +
                              " must exceed " + format_double(boundary));
    }
}

double resolve_volume(const ClassTable& table, std::optional<double> volume) {
    if (volume) {
        if (!(*volume >= 0.0 && std::isfinite(*volume))) {
            throw std::invalid_argument("volume must be a nonnegative finite number");
        }
        return *volume;
    }
    if (table.spectrum().volume()) {
        return *table.spectrum().volume();
    }
    throw std::invalid_argument("functional-equation evaluation requires volume");
}

// Sums `term` over every class term needed for the given decay rate and
// negates, attaching the truncation bound.
template <class Term>
BoundedValue evaluate_series(const ClassTable& table, double decay, double amplitude,
                             double abscissa, double growth_exp, const EvalOptions& options,
                             Term&& term) {
    const LengthSpectrum& spectrum = table.spectrum();
    const double limit = power_limit(spectrum, decay);
    std::vector<ClassTerm> extended;
    std::span<const ClassTerm> terms;
    if (limit <= table.length_limit()) {
        terms = table.prefix(limit);
    } else {
        extended = iterate_classes(spectrum, limit);
        terms = extended;
    }
    BoundedValue out;
    out.value = cplx(0.0, 0.0) - sum_terms(terms, term, options.execution);
    out.tail_bound = series_tail_bound(spectrum, decay, amplitude, limit, growth_exp);
    out.abscissa = abscissa;
    return out;
}

// sigma_k(theta) e^{-s l} without forming the two factors separately.
cplx twisted_exponential(int k, double theta, cplx s, double length) {
    return std::polar(std::exp(-s.real() * length),
                      static_cast<double>(k) * theta - s.imag() * length);
}

BoundedValue combine(std::initializer_list<std::pair<double, BoundedValue>> parts, double abscissa) {
    BoundedValue out;
    ComplexAccumulator acc;
    for (const auto& [sign, part] : parts) {
        acc.add(sign * part.value);
        out.tail_bound += part.tail_bound;
    }
    out.value = acc.value();
    out.abscissa = abscissa;
    return out;
}

} // namespace

ClassTable::ClassTable(const LengthSpectrum& spectrum, double length_limit)
    : spectrum_(spectrum),
      limit_(length_limit > 0.0 ? length_limit : std::max(spectrum.cutoff(), kDefaultTableLength)),
      terms_(iterate_classes(spectrum_, limit_)) {}

std::span<const ClassTerm> ClassTable::prefix(double limit) const {
    if (limit > limit_) {
        throw std::logic_error("class table prefix beyond its length limit");
    }
    const auto end = std::upper_bound(terms_.begin(), terms_.end(), limit,
                                      [](double x, const ClassTerm& t) { return x < t.length; });
    return {terms_.data(), static_cast<std::size_t>(end - terms_.begin())};
}

double growth_exponent(const LengthSpectrum& spectrum, const EvalOptions& options) {
    if (!options.abscissa) {
        return kDefaultGrowthExponent;
    }
    const double a = *options.abscissa;
    if (!(a >= 0.0 && std::isfinite(a))) {
        throw std::invalid_argument("abscissa override must be a nonnegative number");
    }
    if (!spectrum.certifies_growth(a)) {
        throw DivergenceError("abscissa override " + format_double(a) +
                              " is not certified: counting(x) exceeds growth_constant * exp(" +
                              format_double(a) + " x)");
    }
    return a;
}

double power_limit(const LengthSpectrum& spectrum, double decay) {
    return std::max(spectrum.cutoff(), kPowerCutoffLog / decay);
}

double series_tail_bound(const LengthSpectrum& spectrum, double decay, double amplitude,
                         double summed_through, double growth_exp) {
    const double b = decay;
    const double a = growth_exp;
    const double r = spectrum.cutoff();
    if (!(b > a)) {
        throw DivergenceError("tail bound needs decay rate above the growth exponent");
    }
    // Primitive classes beyond the cutoff, all powers: Stieltjes integration
    // by parts against counting(x) <= C_g e^{a x}, then the geometric power sum.
    const double unknown = amplitude * spectrum.growth_constant() * b * std::exp(-(b - a) * r) /
                           ((b - a) * -std::expm1(-b * r));
    // Dropped powers of known primitives.
    CompensatedSum dropped;
    for (const auto& e : spectrum.entries()) {
        auto n0 = static_cast<std::int64_t>(std::floor(summed_through / e.length));
        while (static_cast<double>(n0) * e.length <= summed_through) {
            ++n0;
        }
        while (n0 > 1 && static_cast<double>(n0 - 1) * e.length > summed_through) {
            --n0;
        }
        const double first = std::exp(-b * static_cast<double>(n0) * e.length);
        dropped.add(static_cast<double>(e.multiplicity) * amplitude * first /
                    (static_cast<double>(n0) * -std::expm1(-b * e.length)));
    }
    return unknown + dropped.value();
}

BoundedValue log_ruelle(const ClassTable& table, CharacterIndex k, cplx s, const EvalOptions& options) {
    const double a = growth_exponent(table.spectrum(), options);
    require_convergent(s.real(), a,
                       "log R(s, sigma_" + std::to_string(k.k) + ") at s = " + describe_s(s));
    return evaluate_series(table, s.real(), 1.0, a, a, options, [k, s](const ClassTerm& t) {
        return t.weight / static_cast<double>(t.power) * twisted_exponential(k.k, t.holonomy, s, t.length);
    });
}

BoundedValue log_selberg(const ClassTable& table, CharacterIndex k, cplx s, const EvalOptions& options) {
    const double a = growth_exponent(table.spectrum(), options);
    require_convergent(s.real(), a,
                       "log Z(s, sigma_" + std::to_string(k.k) + ") at s = " + describe_s(s));
    const double r = table.spectrum().cutoff();
    const double amplitude = 1.0 / (std::expm1(-r) * std::expm1(-r));
    return evaluate_series(table, s.real() + 1.0, amplitude, a, a, options, [k, s](const ClassTerm& t) {
        const double scale = t.weight * std::exp(-t.length) /
                             (adjoint_det(t.length, t.holonomy) * static_cast<double>(t.power));
        return scale * twisted_exponential(k.k, t.holonomy, s, t.length);
    });
}

BoundedValue log_selberg_sym(const ClassTable& table, CharacterIndex k, cplx s, const EvalOptions& options) {
    const auto plus = log_selberg(table, k, s, options);
    const auto minus = log_selberg(table, k.reflected(), s, options);
    return combine({{1.0, plus}, {1.0, minus}}, plus.abscissa);
}

BoundedValue log_ruelle_rep_direct(const ClassTable& table, HighestWeight w, cplx s,
                                   const EvalOptions& options) {
    if (w.m < 0 || w.n < 0) {
        throw std::invalid_argument("highest weight entries must be nonnegative");
    }
    const double a = growth_exponent(table.spectrum(), options);
    const double shift = (w.m + w.n) / 2.0;
    require_convergent(s.real(), a + shift,
                       "log R_tau(s) for tau_(" + std::to_string(w.m) + "," + std::to_string(w.n) +
                           ") at s = " + describe_s(s));
    return evaluate_series(table, s.real() - shift, static_cast<double>(w.dimension()), a + shift, a, options,
                           [w, s](const ClassTerm& t) {
                               const cplx e = std::exp(-s * t.length);
                               return t.weight / static_cast<double>(t.power) *
                                      char_tau(w, t.length, t.holonomy) * e;
                           });
}

BoundedValue log_ruelle_rep_chars(const ClassTable& table, int m, cplx s, const EvalOptions& options) {
    const double a = growth_exponent(table.spectrum(), options);
    require_convergent(s.real(), a + m / 2.0,
                       "log R_tau(s) for Sym^" + std::to_string(m) + " at s = " + describe_s(s));
    BoundedValue out;
    ComplexAccumulator acc;
    for (const auto& piece : sym_power_restriction(m)) {
        const auto part = log_ruelle(table, piece.q, s - piece.shift.value(), options);
        acc.add(part.value);
        out.tail_bound += part.tail_bound;
    }
    out.value = acc.value();
    out.abscissa = a + m / 2.0;
    return out;
}

BoundedValue log_ruelle_rep_selberg(const ClassTable& table, HighestWeight w, cplx s,
                                    const EvalOptions& options) {
    const double a = growth_exponent(table.spectrum(), options);
    const auto data = weyl_data(w);
    double max_lambda = 0.0;
    for (const auto& d : data) {
        max_lambda = std::max(max_lambda, std::abs(d.lambda.value()));
    }
    require_convergent(s.real(), a + max_lambda,
                       "Selberg factorization of R_tau for tau_(" + std::to_string(w.m) + "," +
                           std::to_string(w.n) + ") at s = " + describe_s(s));
    BoundedValue out;
    ComplexAccumulator acc;
    for (const auto& d : data) {
        const auto part = log_selberg(table, d.q, s - d.lambda.value(), options);
        acc.add(static_cast<double>(d.sign) * part.value);
        out.tail_bound += part.tail_bound;
    }
    out.value = acc.value();
    out.abscissa = a + max_lambda;
    return out;
}

IdentityResidual ruelle_selberg_residual(const ClassTable& table, CharacterIndex k, cplx s,
                                         const EvalOptions& options) {
    const double a = growth_exponent(table.spectrum(), options);
    require_convergent(s.real(), a + 1.0,
                       "Ruelle-Selberg relation for sigma_" + std::to_string(k.k) + " at s = " + describe_s(s));
    const auto ruelle = log_ruelle(table, k, s, options);
    const auto up = log_selberg(table, k, s + 1.0, options);
    const auto down = log_selberg(table, k, s - 1.0, options);
    const auto plus2 = log_selberg(table, CharacterIndex(k.k + 2), s, options);
    const auto minus2 = log_selberg(table, CharacterIndex(k.k - 2), s, options);
    const auto selberg = combine({{1.0, up}, {1.0, down}, {-1.0, plus2}, {-1.0, minus2}}, a + 1.0);
    return {std::abs(ruelle.value - selberg.value), ruelle.tail_bound + selberg.tail_bound};
}

BoundedValue log_ruelle_modulus_negated(const ClassTable& table, std::optional<double> volume,
                                        CharacterIndex k, double s, const EvalOptions& options) {
    const double vol = resolve_volume(table, volume);
    const auto forward = log_ruelle(table, k, cplx(s, 0.0), options);
    BoundedValue out;
    out.value = cplx(-4.0 * vol * s / kPi + forward.value.real(), 0.0);
    out.tail_bound = forward.tail_bound;
    out.abscissa = forward.abscissa;
    return out;
}

BoundedValue ruelle_modulus_negated(const ClassTable& table, std::optional<double> volume,
                                    CharacterIndex k, double s, const EvalOptions& options) {
    auto out = log_ruelle_modulus_negated(table, volume, k, s, options);
    const double modulus = std::exp(out.value.real());
    out.tail_bound = modulus * std::expm1(out.tail_bound);
    out.value = cplx(modulus, 0.0);
    return out;
}

BoundedValue selberg_modulus_negated(const ClassTable& table, std::optional<double> volume,
                                     CharacterIndex k, double s, const EvalOptions& options) {
    const double vol = resolve_volume(table, volume);
    const auto forward = log_selberg(table, k, cplx(s, 0.0), options);
    const double log_modulus = 4.0 * kPi * vol * plancherel_integral(k, s) + forward.value.real();
    BoundedValue out;
    out.value = cplx(std::exp(log_modulus), 0.0);
    out.tail_bound = out.value.real() * std::expm1(forward.tail_bound);
    out.abscissa = forward.abscissa;
    return out;
}

} // namespace torzeta
