#include "torzeta/trace.hpp"

#include "torzeta/errors.hpp"
#include "torzeta/format.hpp"
#include "torzeta/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace torzeta {

namespace {

constexpr double kNegligibleLog = 41.446531673892822; // -log(1e-18)
constexpr double kQuadratureTol = 1e-10;

// Terms up to `limit`, borrowed from the table when it reaches that far.
struct TermView {
    std::vector<ClassTerm> owned;
    std::span<const ClassTerm> terms;
};

TermView terms_through(const ClassTable& table, double limit) {
    TermView view;
    if (limit <= table.length_limit()) {
        view.terms = table.prefix(limit);
    } else {
        view.owned = iterate_classes(table.spectrum(), limit);
        view.terms = view.owned;
    }
    return view;
}

double gaussian_kernel(double length, double t) {
    return std::exp(-length * length / (4.0 * t)) / std::sqrt(4.0 * kPi * t);
}

} // namespace

double identity_term(CharacterIndex k, double t, double vol) {
    if (!(t > 0.0)) {
        throw std::invalid_argument("heat time t must be positive");
    }
    const double kk = static_cast<double>(k.k);
    return 2.0 * vol / (4.0 * kPi * kPi) * std::sqrt(kPi / t) * (kk * kk / 4.0 + 1.0 / (2.0 * t));
}

double identity_term_quadrature(CharacterIndex k, double t, double vol) {
    if (!(t > 0.0)) {
        throw std::invalid_argument("heat time t must be positive");
    }
    const auto integrand = [k, t](double x) {
        return std::exp(-t * x * x) * plancherel(k, cplx(0.0, x)).real();
    };
    const double peak = 1.0 / std::sqrt(t);
    const auto half = integrate_half_line(integrand, std::span<const double>(&peak, 1), kQuadratureTol);
    return 2.0 * vol * 2.0 * half.value;
}

HeatEvaluation heat_geometric(const ClassTable& table, CharacterIndex k, double t, double vol,
                              const EvalOptions& options) {
    if (!(t > 0.0)) {
        throw std::invalid_argument("heat time t must be positive");
    }
    const LengthSpectrum& spectrum = table.spectrum();
    const double a = growth_exponent(spectrum, options);
    const double r = spectrum.cutoff();

    // Lengths beyond which l e^{-l - l^2/4t} is negligible.
    const double limit = std::max(r, 2.0 * t * (std::sqrt(1.0 + kNegligibleLog / t) - 1.0) + 1.0);
    const auto view = terms_through(table, limit);
    const double norm = 1.0 / std::sqrt(4.0 * kPi * t);
    const cplx sum = sum_terms(
        view.terms,
        [k, t](const ClassTerm& c) {
            const cplx lsym = lefschetz_L(k, c.length, c.holonomy) +
                              lefschetz_L(k.reflected(), c.length, c.holonomy);
            return c.weight * c.primitive_length * lsym * gaussian_kernel(c.length, t);
        },
        options.execution);

    HeatEvaluation out;
    out.t = t;
    out.identity_term = identity_term(k, t, vol);
    out.hyperbolic_term = sum.real();
    out.imaginary_part = std::abs(sum.imag());
    out.total = out.identity_term + out.hyperbolic_term;

    // Classes beyond the cutoff: |term(x)| <= f(x) = amp x e^{-x - x^2/4t} / sqrt(4 pi t),
    // counted by N(x) <= C e^{a x} + (x / R) C e^{a x / 2} (powers of unseen
    // primitives included). Bound by int_R^inf |f'(x)| N(x) dx.
    const double amp = 2.0 / (std::expm1(-r) * std::expm1(-r));
    const double growth = spectrum.growth_constant();
    // The majorant peaks at x = 2t(a - 1) with exponent t(a - 1)^2; past the
    // double range the bound is reported as infinite.
    const double peak_x = std::max(r, 2.0 * t * (a - 1.0));
    const double peak_exponent = (a - 1.0) * peak_x - peak_x * peak_x / (4.0 * t);
    if (peak_exponent > 700.0) {
        out.truncation_bound = std::numeric_limits<double>::infinity();
        return out;
    }
    const auto tail_integrand = [=](double u) {
        const double x = r + u;
        const double gauss = -x * x / (4.0 * t);
        const double slope = std::abs(1.0 - x - x * x / (2.0 * t));
        return amp * norm * growth * slope *
               (std::exp((a - 1.0) * x + gauss) + x / r * std::exp((a / 2.0 - 1.0) * x + gauss));
    };
    const double peaks[] = {1.0, std::max(1.0, peak_x - r)};
    out.truncation_bound = integrate_half_line(tail_integrand, peaks, 1e-6).value;

    for (const auto& e : spectrum.entries()) {
        auto n0 = static_cast<std::int64_t>(std::floor(limit / e.length)) + 1;
        const double len = static_cast<double>(n0) * e.length;
        out.truncation_bound += static_cast<double>(e.multiplicity) * e.length * amp * norm *
                                std::exp(-len - len * len / (4.0 * t)) / -std::expm1(-e.length);
    }
    return out;
}

TransformCheck gaussian_transform_residual(double length, double s) {
    if (!(length > 0.0) || !(s > 0.0)) {
        throw std::invalid_argument("Gaussian transform needs length > 0 and s > 0");
    }
    const auto integrand = [length, s](double t) {
        return std::exp(-t * s * s) * gaussian_kernel(length, t);
    };
    const double peak = length / (2.0 * s);
    const auto q = integrate_half_line(integrand, std::span<const double>(&peak, 1), kQuadratureTol);
    TransformCheck out;
    out.quadrature = q.value;
    out.closed_form = std::exp(-s * length) / (2.0 * s);
    out.residual = std::abs(out.quadrature - out.closed_form);
    out.error_estimate = q.error_estimate;
    return out;
}

BoundedValue selberg_sym_log_derivative(const ClassTable& table, CharacterIndex k, double s,
                                        const EvalOptions& options) {
    const LengthSpectrum& spectrum = table.spectrum();
    const double a = growth_exponent(spectrum, options);
    if (!(s > a)) {
        throw DivergenceError("log-derivative of S(s, sigma_" + std::to_string(k.k) +
                              ") diverges: s must exceed " + format_double(a));
    }
    const double r = spectrum.cutoff();
    // l e^{-eps l} <= 1 / (e eps) turns the extra length factor into a slightly
    // slower exponential.
    const double eps = (s + 1.0 - a) / 2.0;
    const double decay = s + 1.0 - eps;
    const double amplitude = 2.0 / (std::expm1(-r) * std::expm1(-r)) / (std::exp(1.0) * eps);
    const double limit = power_limit(spectrum, decay);
    const auto view = terms_through(table, limit);
    BoundedValue out;
    out.value = sum_terms(
        view.terms,
        [k, s](const ClassTerm& c) {
            return cplx(c.weight * c.primitive_length * lefschetz_sym(k, c.length, c.holonomy) *
                            std::exp(-s * c.length),
                        0.0);
        },
        options.execution);
    out.tail_bound = series_tail_bound(spectrum, decay, amplitude, limit, a);
    out.abscissa = a;
    return out;
}

ResolventCheck resolvent_identity_residual(const ClassTable& table, CharacterIndex k, double s,
                                           double s0, const EvalOptions& options) {
    const double a = growth_exponent(table.spectrum(), options);
    if (!(s > a) || !(s0 > a)) {
        throw DivergenceError("resolvent identity for sigma_" + std::to_string(k.k) +
                              " needs s and s0 above " + format_double(a));
    }
    const double s_min = std::min(s, s0);
    const double s_max = std::max(s, s0);
    const auto view = terms_through(table, power_limit(table.spectrum(), s_min + 1.0));
    const auto terms = view.terms;

    // Coefficients w l0 L_sym(gamma; sigma_k) of the hyperbolic sum.
    std::vector<double> coeff(terms.size());
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto& c = terms[i];
        coeff[i] = c.weight * c.primitive_length * lefschetz_sym(k, c.length, c.holonomy);
    }

    ResolventCheck out;
    out.terms = terms.size();
    ComplexAccumulator closed;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const double len = terms[i].length;
        closed.add(coeff[i] * (std::exp(-s * len) / (2.0 * s) - std::exp(-s0 * len) / (2.0 * s0)));
    }
    out.closed_form = closed.value().real();
    if (terms.empty()) {
        return out;
    }

    const double gap = s0 * s0 - s * s;
    const auto integrand = [&](double t) {
        const double weight = -std::exp(-t * s * s) * std::expm1(-t * gap);
        if (weight == 0.0) {
            return 0.0;
        }
        const cplx h = sum_terms(
            terms,
            [&](const ClassTerm& c) {
                const auto i = static_cast<std::size_t>(&c - terms.data());
                return cplx(coeff[i] * gaussian_kernel(c.length, t), 0.0);
            },
            options.execution);
        return weight * h.real();
    };
    const double peaks[] = {terms.front().length / (2.0 * s_max), terms.back().length / (2.0 * s_min)};
    const auto q = integrate_half_line(integrand, peaks, kQuadratureTol);
    out.quadrature = q.value;
    out.error_estimate = q.error_estimate;
    out.residual = std::abs(out.quadrature - out.closed_form);
    return out;
}

} // namespace torzeta
