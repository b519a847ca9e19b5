#pragma once

// Twisted Ruelle and Selberg zeta functions, evaluated as logarithms via
// their Dirichlet series over the conjugacy classes of a length spectrum.
//
//   log R(s, sigma_k) = - sum_gamma sigma_k(m_gamma) / n(gamma) e^{-s l(gamma)}
//   log Z(s, sigma_k) = - sum_gamma sigma_k(m_gamma) e^{-l} / (det(Id - Ad) n(gamma)) e^{-s l}
//
// Every value carries a rigorous bound on the error caused by truncating the
// spectrum at its cutoff R (primitive classes beyond R are controlled by the
// growth bound counting(x) <= C_g e^{a x}) and by dropping powers of known
// primitives whose terms fall below 1e-18.

#include "torzeta/algebra.hpp"
#include "torzeta/spectrum.hpp"
#include "torzeta/summation.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace torzeta {

struct BoundedValue {
    cplx value{0.0, 0.0};
    double tail_bound = 0.0;
    // Re(s) must exceed this for the defining series to converge.
    double abscissa = 2.0;
};

struct EvalOptions {
    // Certified growth exponent a with counting(x) <= C_g e^{a x}; the series
    // then converge for Re(s) > a. Defaults to 2.
    std::optional<double> abscissa;
    Execution execution = Execution::parallel;
};

// Sorted (primitive, power) terms of a spectrum, materialized once up to a
// length limit and shared by all evaluations.
class ClassTable {
public:
    // A limit of 0 picks max(cutoff, 28).
    explicit ClassTable(const LengthSpectrum& spectrum, double length_limit = 0.0);

    const LengthSpectrum& spectrum() const { return spectrum_; }
    double length_limit() const { return limit_; }
    const std::vector<ClassTerm>& terms() const { return terms_; }

    // Terms with length <= limit. Requires limit <= length_limit().
    std::span<const ClassTerm> prefix(double limit) const;

private:
    LengthSpectrum spectrum_;
    double limit_;
    std::vector<ClassTerm> terms_;
};

// Growth exponent to use for a spectrum; throws DivergenceError if an
// override is not certified by the data.
double growth_exponent(const LengthSpectrum& spectrum, const EvalOptions& options);

// Tail bound for a series whose terms satisfy |term(l, n)| <= amplitude e^{-decay l} / n
// for every class of length l >= cutoff, given that every power of a known
// primitive up to `summed_through` was included.
double series_tail_bound(const LengthSpectrum& spectrum, double decay, double amplitude,
                         double summed_through, double growth_exp);

// Length through which powers must be summed for terms below 1e-18.
double power_limit(const LengthSpectrum& spectrum, double decay);

BoundedValue log_ruelle(const ClassTable& table, CharacterIndex k, cplx s,
                        const EvalOptions& options = {});
BoundedValue log_selberg(const ClassTable& table, CharacterIndex k, cplx s,
                         const EvalOptions& options = {});
// log S(s, sigma_k) = log Z(s, sigma_k) + log Z(s, sigma_{-k}).
BoundedValue log_selberg_sym(const ClassTable& table, CharacterIndex k, cplx s,
                             const EvalOptions& options = {});

// log R_tau(s) for tau = tau_{m,n} by three independent routes:
//   direct   - the Dirichlet series with tr tau(gamma)
//   chars    - sum over the MA-restriction of Sym^m of shifted log R (n = 0 only)
//   selberg  - sum over Weyl data of sign * log Z(s - lambda, sigma_q)
BoundedValue log_ruelle_rep_direct(const ClassTable& table, HighestWeight w, cplx s,
                                   const EvalOptions& options = {});
BoundedValue log_ruelle_rep_chars(const ClassTable& table, int m, cplx s,
                                  const EvalOptions& options = {});
BoundedValue log_ruelle_rep_selberg(const ClassTable& table, HighestWeight w, cplx s,
                                    const EvalOptions& options = {});

struct IdentityResidual {
    double residual = 0.0;
    // Sum of the tail bounds of every value involved.
    double tail_allowance = 0.0;
};

// |log R(s, sigma_k) - [log Z(s+1, sigma_k) + log Z(s-1, sigma_k)
//                       - log Z(s, sigma_{k+2}) - log Z(s, sigma_{k-2})]|
IdentityResidual ruelle_selberg_residual(const ClassTable& table, CharacterIndex k, cplx s,
                                         const EvalOptions& options = {});

// log |R(-s, sigma_k)| = -4 vol s / pi + log |R(s, sigma_k)| for real s in the
// convergence region. The value's real part holds the log-modulus.
BoundedValue log_ruelle_modulus_negated(const ClassTable& table, std::optional<double> volume,
                                        CharacterIndex k, double s, const EvalOptions& options = {});
// |R(-s, sigma_k)|, with the tail propagated multiplicatively.
BoundedValue ruelle_modulus_negated(const ClassTable& table, std::optional<double> volume,
                                    CharacterIndex k, double s, const EvalOptions& options = {});

// |Z(-s, sigma_k)| = exp(4 pi vol int_0^s P_{sigma_k}(r) dr) |Z(s, sigma_k)|.
BoundedValue selberg_modulus_negated(const ClassTable& table, std::optional<double> volume,
                                     CharacterIndex k, double s, const EvalOptions& options = {});

} // namespace torzeta
