#pragma once

// Geometric side of the trace formula for the twisted operators and the
// transform identities that tie heat-type sums to the logarithmic derivative
// of the symmetrized Selberg zeta function.
//
// For sigma = sigma_k the geometric side at time t is
//
//   I(t) = 2 vol int_R e^{-t x^2} P_sigma(i x) dx
//   H(t) = sum_gamma l0(gamma) L_sym(gamma; sigma) e^{-l(gamma)^2 / 4t} / sqrt(4 pi t)
//
// where l0 = l / n is the primitive length.

#include "torzeta/algebra.hpp"
#include "torzeta/zeta.hpp"

namespace torzeta {

struct HeatEvaluation {
    double t = 0.0;
    double identity_term = 0.0;
    double hyperbolic_term = 0.0;
    double total = 0.0;
    // Bound on the classes beyond the cutoff and dropped powers.
    double truncation_bound = 0.0;
    // |Im| of the complex hyperbolic sum before it is discarded.
    double imaginary_part = 0.0;
};

// Closed form 2 vol / (4 pi^2) sqrt(pi / t) (k^2/4 + 1/(2t)).
double identity_term(CharacterIndex k, double t, double vol);

// The same integral by adaptive quadrature of its definition.
double identity_term_quadrature(CharacterIndex k, double t, double vol);

HeatEvaluation heat_geometric(const ClassTable& table, CharacterIndex k, double t, double vol,
                              const EvalOptions& options = {});

struct TransformCheck {
    double quadrature = 0.0;
    double closed_form = 0.0;
    double residual = 0.0;
    double error_estimate = 0.0;
};

// int_0^inf e^{-t s^2} e^{-l^2/4t} / sqrt(4 pi t) dt against e^{-s l} / (2 s).
TransformCheck gaussian_transform_residual(double length, double s);

// d/ds log S(s, sigma_k) = sum_gamma l0 L_sym(gamma; sigma_k) e^{-s l}.
BoundedValue selberg_sym_log_derivative(const ClassTable& table, CharacterIndex k, double s,
                                        const EvalOptions& options = {});

struct ResolventCheck {
    double quadrature = 0.0;   // int_0^inf (e^{-t s^2} - e^{-t s0^2}) H(t) dt
    double closed_form = 0.0;  // dlogS(s) / 2s - dlogS(s0) / 2s0
    double residual = 0.0;
    double error_estimate = 0.0;
    std::size_t terms = 0;
};

ResolventCheck resolvent_identity_residual(const ClassTable& table, CharacterIndex k, double s,
                                           double s0, const EvalOptions& options = {});

} // namespace torzeta
