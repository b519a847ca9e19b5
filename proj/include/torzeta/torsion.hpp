#pragma once

// Analytic-torsion ratios for the symmetric powers tau_M = Sym^M, built from
// Ruelle zeta values at positive integers and half-integers. The volume
// enters only through the functional-equation factor
//
//   |R(-s, sigma_l)| = exp(-4 vol s / pi) |R(s, sigma_l)|,
//
// so every row is computable from the length spectrum. Base torsions
// T(tau_4) and T(tau_3) need values inside the critical strip and are left
// symbolic: each row reports -log(T(tau_M) / T(tau_base)).

#include "torzeta/zeta.hpp"

#include <optional>
#include <string>
#include <vector>

namespace torzeta {

enum class Parity { even, odd };

std::string to_string(Parity p);

struct TorsionRow {
    int family_index = 0;      // m, with M = 2m (even) or M = 2m + 1 (odd)
    int paper_index = 0;       // M
    double remainder = 0.0;    // log |R(k, sigma_2k)| or log |R(k + 1/2, sigma_2k+1)| at k = m
    double increment = 0.0;    // cumulative(m) - cumulative(m - 1)
    double cumulative = 0.0;   // -log(T(tau_M) / T(tau_base))
    double tail_bound = 0.0;   // accumulated through this row
    double required_cutoff = 0.0; // cutoff at which this row's unseen-class tail drops below 1e-8
};

struct TorsionSeries {
    Parity parity = Parity::even;
    int base_index = 4;        // 4 (even) or 3 (odd)
    double volume = 0.0;
    std::vector<TorsionRow> rows;
};

// Rows m = 3..m (even) or m = 2..m (odd); the last row is the requested one.
TorsionSeries torsion_series(const ClassTable& table, std::optional<double> volume, Parity parity,
                             int max_m, const EvalOptions& options = {});

// -log(T(tau_2m) / T(tau_4)) = (vol/pi)(m(m+1) - 6) - sum_{k=3}^m log |R(k, sigma_2k)|
TorsionRow torsion_ratio_even(const ClassTable& table, std::optional<double> volume, int m,
                              const EvalOptions& options = {});
// -log(T(tau_2m+1) / T(tau_3)) = (vol/pi)(m(m+2) - 3) - sum_{k=2}^m log |R(k+1/2, sigma_2k+1)|
TorsionRow torsion_ratio_odd(const ClassTable& table, std::optional<double> volume, int m,
                             const EvalOptions& options = {});

// Certificate that the remainder sums stay below C1 |log R(s0, sigma_0)| with
// C1 = 1 / (1 - e^{-systole}), s0 = 3 (even) or 5/2 (odd).
struct RemainderBound {
    double sum_abs = 0.0;
    double bound = 0.0;
    double c1 = 0.0;
    double allowance = 0.0;    // tails of every value involved
    bool pass = true;
};

RemainderBound remainder_bound(const ClassTable& table, int m_max, Parity parity,
                               const EvalOptions& options = {});

enum class ParityMix { even, odd, both };

ParityMix parse_parity_mix(const std::string& text);

// Least-squares fit y_M = intercept(parity) + linear M + slope M^2 over the
// paper indices M in [m_min, m_max]; recovered volume = 4 pi slope.
struct VolumeFit {
    double slope = 0.0;
    double linear = 0.0;
    double intercept = 0.0;                 // even family (or the only family)
    std::optional<double> intercept_odd;    // when both parities are fitted
    double recovered_volume = 0.0;
    double injected_volume = 0.0;
    double rel_error = 0.0;
    int index_min = 0;
    int index_max = 0;
    std::size_t points = 0;
    double max_abs_residual = 0.0;
    double max_residual_over_index = 0.0;
};

VolumeFit fit_volume(const ClassTable& table, double injected_volume, int m_min, int m_max,
                     ParityMix mix, const EvalOptions& options = {});

} // namespace torzeta
