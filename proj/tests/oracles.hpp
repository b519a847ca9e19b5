#pragma once

// Independent reference evaluations from the Euler products, used to check
// the Dirichlet-series evaluators on spectra with a handful of primitives.

#include <cmath>
#include <complex>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

struct Primitive {
    double length;
    double theta;
    int multiplicity = 1;
};

// log R(s, sigma_k) = sum_gamma0 log(1 - e^{ik theta} e^{-s l}).
inline cplx log_ruelle_euler(const std::vector<Primitive>& prims, int k, cplx s) {
    cplx total = 0.0;
    for (const auto& p : prims) {
        const cplx z = std::exp(cplx(0.0, k * p.theta) - s * p.length);
        total += static_cast<double>(p.multiplicity) * std::log(1.0 - z);
    }
    return total;
}

// log Z(s, sigma_k) = sum_gamma0 sum_{p >= 0} sum_{a = 0}^p
//                     log(1 - e^{i(k + 2(2a - p)) theta} e^{-(s + 1 + p) l}).
inline cplx log_selberg_double_sum(const std::vector<Primitive>& prims, int k, cplx s) {
    cplx total = 0.0;
    for (const auto& pr : prims) {
        for (int p = 0;; ++p) {
            const double decay = std::exp(-(s.real() + 1.0 + p) * pr.length);
            if (decay * (p + 1) < 1e-22) {
                break;
            }
            for (int a = 0; a <= p; ++a) {
                const double phase = (k + 2.0 * (2 * a - p)) * pr.theta;
                const cplx z = std::exp(cplx(0.0, phase) - (s + 1.0 + static_cast<double>(p)) * pr.length);
                total += static_cast<double>(pr.multiplicity) * std::log(1.0 - z);
            }
        }
    }
    return total;
}

} // namespace oracle
