#pragma once

#include <functional>
#include <span>

namespace torzeta {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int pieces = 0;
};

// Adaptive Gauss-Kronrod (31 points) on [a, b]. Throws QuadratureError when
// the estimated error exceeds rel_tol * L1-norm + abs_tol.
QuadratureResult integrate_interval(const std::function<double(double)>& f, double a, double b,
                                    double rel_tol, double abs_tol = 0.0);

// Integral over (0, inf) of an integrand with interior peaks near the given
// points. The line is cut on a doubling grid that brackets every peak, and
// pieces are added to the right until they stop contributing.
QuadratureResult integrate_half_line(const std::function<double(double)>& f,
                                     std::span<const double> peaks, double rel_tol,
                                     double abs_tol = 0.0);

} // namespace torzeta
