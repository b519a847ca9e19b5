#include "torzeta/quadrature.hpp"

#include "torzeta/errors.hpp"
#include "torzeta/format.hpp"
#include "torzeta/summation.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace torzeta {

namespace {

constexpr unsigned kMaxDepth = 18;
constexpr int kMaxTailPieces = 400;

struct Piece {
    double value;
    double error;
    double l1;
};

Piece gk_piece(const std::function<double(double)>& f, double a, double b, double rel_tol,
               unsigned max_depth) {
    Piece p{0.0, 0.0, 0.0};
    p.value = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, max_depth, rel_tol,
                                                                            &p.error, &p.l1);
    return p;
}

[[noreturn]] void fail(double a, double b, double error) {
    throw QuadratureError("quadrature on [" + format_double(a) + ", " + format_double(b) +
                          "] did not converge (error estimate " + format_double(error) + ")");
}

} // namespace

QuadratureResult integrate_interval(const std::function<double(double)>& f, double a, double b,
                                    double rel_tol, double abs_tol) {
    const Piece p = gk_piece(f, a, b, rel_tol, kMaxDepth);
    if (!std::isfinite(p.value) || p.error > rel_tol * p.l1 * 10.0 + abs_tol) {
        fail(a, b, p.error);
    }
    return {p.value, p.error, 1};
}

QuadratureResult integrate_half_line(const std::function<double(double)>& f,
                                     std::span<const double> peaks, double rel_tol, double abs_tol) {
    double lo = 1.0;
    double hi = 1.0;
    if (!peaks.empty()) {
        lo = *std::min_element(peaks.begin(), peaks.end());
        hi = *std::max_element(peaks.begin(), peaks.end());
    }
    if (!(lo > 0.0) || !std::isfinite(hi)) {
        throw QuadratureError("peak locations must be positive and finite");
    }
    // Tighter per-piece tolerance so the summed error stays within rel_tol,
    // but not below the Kronrod estimate's rounding floor (about 50 eps),
    // where the adaptive refinement recurses to full depth for nothing.
    const double piece_tol = std::max(rel_tol * 1e-2, 1e-10);

    // First pass: one Kronrod rule per piece, to place the pieces and to
    // learn the scale of the whole integral.
    struct Span {
        double a;
        double b;
        Piece rough;
    };
    std::vector<Span> spans;
    CompensatedSum rough_total;
    auto add_span = [&](double a, double b) {
        const Piece p = gk_piece(f, a, b, piece_tol, 0);
        if (!std::isfinite(p.value)) {
            fail(a, b, p.error);
        }
        spans.push_back({a, b, p});
        rough_total.add(p.value);
        return p.value;
    };
    double left = lo / 4096.0;
    add_span(0.0, left);
    while (left < 2.0 * hi) {
        add_span(left, 2.0 * left);
        left *= 2.0;
    }
    int quiet = 0;
    for (int i = 0; quiet < 3; ++i) {
        if (i == kMaxTailPieces) {
            throw QuadratureError("half-line quadrature did not decay after " +
                                  std::to_string(kMaxTailPieces) + " tail pieces");
        }
        const double piece = add_span(left, 2.0 * left);
        left *= 2.0;
        quiet = std::abs(piece) <= 1e-17 * std::abs(rough_total.value()) + abs_tol * 1e-3 ? quiet + 1 : 0;
    }
    double scale = 0.0;
    for (const auto& sp : spans) {
        scale += sp.rough.l1;
    }

    // Second pass: refine only the pieces whose error matters at that scale.
    const double negligible = 1e-2 * piece_tol * scale + 1e-3 * abs_tol;
    CompensatedSum total;
    double err = 0.0;
    double l1 = 0.0;
    for (const auto& sp : spans) {
        Piece p = sp.rough;
        if (p.error > negligible) {
            p = gk_piece(f, sp.a, sp.b, piece_tol, kMaxDepth);
            if (!std::isfinite(p.value)) {
                fail(sp.a, sp.b, p.error);
            }
        }
        total.add(p.value);
        err += p.error;
        l1 += p.l1;
    }
    if (err > 10.0 * rel_tol * l1 + abs_tol) {
        throw QuadratureError("half-line quadrature error estimate " + format_double(err) +
                              " exceeds the target " + format_double(10.0 * rel_tol * l1 + abs_tol));
    }
    return {total.value(), err, static_cast<int>(spans.size())};
}

} // namespace torzeta
