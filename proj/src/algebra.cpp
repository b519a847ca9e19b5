#include "torzeta/algebra.hpp"

#include <cmath>
#include <stdexcept>

namespace torzeta {

cplx character(CharacterIndex k, double theta) {
    if (k.k == 0) {
        return {1.0, 0.0};
    }
    return std::polar(1.0, static_cast<double>(k.k) * theta);
}

double adjoint_det(double length, double theta) {
    const double q = std::exp(-length);
    // 1 - 2 cos(2 theta) q + q^2 = (1 - q)^2 + 4 q sin^2(theta); the second
    // form avoids cancellation near theta = 0.
    const double s = std::sin(theta);
    return (1.0 - q) * (1.0 - q) + 4.0 * q * s * s;
}

cplx lefschetz_L(CharacterIndex k, double length, double theta) {
    return character(k, theta) * (std::exp(-length) / adjoint_det(length, theta));
}

double lefschetz_sym(CharacterIndex k, double length, double theta) {
    return 2.0 * std::cos(static_cast<double>(k.k) * theta) * std::exp(-length) /
           adjoint_det(length, theta);
}

cplx plancherel(CharacterIndex k, cplx z) {
    const double kk = static_cast<double>(k.k);
    return (kk * kk / 4.0 - z * z) / (4.0 * kPi * kPi);
}

double plancherel_integral(CharacterIndex k, double s) {
    const double kk = static_cast<double>(k.k);
    return (kk * kk * s / 4.0 - s * s * s / 3.0) / (4.0 * kPi * kPi);
}

double c_const(CharacterIndex k) {
    const double kk = static_cast<double>(k.k);
    return kk * kk / 4.0 - 1.0;
}

Rational c_const_exact(CharacterIndex k) {
    const std::int64_t kk = k.k;
    return Rational::make(kk * kk - 4, 4);
}

Rational casimir(HighestWeight w) {
    if (w.m < 0 || w.n < 0) {
        throw std::invalid_argument("highest weight entries must be nonnegative");
    }
    const std::int64_t m = w.m;
    const std::int64_t n = w.n;
    return Rational::make(m * (m + 2) + n * (n + 2), 2);
}

std::array<WeylDatum, 4> weyl_data(HighestWeight w) {
    if (w.m < 0 || w.n < 0) {
        throw std::invalid_argument("highest weight entries must be nonnegative");
    }
    const int m = w.m;
    const int n = w.n;
    return {{
        {CharacterIndex(m - n), HalfInt::from_twice(m + n + 2), +1},
        {CharacterIndex(n - m), HalfInt::from_twice(-(m + n + 2)), +1},
        {CharacterIndex(-(m + n + 2)), HalfInt::from_twice(n - m), -1},
        {CharacterIndex(m + n + 2), HalfInt::from_twice(m - n), -1},
    }};
}

bool casimir_holds(const WeylDatum& datum, HighestWeight w) {
    const Rational lambda = to_rational(datum.lambda);
    return lambda * lambda + c_const_exact(datum.q) == casimir(w);
}

std::vector<RestrictedCharacter> sym_power_restriction(int m) {
    if (m < 0) {
        throw std::invalid_argument("symmetric power must be nonnegative");
    }
    std::vector<RestrictedCharacter> out;
    out.reserve(static_cast<std::size_t>(m) + 1);
    for (int k = 0; k <= m; ++k) {
        out.push_back({CharacterIndex(m - 2 * k), HalfInt::from_twice(m - 2 * k)});
    }
    return out;
}

namespace {

// tr Sym^p(m a) with the angle taken with the given orientation.
cplx sym_trace(int p, double length, double theta) {
    cplx sum = 0.0;
    for (int j = 0; j <= p; ++j) {
        const double w = static_cast<double>(p - 2 * j);
        sum += std::polar(std::exp(w * length / 2.0), w * theta);
    }
    return sum;
}

} // namespace

cplx char_tau(HighestWeight w, double length, double theta) {
    return sym_trace(w.m, length, theta) * sym_trace(w.n, length, -theta);
}

KostantSides kostant_sides(HighestWeight w, double length, double theta) {
    KostantSides sides;
    sides.lhs = adjoint_det(length, theta) * char_tau(w, length, theta);
    sides.rhs = 0.0;
    for (const auto& d : weyl_data(w)) {
        sides.rhs += static_cast<double>(d.sign) *
                     std::polar(std::exp((d.lambda.value() - 1.0) * length),
                                static_cast<double>(d.q.k) * theta);
    }
    return sides;
}

double kostant_residual(HighestWeight w, double length, double theta) {
    const auto sides = kostant_sides(w, length, theta);
    return std::abs(sides.lhs - sides.rhs);
}

} // namespace torzeta
