#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace torzeta {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

// Index k of the character sigma_k(theta) = exp(i k theta) of the circle M.
struct CharacterIndex {
    int k = 0;

    constexpr CharacterIndex() = default;
    constexpr explicit CharacterIndex(int value) : k(value) {}

    // Action of the nontrivial Weyl element of A: sigma_k -> sigma_{-k}.
    constexpr CharacterIndex reflected() const { return CharacterIndex(-k); }

    friend constexpr bool operator==(CharacterIndex, CharacterIndex) = default;
};

// Exact half-integer stored as twice its value.
struct HalfInt {
    std::int64_t twice = 0;

    static constexpr HalfInt from_twice(std::int64_t t) { return HalfInt{t}; }
    static constexpr HalfInt whole(std::int64_t v) { return HalfInt{2 * v}; }
    constexpr double value() const { return static_cast<double>(twice) / 2.0; }

    friend constexpr bool operator==(HalfInt, HalfInt) = default;
};

// Exact rational with positive denominator in lowest terms.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static constexpr Rational make(std::int64_t n, std::int64_t d) {
        if (d == 0) {
            throw std::invalid_argument("rational with zero denominator");
        }
        if (d < 0) {
            n = -n;
            d = -d;
        }
        const std::int64_t g = std::gcd(n, d);
        return g == 0 ? Rational{0, 1} : Rational{n / g, d / g};
    }
    constexpr double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    friend constexpr Rational operator+(Rational a, Rational b) {
        return make(a.num * b.den + b.num * a.den, a.den * b.den);
    }
    friend constexpr Rational operator*(Rational a, Rational b) {
        return make(a.num * b.num, a.den * b.den);
    }
    friend constexpr bool operator==(Rational, Rational) = default;
};

inline constexpr Rational to_rational(HalfInt h) { return Rational::make(h.twice, 2); }

// Highest weight (m, n) of tau_{m,n} = Sym^m (x) conj(Sym^n) of SL(2, C).
struct HighestWeight {
    int m = 0;
    int n = 0;

    // Cartan involution acts by swapping the entries.
    constexpr HighestWeight theta_twisted() const { return {n, m}; }
    constexpr int dimension() const { return (m + 1) * (n + 1); }

    friend constexpr bool operator==(HighestWeight, HighestWeight) = default;
};

// One term of the Kostant decomposition restricted to MA: the character
// sigma_q (x) exp((lambda - 1) alpha), carrying the sign (-1)^{length(w)}.
struct WeylDatum {
    CharacterIndex q;
    HalfInt lambda;
    int sign = 1;

    friend constexpr bool operator==(WeylDatum, WeylDatum) = default;
};

// A character of M with its A-weight shift, one summand of a restriction to MA.
struct RestrictedCharacter {
    CharacterIndex q;
    HalfInt shift;

    friend constexpr bool operator==(RestrictedCharacter, RestrictedCharacter) = default;
};

cplx character(CharacterIndex k, double theta);

// det(Id - Ad(m a)) on the negative root space for a = exp(length H) and m the
// rotation by theta: |1 - exp(-length + 2 i theta)|^2.
double adjoint_det(double length, double theta);

// sigma_k(m) exp(-length) / adjoint_det(length, theta).
cplx lefschetz_L(CharacterIndex k, double length, double theta);

// (sigma_k + sigma_{-k})(m) exp(-length) / adjoint_det: 2 cos(k theta) e^{-l} / det.
double lefschetz_sym(CharacterIndex k, double length, double theta);

// Plancherel polynomial P_{sigma_k}(z) = (k^2/4 - z^2) / (4 pi^2).
cplx plancherel(CharacterIndex k, cplx z);

// Integral of P_{sigma_k}(r) dr from 0 to s: (k^2 s / 4 - s^3 / 3) / (4 pi^2).
double plancherel_integral(CharacterIndex k, double s);

// c(sigma_k) = k^2/4 - 1.
double c_const(CharacterIndex k);
Rational c_const_exact(CharacterIndex k);

// (m(m+2) + n(n+2)) / 2.
Rational casimir(HighestWeight w);

// The four data (sigma_{tau,w}, lambda_{tau,w}, (-1)^{length(w)}), ordered
// identity, longest element, then the two length-one elements.
std::array<WeylDatum, 4> weyl_data(HighestWeight w);

// Exact check lambda^2 + c(sigma_q) == casimir(w).
bool casimir_holds(const WeylDatum& datum, HighestWeight w);

// Sym^m restricted to MA: [(m - 2k, m/2 - k) for k = 0..m].
std::vector<RestrictedCharacter> sym_power_restriction(int m);

// tr tau_{m,n}(m_gamma a_gamma).
cplx char_tau(HighestWeight w, double length, double theta);

// |adjoint_det * char_tau - sum_w sign_w sigma_q(theta) exp((lambda - 1) length)|.
double kostant_residual(HighestWeight w, double length, double theta);

// The two sides of the Kostant identity, exposed for relative residuals.
struct KostantSides {
    cplx lhs;
    cplx rhs;
};
KostantSides kostant_sides(HighestWeight w, double length, double theta);

} // namespace torzeta
