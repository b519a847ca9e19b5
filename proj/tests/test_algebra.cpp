#include "torzeta/algebra.hpp"
#include "torzeta/spectrum.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace torzeta;

TEST_CASE("adjoint determinant against mpmath") {
    CHECK(adjoint_det(1.0, 0.0) == doctest::Approx(0.399576400893728048702951954649562668516).epsilon(1e-15));
    CHECK(adjoint_det(1.0, kPi / 2.0) ==
          doctest::Approx(1.871094165579497335085047035295406138299).epsilon(1e-15));
    CHECK(lefschetz_L(CharacterIndex(0), 1.0, 0.0).real() ==
          doctest::Approx(0.9206735942077923189454135227164996028816).epsilon(1e-15));
}

TEST_CASE("adjoint determinant matches its cosine form") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> len(0.05, 12.0);
    std::uniform_real_distribution<double> ang(0.0, kTwoPi);
    for (int i = 0; i < 200; ++i) {
        const double l = len(rng);
        const double th = ang(rng);
        const double direct = 1.0 - 2.0 * std::cos(2.0 * th) * std::exp(-l) + std::exp(-2.0 * l);
        CHECK(adjoint_det(l, th) == doctest::Approx(direct).epsilon(1e-13));
        CHECK(adjoint_det(l, th) > 0.0);
    }
}

TEST_CASE("characters and symmetric Lefschetz numbers") {
    CHECK(std::abs(character(CharacterIndex(3), 0.4) - std::polar(1.0, 1.2)) < 1e-15);
    const double l = 1.3;
    const double th = 0.9;
    for (int k = -4; k <= 4; ++k) {
        const cplx sum = lefschetz_L(CharacterIndex(k), l, th) + lefschetz_L(CharacterIndex(-k), l, th);
        CHECK(std::abs(sum.imag()) < 1e-15);
        CHECK(lefschetz_sym(CharacterIndex(k), l, th) == doctest::Approx(sum.real()).epsilon(1e-14));
    }
}

TEST_CASE("Plancherel polynomial") {
    CHECK(plancherel(CharacterIndex(2), cplx(0.0)).real() ==
          doctest::Approx(0.02533029591058444286096986580243190972609).epsilon(1e-15));
    // Derivative of the integral is the polynomial.
    const CharacterIndex k(3);
    const double s = 1.7;
    const double h = 1e-5;
    const double deriv = (plancherel_integral(k, s + h) - plancherel_integral(k, s - h)) / (2.0 * h);
    CHECK(deriv == doctest::Approx(plancherel(k, cplx(s)).real()).epsilon(1e-9));
    CHECK(plancherel_integral(k, 0.0) == 0.0);
}

TEST_CASE("rationals") {
    CHECK(Rational::make(2, 4) == Rational::make(-3, -6));
    CHECK(Rational::make(1, 2) + Rational::make(1, 3) == Rational::make(5, 6));
    CHECK(Rational::make(2, 3) * Rational::make(3, 4) == Rational::make(1, 2));
    CHECK(to_rational(HalfInt::from_twice(5)) == Rational::make(5, 2));
    CHECK(HalfInt::from_twice(5).value() == 2.5);
    CHECK_THROWS(Rational::make(1, 0));
}

TEST_CASE("Weyl data for a sample weight") {
    const auto d = weyl_data({2, 1});
    CHECK(d[0].q.k == 1);
    CHECK(d[0].lambda.twice == 5);
    CHECK(d[0].sign == 1);
    CHECK(d[1].q.k == -1);
    CHECK(d[1].lambda.twice == -5);
    CHECK(d[1].sign == 1);
    CHECK(d[2].q.k == -5);
    CHECK(d[2].lambda.twice == -1);
    CHECK(d[2].sign == -1);
    CHECK(d[3].q.k == 5);
    CHECK(d[3].lambda.twice == 1);
    CHECK(d[3].sign == -1);
    CHECK_THROWS(weyl_data({-1, 0}));
}

TEST_CASE("Casimir identity holds exactly") {
    for (int m = 0; m <= 50; ++m) {
        for (int n = 0; n <= 50; ++n) {
            for (const auto& datum : weyl_data({m, n})) {
                REQUIRE(casimir_holds(datum, {m, n}));
            }
        }
    }
    // A perturbed datum must fail.
    WeylDatum wrong = weyl_data({3, 2})[0];
    wrong.q = CharacterIndex(wrong.q.k + 2);
    CHECK_FALSE(casimir_holds(wrong, {3, 2}));
}

TEST_CASE("Cartan involution swaps the data's characters") {
    const HighestWeight w{4, 1};
    const auto d = weyl_data(w);
    const auto t = weyl_data(w.theta_twisted());
    // As a set, the twisted data are the data with q negated.
    for (const auto& td : t) {
        const bool found = std::any_of(d.begin(), d.end(), [&](const WeylDatum& x) {
            return x.q.k == -td.q.k && x.lambda == td.lambda && x.sign == td.sign;
        });
        CHECK(found);
    }
    CHECK(w.dimension() == 10);
}

TEST_CASE("symmetric power restriction") {
    const auto r = sym_power_restriction(3);
    REQUIRE(r.size() == 4);
    CHECK(r[0].q.k == 3);
    CHECK(r[0].shift.twice == 3);
    CHECK(r[3].q.k == -3);
    CHECK(r[3].shift.twice == -3);
    // The restriction's character is the character of Sym^m.
    const double l = 0.8;
    const double th = 1.1;
    for (int m = 0; m <= 6; ++m) {
        cplx sum = 0.0;
        for (const auto& c : sym_power_restriction(m)) {
            sum += character(c.q, th) * std::exp(c.shift.value() * l);
        }
        CHECK(std::abs(sum - char_tau({m, 0}, l, th)) < 1e-12 * std::abs(sum));
    }
}

TEST_CASE("Kostant identity on random samples") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> weight(0, 8);
    std::uniform_real_distribution<double> len(0.1, 10.0);
    std::uniform_real_distribution<double> ang(0.0, kTwoPi);
    for (int i = 0; i < 500; ++i) {
        const HighestWeight w{weight(rng), weight(rng)};
        const double l = len(rng);
        const double th = ang(rng);
        const auto sides = kostant_sides(w, l, th);
        CHECK(std::abs(sides.lhs - sides.rhs) / (1.0 + std::abs(sides.lhs)) < 1e-11);
    }
}

TEST_CASE("Kostant identity fails with flipped signs") {
    // The identity pins the sign convention: negating every sign breaks it.
    const HighestWeight w{2, 1};
    const double l = 1.2;
    const double th = 0.7;
    cplx rhs = 0.0;
    for (const auto& d : weyl_data(w)) {
        rhs -= static_cast<double>(d.sign) * std::polar(std::exp((d.lambda.value() - 1.0) * l), d.q.k * th);
    }
    const cplx lhs = adjoint_det(l, th) * char_tau(w, l, th);
    CHECK(std::abs(lhs - rhs) > 1e-3);
}
