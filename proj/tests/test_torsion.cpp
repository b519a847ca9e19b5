#include "torzeta/errors.hpp"
#include "torzeta/torsion.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>

using namespace torzeta;

TEST_CASE("single-class torsion ratios against mpmath") {
    const ClassTable even(LengthSpectrum({{1.0, 0.0, 1}}, 1.0));
    const auto row = torsion_ratio_even(even, 1.0, 3);
    CHECK(row.paper_index == 6);
    CHECK(row.cumulative == doctest::Approx(1.960928498045445615765328900992431594818).epsilon(1e-14));

    const ClassTable odd(LengthSpectrum({{1.0, kPi, 1}}, 1.0));
    const auto orow = torsion_ratio_odd(odd, 1.0, 2);
    CHECK(orow.paper_index == 5);
    CHECK(orow.cumulative == doctest::Approx(1.512659696626403734344793717007592623086).epsilon(1e-14));
}

TEST_CASE("bookkeeping identity for the closed forms") {
    const auto spectrum = generate_synthetic(5, 1.0, 7.0, DensityProfile::parse("poisson-linear:4"));
    const ClassTable table(spectrum);
    const double vol = 1.7;
    const double ulp_scale = 64.0 * std::numeric_limits<double>::epsilon();

    const auto even = torsion_series(table, vol, Parity::even, 30);
    CHECK(even.base_index == 4);
    double remainders = 0.0;
    for (const auto& row : even.rows) {
        remainders += row.remainder;
        const int m = row.family_index;
        const double closed = vol / kPi * (m * (m + 1) - 6) - remainders;
        CHECK(std::abs(row.cumulative - closed) <= ulp_scale * (std::abs(closed) + 1.0) * m);
        CHECK(row.paper_index == 2 * m);
    }

    const auto odd = torsion_series(table, vol, Parity::odd, 30);
    CHECK(odd.base_index == 3);
    remainders = 0.0;
    for (const auto& row : odd.rows) {
        remainders += row.remainder;
        const int m = row.family_index;
        const double closed = vol / kPi * (m * (m + 2) - 3) - remainders;
        CHECK(std::abs(row.cumulative - closed) <= ulp_scale * (std::abs(closed) + 1.0) * m);
        CHECK(row.paper_index == 2 * m + 1);
    }
}

TEST_CASE("empty spectrum gives the pure volume term") {
    const ClassTable table(LengthSpectrum({}, 10.0));
    const auto row = torsion_ratio_even(table, 2.0, 5);
    CHECK(row.cumulative == doctest::Approx(2.0 / kPi * 24.0).epsilon(1e-15));
    CHECK(row.remainder == 0.0);
    const auto bound = remainder_bound(table, 30, Parity::even);
    CHECK(bound.pass);
    CHECK(bound.sum_abs == 0.0);
}

TEST_CASE("remainders decay and tails accumulate") {
    const auto spectrum = generate_synthetic(6, 1.0, 7.0, DensityProfile::parse("poisson-linear:4"));
    const ClassTable table(spectrum);
    const auto series = torsion_series(table, 1.0, Parity::even, 12);
    for (std::size_t i = 1; i < series.rows.size(); ++i) {
        CHECK(series.rows[i].tail_bound >= series.rows[i - 1].tail_bound);
        CHECK(series.rows[i].required_cutoff <= series.rows[i - 1].required_cutoff);
    }
    CHECK(std::abs(series.rows.back().remainder) < 1e-4);
    CHECK(std::abs(series.rows.back().remainder) < std::abs(series.rows.front().remainder));
}

TEST_CASE("remainder bound certificate") {
    const ClassTable one(LengthSpectrum({{1.0, 0.0, 1}}, 1.0));
    const auto b = remainder_bound(one, 30, Parity::even);
    CHECK(b.c1 == doctest::Approx(1.581976706869326424385002005109011558547).epsilon(1e-15));
    CHECK(b.bound == doctest::Approx(0.08079025469024881907869358066245268744668).epsilon(1e-14));
    CHECK(b.pass);
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        const ClassTable table(generate_synthetic(seed, 1.0, 7.0, DensityProfile::parse("poisson-linear:4")));
        CHECK(remainder_bound(table, 30, Parity::even).pass);
        CHECK(remainder_bound(table, 30, Parity::odd).pass);
    }
}

TEST_CASE("argument validation") {
    const ClassTable table(LengthSpectrum({{1.0, 0.0, 1}}, 1.0));
    CHECK_THROWS_WITH_AS(torsion_ratio_even(table, std::nullopt, 4), doctest::Contains("volume"),
                         std::invalid_argument);
    CHECK_THROWS_AS(torsion_ratio_even(table, 1.0, 2), std::invalid_argument);
    CHECK_THROWS_AS(torsion_ratio_odd(table, 1.0, 1), std::invalid_argument);
    CHECK_THROWS_AS(fit_volume(table, 1.0, 20, 24, ParityMix::even), std::invalid_argument);
    CHECK_THROWS_AS(fit_volume(table, 1.0, 30, 20, ParityMix::both), std::invalid_argument);
    CHECK(parse_parity_mix("both") == ParityMix::both);
    CHECK_THROWS_AS(parse_parity_mix("all"), std::invalid_argument);
    // Abscissa override at the first evaluation point.
    EvalOptions opts;
    opts.abscissa = 3.0;
    const ClassTable sparse(LengthSpectrum({{1.0, 0.0, 1}}, 1.0, 100.0));
    CHECK_THROWS_AS(torsion_ratio_even(sparse, 1.0, 4, opts), DivergenceError);
}

TEST_CASE("volume fit recovers the injected volume") {
    const auto spectrum = generate_synthetic(12, 1.0, 6.0, DensityProfile::parse("capped-exp:2,100000"));
    const ClassTable table(spectrum);
    for (double v : {0.5, 1.0, 3.0}) {
        for (auto mix : {ParityMix::even, ParityMix::odd, ParityMix::both}) {
            const auto fit = fit_volume(table, v, 20, 80, mix);
            CHECK(fit.rel_error < 5e-3);
            CHECK(fit.recovered_volume == doctest::Approx(4.0 * kPi * fit.slope));
            CHECK(fit.max_residual_over_index < 1e-2);
            CHECK(fit.intercept_odd.has_value() == (mix == ParityMix::both));
        }
    }
    // The linear coefficient is vol / 2 pi for either family.
    const auto fit = fit_volume(table, 2.0, 20, 80, ParityMix::both);
    CHECK(fit.linear == doctest::Approx(2.0 / (2.0 * kPi)).epsilon(1e-4));
    CHECK(fit.points == 61);
}
