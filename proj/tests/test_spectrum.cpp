#include "torzeta/errors.hpp"
#include "torzeta/spectrum.hpp"

#include <doctest.h>

#include <cmath>
#include <functional>
#include <sstream>

using namespace torzeta;

namespace {

LengthSpectrum from_csv(const std::string& text, LoadOptions options = {}) {
    std::istringstream in(text);
    return load_spectrum(in, SpectrumFormat::csv, options);
}

LengthSpectrum from_json(const std::string& text) {
    std::istringstream in(text);
    return load_spectrum(in, SpectrumFormat::json);
}

std::string error_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const SpectrumError& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST_CASE("reduce_angle wraps and snaps") {
    CHECK(reduce_angle(0.0) == 0.0);
    CHECK(reduce_angle(kTwoPi) == 0.0);
    CHECK(reduce_angle(-1e-13) == 0.0);
    CHECK(reduce_angle(kTwoPi - 1e-13) == 0.0);
    CHECK(reduce_angle(-1.0) == doctest::Approx(kTwoPi - 1.0));
    CHECK(reduce_angle(3.0 * kTwoPi + 0.5) == doctest::Approx(0.5));
}

TEST_CASE("construction validates invariants") {
    CHECK_THROWS_AS(LengthSpectrum({{0.0, 0.0, 1}}, 2.0), SpectrumError);
    CHECK_THROWS_AS(LengthSpectrum({{1.0, kTwoPi, 1}}, 2.0), SpectrumError);
    CHECK_THROWS_AS(LengthSpectrum({{1.0, -0.1, 1}}, 2.0), SpectrumError);
    CHECK_THROWS_AS(LengthSpectrum({{1.0, 0.0, 0}}, 2.0), SpectrumError);
    CHECK_THROWS_AS(LengthSpectrum({{3.0, 0.0, 1}}, 2.0), SpectrumError);
    CHECK_THROWS_AS(LengthSpectrum({}, 0.0), SpectrumError);
    CHECK_THROWS_AS(LengthSpectrum({}, 1.0, -1.0), SpectrumError);
    // 100 classes at length 0.1 exceed 10 e^{0.2}.
    CHECK_THROWS_AS(LengthSpectrum({{0.1, 0.0, 100}}, 1.0), SpectrumError);
    CHECK_NOTHROW(LengthSpectrum({{0.1, 0.0, 100}}, 1.0, 100.0));
}

TEST_CASE("entries are sorted and summarized") {
    const LengthSpectrum s({{2.0, 1.0, 2}, {1.0, 0.5, 1}, {2.0, 0.2, 1}}, 3.0, 10.0, 1.5);
    REQUIRE(s.entries().size() == 3);
    CHECK(s.entries()[0].length == 1.0);
    CHECK(s.entries()[1].holonomy == 0.2);
    CHECK(s.systole() == 1.0);
    CHECK(s.total_multiplicity() == 4);
    CHECK(*s.volume() == 1.5);
    CHECK(counting_function(s, 0.5) == 0);
    CHECK(counting_function(s, 1.0) == 1);
    CHECK(counting_function(s, 3.0) == 4);
    CHECK_THROWS_WITH_AS(counting_function(s, 3.5), doctest::Contains("beyond completeness radius"),
                         SpectrumError);
}

TEST_CASE("empty spectrum") {
    const LengthSpectrum s({}, 5.0);
    CHECK(s.empty());
    CHECK(s.systole() == 5.0);
    CHECK(counting_function(s, 5.0) == 0);
    CHECK(iterate_classes(s, 20.0).empty());
}

TEST_CASE("growth certification") {
    const LengthSpectrum s({{1.0, 0.0, 3}, {1.5, 0.0, 4}}, 2.0, 10.0);
    CHECK(s.growth_sup(2.0) == doctest::Approx(std::max(3.0 * std::exp(-2.0), 7.0 * std::exp(-3.0))));
    CHECK(s.certifies_growth(2.0));
    CHECK(s.certifies_growth(1.0));
    CHECK_FALSE(s.certifies_growth(-2.0));
}

TEST_CASE("truncation keeps the prefix") {
    const LengthSpectrum s({{1.0, 0.0, 1}, {2.0, 0.0, 1}, {3.0, 0.0, 1}}, 3.0);
    const auto t = s.truncated(2.5);
    CHECK(t.cutoff() == 2.5);
    CHECK(t.entries().size() == 2);
    CHECK(t.growth_constant() == s.growth_constant());
}

TEST_CASE("iterate_classes enumerates powers in order") {
    const LengthSpectrum s({{1.0, 2.0, 1}, {1.5, 0.0, 2}}, 2.0);
    const auto terms = iterate_classes(s, 4.0);
    // Powers 1..4 of l = 1 and 1..2 of l = 1.5.
    REQUIRE(terms.size() == 6);
    for (std::size_t i = 1; i < terms.size(); ++i) {
        CHECK(terms[i - 1].length <= terms[i].length);
    }
    const auto& third = terms[2];
    CHECK(third.length == 2.0);
    CHECK(third.power == 2);
    CHECK(third.holonomy == doctest::Approx(4.0));
    CHECK(terms.back().length == 4.0);
    CHECK(terms.back().holonomy == doctest::Approx(reduce_angle(8.0)));
    CHECK(terms[1].weight == 2.0);
    CHECK(terms[1].primitive_length == 1.5);
}

TEST_CASE("CSV loading") {
    const auto s = from_csv("length,theta,multiplicity\n1.0,0.5,2\n2.5,0.1\n", {.cutoff = 3.0});
    CHECK(s.entries().size() == 2);
    CHECK(s.cutoff() == 3.0);
    CHECK(s.total_multiplicity() == 3);

    const auto implicit = from_csv("length,theta,multiplicity\n1.0,0.5\n2.5,0.1\n");
    CHECK(implicit.cutoff() == 2.5);

    CHECK(error_of([] { from_csv("length,theta,multiplicity\n-1,0.5,1\n"); }) ==
          "nonpositive length at line 2");
    CHECK(error_of([] { from_csv("length,theta,multiplicity\n1,7,1\n"); })
              .find("line 2") != std::string::npos);
    CHECK(error_of([] { from_csv("length,theta,multiplicity\n1,0,0\n"); })
              .find("line 2") != std::string::npos);
    CHECK(error_of([] { from_csv("length,theta,multiplicity\n1,0,1\nx,0,1\n"); })
              .find("line 3") != std::string::npos);
    CHECK(error_of([] { from_csv("length,theta,multiplicity\n1\n"); })
              .find("line 2") != std::string::npos);
    CHECK(error_of([] { from_csv("l,t,m\n1,0,1\n"); }).find("header") != std::string::npos);
    CHECK(error_of([] { from_csv("length,theta,multiplicity\n5,0,1\n", {.cutoff = 3.0}); })
              .find("cutoff") != std::string::npos);
    CHECK_THROWS_AS(from_csv("length,theta,multiplicity\n"), SpectrumError);
}

TEST_CASE("JSON loading") {
    const auto s = from_json(R"({"cutoff": 4, "systole": 1, "growth_constant": 5, "volume": 2,
                                 "entries": [[2, 0.3, 1], [1, 0.1]]})");
    CHECK(s.systole() == 1.0);
    CHECK(s.growth_constant() == 5.0);
    CHECK(*s.volume() == 2.0);
    CHECK_THROWS_AS(from_json(R"({"entries": []})"), SpectrumError);
    CHECK_THROWS_AS(from_json(R"({"cutoff": 4, "systole": 2, "entries": [[1, 0]]})"), SpectrumError);
    CHECK_THROWS_AS(from_json(R"({"cutoff": 4, "entries": [[1]]})"), SpectrumError);
    CHECK_THROWS_AS(from_json("[1, 2]"), SpectrumError);
    CHECK_THROWS_AS(from_json("{"), SpectrumError);
}

TEST_CASE("manifest round trip is exact and byte-stable") {
    const LengthSpectrum s({{1.0 / 3.0, 0.1234567890123, 2}, {std::sqrt(2.0), 6.2, 1}}, 2.0, 10.0, 0.9427);
    const std::string text = serialize_spectrum(s);
    const auto back = from_json(text);
    CHECK(back == s);
    CHECK(serialize_spectrum(back) == text);
}

TEST_CASE("density profile parsing") {
    const auto p = DensityProfile::parse("poisson-linear:3");
    CHECK(p.kind == DensityKind::poisson_linear);
    CHECK(p.rate == 3.0);
    const auto c = DensityProfile::parse("capped-exp:1.5,1000");
    CHECK(c.kind == DensityKind::capped_exponential);
    CHECK(c.exponent == 1.5);
    CHECK(c.max_count == 1000);
    CHECK_THROWS_AS(DensityProfile::parse("poisson-linear"), std::invalid_argument);
    CHECK_THROWS_AS(DensityProfile::parse("poisson-linear:-1"), std::invalid_argument);
    CHECK_THROWS_AS(DensityProfile::parse("capped-exp:3,10"), std::invalid_argument);
    CHECK_THROWS_AS(DensityProfile::parse("capped-exp:1"), std::invalid_argument);
    CHECK_THROWS_AS(DensityProfile::parse("uniform:1"), std::invalid_argument);
}

TEST_CASE("synthetic spectra are deterministic and certified") {
    const auto profile = DensityProfile::parse("poisson-linear:3");
    const auto a = generate_synthetic(7, 1.0, 8.0, profile);
    const auto b = generate_synthetic(7, 1.0, 8.0, profile);
    const auto c = generate_synthetic(8, 1.0, 8.0, profile);
    CHECK(a == b);
    CHECK_FALSE(a == c);
    CHECK(a.systole() == 1.0);
    CHECK(a.cutoff() == 8.0);
    CHECK(a.certifies_growth(2.0));
    CHECK(a.growth_constant() >= 1.0);
}

TEST_CASE("synthetic counts follow the intensity") {
    const auto profile = DensityProfile::parse("capped-exp:1.5,100000");
    const double expected = expected_count(profile, 1.0, 7.0);
    const auto s = generate_synthetic(11, 1.0, 7.0, profile);
    const double n = static_cast<double>(s.total_multiplicity());
    CHECK(std::abs(n - expected) < 5.0 * std::sqrt(expected));
    CHECK(s.certifies_growth(1.5 + 1e-9) == (s.growth_sup(1.5) <= s.growth_constant()));
}

TEST_CASE("synthetic generation refuses oversized requests") {
    const auto profile = DensityProfile::parse("capped-exp:2,1000");
    CHECK_THROWS_WITH_AS(generate_synthetic(1, 1.0, 10.0, profile), doctest::Contains("cutoff <="),
                         std::invalid_argument);
    CHECK_THROWS_AS(generate_synthetic(1, 2.0, 1.0, profile), std::invalid_argument);
}
