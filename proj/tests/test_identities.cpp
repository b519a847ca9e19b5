#include "torzeta/identities.hpp"

#include <doctest.h>

#include "torzeta/format.hpp"

#include <json.hpp>

#include <sstream>

using namespace torzeta;

namespace {

ClassTable sample_table() {
    return ClassTable(generate_synthetic(2, 1.0, 7.0, DensityProfile::parse("poisson-linear:4")));
}

} // namespace

TEST_CASE("suites pass on a synthetic spectrum") {
    const ClassTable table = sample_table();
    const auto rs = ruelle_selberg_suite(table, 1e-11);
    CHECK(rs.cases.size() == 27);
    CHECK(rs.pass());
    const auto dec = decomposition_suite(table, 1e-11);
    CHECK(dec.cases.size() == 7 * 2 + 16);
    CHECK(dec.pass());
    const auto tr = trace_suite(table, 1e-8);
    CHECK(tr.pass());
    CHECK(kostant_suite(200, 3, 1e-11).pass());
    const auto cas = casimir_suite(10);
    CHECK(cas.cases.size() == 121);
    CHECK(cas.max_residual() == 0.0);
}

TEST_CASE("an impossible tolerance is reported per case") {
    const ClassTable table = sample_table();
    const auto tr = trace_suite(table, 1e-300);
    CHECK(tr.failures() > 0);
    CHECK_FALSE(tr.pass());
    for (const auto& c : tr.cases) {
        CHECK(c.pass == (c.residual <= c.tolerance));
    }
}

TEST_CASE("Kostant suite is reproducible from its seed") {
    const auto a = kostant_suite(50, 9, 1e-11);
    const auto b = kostant_suite(50, 9, 1e-11);
    const auto c = kostant_suite(50, 10, 1e-11);
    CHECK(to_json(a) == to_json(b));
    CHECK(to_json(a) != to_json(c));
}

TEST_CASE("JSON and CSV carry the same numbers") {
    const auto report = kostant_suite(20, 4, 1e-11);
    const auto doc = nlohmann::json::parse(to_json(report));
    CHECK(doc["suite"] == "kostant");
    REQUIRE(doc["cases"].size() == 20);
    CHECK(doc["pass"] == true);

    const std::string csv = to_csv(report, true);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "suite,identity,params,residual,tolerance,pass");
    for (std::size_t i = 0; i < 20; ++i) {
        REQUIRE(std::getline(in, line));
        const auto& c = doc["cases"][i];
        // Residual column follows the quoted params field.
        const auto close = line.rfind('"');
        std::istringstream rest(line.substr(close + 2));
        std::string residual;
        std::getline(rest, residual, ',');
        CHECK(std::stod(residual) == c["residual"].get<double>());
        CHECK(residual == format_double(report.cases[i].residual));
    }
}
