#include "torzeta/identities.hpp"

#include "torzeta/algebra.hpp"
#include "torzeta/format.hpp"
#include "torzeta/random.hpp"
#include "torzeta/trace.hpp"

#include <algorithm>
#include <cmath>

namespace torzeta {

namespace {

std::string json_int(long long v) { return std::to_string(v); }

IdentityCase make_case(std::string label, std::vector<std::pair<std::string, std::string>> params,
                       double residual, double tolerance) {
    IdentityCase c;
    c.label = std::move(label);
    c.params = std::move(params);
    c.residual = residual;
    c.tolerance = tolerance;
    c.pass = std::isfinite(residual) && residual <= tolerance;
    return c;
}

} // namespace

double SuiteReport::max_residual() const {
    double worst = 0.0;
    for (const auto& c : cases) {
        worst = std::max(worst, c.residual);
    }
    return worst;
}

std::size_t SuiteReport::failures() const {
    return static_cast<std::size_t>(
        std::count_if(cases.begin(), cases.end(), [](const IdentityCase& c) { return !c.pass; }));
}

SuiteReport ruelle_selberg_suite(const ClassTable& table, double tol, const EvalOptions& options) {
    SuiteReport report{"ruelle-selberg", tol, {}};
    const cplx points[] = {{3.5, 0.0}, {4.0, 0.0}, {4.0, 2.0}};
    for (int k = -4; k <= 4; ++k) {
        for (const cplx s : points) {
            const auto r = ruelle_selberg_residual(table, CharacterIndex(k), s, options);
            report.cases.push_back(make_case("ruelle-selberg",
                                             {{"k", json_int(k)}, {"s", format_complex(s)},
                                              {"tail_allowance", format_double(r.tail_allowance)}},
                                             r.residual, tol + r.tail_allowance));
        }
    }
    return report;
}

SuiteReport decomposition_suite(const ClassTable& table, double tol, const EvalOptions& options,
                                int max_sym, int max_mn) {
    SuiteReport report{"decomposition", tol, {}};
    for (int m = 0; m <= max_sym; ++m) {
        const double re = 2.0 + m / 2.0 + 1.5;
        for (const cplx s : {cplx(re, 0.0), cplx(re, 1.5)}) {
            const HighestWeight w{m, 0};
            const auto a = log_ruelle_rep_direct(table, w, s, options);
            const auto b = log_ruelle_rep_chars(table, m, s, options);
            const auto c = log_ruelle_rep_selberg(table, w, s, options);
            const double residual =
                std::max({std::abs(a.value - b.value), std::abs(a.value - c.value), std::abs(b.value - c.value)});
            const double tails = a.tail_bound + b.tail_bound + c.tail_bound;
            report.cases.push_back(make_case("sym-power-three-routes",
                                             {{"weight", "[" + json_int(m) + ",0]"},
                                              {"s", format_complex(s)},
                                              {"value", format_complex(a.value)},
                                              {"tail_allowance", format_double(tails)}},
                                             residual, tol + tails));
        }
    }
    for (int m = 0; m <= max_mn; ++m) {
        for (int n = 0; n <= max_mn; ++n) {
            const HighestWeight w{m, n};
            const cplx s((m + n) / 2.0 + 4.5, 0.5);
            const auto a = log_ruelle_rep_direct(table, w, s, options);
            const auto c = log_ruelle_rep_selberg(table, w, s, options);
            const double tails = a.tail_bound + c.tail_bound;
            report.cases.push_back(make_case("highest-weight-two-routes",
                                             {{"weight", "[" + json_int(m) + "," + json_int(n) + "]"},
                                              {"s", format_complex(s)},
                                              {"value", format_complex(a.value)},
                                              {"tail_allowance", format_double(tails)}},
                                             std::abs(a.value - c.value), tol + tails));
        }
    }
    return report;
}

SuiteReport kostant_suite(int samples, std::uint64_t seed, double tol, int max_weight) {
    SuiteReport report{"kostant", tol, {}};
    std::mt19937_64 rng(seed);
    for (int i = 0; i < samples; ++i) {
        const HighestWeight w{uniform_int(rng, 0, max_weight), uniform_int(rng, 0, max_weight)};
        const double length = uniform(rng, 0.1, 10.0);
        const double theta = uniform(rng, 0.0, kTwoPi);
        const auto sides = kostant_sides(w, length, theta);
        const double rel = std::abs(sides.lhs - sides.rhs) / (1.0 + std::abs(sides.lhs));
        report.cases.push_back(make_case("kostant",
                                         {{"weight", "[" + json_int(w.m) + "," + json_int(w.n) + "]"},
                                          {"length", format_double(length)},
                                          {"theta", format_double(theta)}},
                                         rel, tol));
    }
    return report;
}

SuiteReport casimir_suite(int max_weight) {
    SuiteReport report{"casimir", 0.0, {}};
    for (int m = 0; m <= max_weight; ++m) {
        for (int n = 0; n <= max_weight; ++n) {
            const HighestWeight w{m, n};
            int bad = 0;
            for (const auto& d : weyl_data(w)) {
                bad += casimir_holds(d, w) ? 0 : 1;
            }
            report.cases.push_back(make_case(
                "casimir", {{"weight", "[" + json_int(m) + "," + json_int(n) + "]"}}, bad, 0.0));
        }
    }
    return report;
}

SuiteReport trace_suite(const ClassTable& table, double tol, const TraceSuiteConfig& config,
                        const EvalOptions& options) {
    SuiteReport report{"trace", tol, {}};
    for (double s : config.transform_s) {
        for (double len : config.transform_lengths) {
            const auto r = gaussian_transform_residual(len, s);
            report.cases.push_back(make_case("gaussian-transform",
                                             {{"length", format_double(len)},
                                              {"s", format_double(s)},
                                              {"closed_form", format_double(r.closed_form)}},
                                             r.residual, tol));
        }
    }
    for (int k : config.identity_ks) {
        for (double t : config.identity_ts) {
            const double closed = identity_term(CharacterIndex(k), t, 1.0);
            const double quad = identity_term_quadrature(CharacterIndex(k), t, 1.0);
            report.cases.push_back(make_case("identity-term",
                                             {{"k", json_int(k)},
                                              {"t", format_double(t)},
                                              {"closed_form", format_double(closed)}},
                                             std::abs(closed - quad), tol));
        }
    }
    for (int k : config.resolvent_ks) {
        for (double s : config.resolvent_s) {
            const auto r = resolvent_identity_residual(table, CharacterIndex(k), s, config.resolvent_s0, options);
            report.cases.push_back(make_case("resolvent",
                                             {{"k", json_int(k)},
                                              {"s", format_double(s)},
                                              {"s0", format_double(config.resolvent_s0)},
                                              {"closed_form", format_double(r.closed_form)},
                                              {"terms", json_int(static_cast<long long>(r.terms))}},
                                             r.residual, tol));
        }
    }
    return report;
}

std::string to_json(const SuiteReport& report) {
    std::string out = "{\"suite\":" + json_quote(report.suite) + ",\"tol\":" + format_double(report.tol) +
                      ",\"cases\":[";
    for (std::size_t i = 0; i < report.cases.size(); ++i) {
        const auto& c = report.cases[i];
        out += i == 0 ? "\n" : ",\n";
        out += "{\"identity\":" + json_quote(c.label);
        for (const auto& [key, value] : c.params) {
            out += "," + json_quote(key) + ":" + value;
        }
        out += ",\"residual\":" + format_double(c.residual) + ",\"tolerance\":" + format_double(c.tolerance) +
               ",\"pass\":" + (c.pass ? "true" : "false") + "}";
    }
    out += "\n],\"max_residual\":" + format_double(report.max_residual()) +
           ",\"failures\":" + std::to_string(report.failures()) +
           ",\"pass\":" + (report.pass() ? "true" : "false") + "}";
    return out;
}

std::string to_csv(const SuiteReport& report, bool header) {
    std::string out;
    if (header) {
        out += "suite,identity,params,residual,tolerance,pass\n";
    }
    for (const auto& c : report.cases) {
        std::string params;
        for (const auto& [key, value] : c.params) {
            if (!params.empty()) {
                params += ";";
            }
            params += key + "=" + value;
        }
        std::string quoted = "\"";
        for (char ch : params) {
            quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
        }
        quoted += "\"";
        out += report.suite + "," + c.label + "," + quoted + "," + format_double(c.residual) + "," +
               format_double(c.tolerance) + "," + (c.pass ? "true" : "false") + "\n";
    }
    return out;
}

} // namespace torzeta
