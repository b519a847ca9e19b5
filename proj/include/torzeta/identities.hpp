#pragma once

// Numerical verification suites for the closed-form identities between the
// zeta functions, the character layer and the trace-formula transforms. Each
// case reports its residual against its own tolerance.

#include "torzeta/zeta.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace torzeta {

struct IdentityCase {
    std::string label;
    // Ordered (key, JSON-encoded value) pairs describing the case.
    std::vector<std::pair<std::string, std::string>> params;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = true;
};

struct SuiteReport {
    std::string suite;
    double tol = 0.0;
    std::vector<IdentityCase> cases;

    double max_residual() const;
    std::size_t failures() const;
    bool pass() const { return failures() == 0; }
};

// log R(s, sigma_k) against its four-term Selberg factorization for
// k in [-4, 4] and s in {3.5, 4, 4 + 2i}. Tolerance: tol + tails.
SuiteReport ruelle_selberg_suite(const ClassTable& table, double tol, const EvalOptions& options = {});

// Routes direct / characters / Selberg for Sym^m, m <= max_sym, and direct /
// Selberg for tau_{m,n}, (m, n) <= (max_mn, max_mn). Tolerance: tol + tails.
SuiteReport decomposition_suite(const ClassTable& table, double tol, const EvalOptions& options = {},
                                int max_sym = 6, int max_mn = 3);

// Kostant character identity on random (m, n, length, theta), relative
// residual |lhs - rhs| / (1 + |lhs|).
SuiteReport kostant_suite(int samples, std::uint64_t seed, double tol, int max_weight = 8);

// Exact Casimir identity for every Weyl datum with (m, n) <= (max_weight, max_weight).
SuiteReport casimir_suite(int max_weight = 50);

// Gaussian transform on an (l, s) grid, identity-term quadrature, and the
// resolvent identity for k in `ks` at (s, s0).
struct TraceSuiteConfig {
    std::vector<double> transform_s{0.5, 1.0, 2.0, 3.0, 10.0};
    std::vector<double> transform_lengths{0.5, 1.0, 2.0, 5.0};
    std::vector<int> identity_ks{0, 1, 2, 3, 4, 5, 6};
    std::vector<double> identity_ts{0.1, 1.0, 10.0};
    std::vector<int> resolvent_ks{0, 2, 5};
    std::vector<double> resolvent_s{3.0};
    double resolvent_s0 = 4.0;
};
SuiteReport trace_suite(const ClassTable& table, double tol, const TraceSuiteConfig& config = {},
                        const EvalOptions& options = {});

std::string to_json(const SuiteReport& report);
std::string to_csv(const SuiteReport& report, bool header);

} // namespace torzeta
