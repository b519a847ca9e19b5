#include "torzeta/summation.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

using namespace torzeta;

namespace {

std::vector<ClassTerm> random_terms(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> len(0.5, 12.0);
    std::vector<ClassTerm> terms(n);
    for (auto& t : terms) {
        t.length = len(rng);
        t.holonomy = len(rng);
        t.primitive_length = t.length;
    }
    std::sort(terms.begin(), terms.end(), [](const ClassTerm& a, const ClassTerm& b) { return a.length < b.length; });
    return terms;
}

cplx term(const ClassTerm& t) { return std::polar(std::exp(-2.5 * t.length), 3.0 * t.holonomy); }

} // namespace

TEST_CASE("compensated sum recovers cancelled digits") {
    CompensatedSum s;
    s.add(1.0);
    s.add(1e-16);
    s.add(1e-16);
    s.add(-1.0);
    CHECK(s.value() == doctest::Approx(2e-16).epsilon(1e-12));

    CompensatedSum a;
    CompensatedSum b;
    a.add(1e20);
    b.add(1.0);
    b.add(-1e20);
    a.merge(b);
    CHECK(a.value() == 1.0);
}

TEST_CASE("parallel reduction reproduces the serial sum") {
    for (std::size_t n : {std::size_t{0}, std::size_t{1}, std::size_t{2047}, std::size_t{2049}, std::size_t{50000}}) {
        const auto terms = random_terms(n, n + 1);
        const cplx serial = sum_terms_serial(std::span<const ClassTerm>(terms), term);
        const cplx parallel = sum_terms_parallel(std::span<const ClassTerm>(terms), term);
        CHECK(std::abs(serial - parallel) <= 1e-14 * std::max(std::abs(serial), 1e-300));
    }
}

TEST_CASE("parallel reduction is independent of the thread count") {
    const auto terms = random_terms(100000, 3);
    const int previous = set_thread_count(1);
    const cplx one = sum_terms_parallel(std::span<const ClassTerm>(terms), term);
    set_thread_count(2);
    const cplx two = sum_terms_parallel(std::span<const ClassTerm>(terms), term);
    set_thread_count(8);
    const cplx eight = sum_terms_parallel(std::span<const ClassTerm>(terms), term);
    set_thread_count(previous);
    CHECK(one == two);
    CHECK(one == eight);
}

TEST_CASE("pairwise block tree") {
    std::vector<ComplexAccumulator> blocks(5);
    for (int i = 0; i < 5; ++i) {
        blocks[i].add(cplx(i + 1.0, -i));
    }
    CHECK(reduce_blocks(blocks) == cplx(15.0, -10.0));
    std::vector<ComplexAccumulator> none;
    CHECK(reduce_blocks(none) == cplx(0.0));
}
