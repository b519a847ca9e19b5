#pragma once

// Series kernels over class terms. The serial path is the reference; the
// OpenMP path splits the terms into fixed-size blocks and combines the block
// partials in a fixed pairwise tree, so its result does not depend on the
// number of threads.

#include "torzeta/algebra.hpp"
#include "torzeta/spectrum.hpp"

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace torzeta {

// Neumaier's variant of Kahan summation.
struct CompensatedSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x)) {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }
    void merge(const CompensatedSum& other) {
        add(other.sum);
        add(other.comp);
    }
    double value() const { return sum + comp; }
};

struct ComplexAccumulator {
    CompensatedSum re;
    CompensatedSum im;

    void add(cplx z) {
        re.add(z.real());
        im.add(z.imag());
    }
    void merge(const ComplexAccumulator& other) {
        re.merge(other.re);
        im.merge(other.im);
    }
    cplx value() const { return {re.value(), im.value()}; }
};

enum class Execution { serial, parallel };

inline constexpr std::size_t kReductionBlock = 2048;

// Sets the OpenMP team size used by the parallel kernels (n <= 0 leaves the
// runtime default). Returns the previous setting.
int set_thread_count(int n);
int thread_count();

// Reads TORZETA_THREADS; 0 when unset or malformed.
int threads_from_environment();

// Pairwise reduction over block partials in a fixed tree shape.
cplx reduce_blocks(std::vector<ComplexAccumulator>& blocks);

template <class Term>
cplx sum_terms_serial(std::span<const ClassTerm> terms, Term&& term) {
    ComplexAccumulator acc;
    for (const auto& t : terms) {
        acc.add(term(t));
    }
    return acc.value();
}

template <class Term>
cplx sum_terms_parallel(std::span<const ClassTerm> terms, Term&& term) {
    const std::size_t n = terms.size();
    const std::size_t blocks = (n + kReductionBlock - 1) / kReductionBlock;
    if (blocks <= 1) {
        return sum_terms_serial(terms, term);
    }
    std::vector<ComplexAccumulator> partial(blocks);
    const auto nb = static_cast<std::ptrdiff_t>(blocks);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t b = 0; b < nb; ++b) {
        const std::size_t lo = static_cast<std::size_t>(b) * kReductionBlock;
        const std::size_t hi = std::min(n, lo + kReductionBlock);
        ComplexAccumulator acc;
        for (std::size_t i = lo; i < hi; ++i) {
            acc.add(term(terms[i]));
        }
        partial[static_cast<std::size_t>(b)] = acc;
    }
    return reduce_blocks(partial);
}

template <class Term>
cplx sum_terms(std::span<const ClassTerm> terms, Term&& term, Execution exec) {
    return exec == Execution::serial ? sum_terms_serial(terms, term)
                                     : sum_terms_parallel(terms, term);
}

} // namespace torzeta
