#include "torzeta/summation.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace torzeta {

namespace {
int g_threads = 0;
}

int set_thread_count(int n) {
    const int previous = g_threads;
    g_threads = n;
#ifdef _OPENMP
    if (n > 0) {
        omp_set_num_threads(n);
    }
#endif
    return previous;
}

int thread_count() {
#ifdef _OPENMP
    return g_threads > 0 ? g_threads : omp_get_max_threads();
#else
    return 1;
#endif
}

int threads_from_environment() {
    const char* env = std::getenv("TORZETA_THREADS");
    if (env == nullptr) {
        return 0;
    }
    try {
        std::size_t used = 0;
        const int n = std::stoi(env, &used);
        return used == std::string(env).size() && n > 0 ? n : 0;
    } catch (const std::exception&) {
        return 0;
    }
}

cplx reduce_blocks(std::vector<ComplexAccumulator>& blocks) {
    if (blocks.empty()) {
        return {0.0, 0.0};
    }
    std::size_t width = blocks.size();
    while (width > 1) {
        const std::size_t half = width / 2;
        for (std::size_t i = 0; i < half; ++i) {
            blocks[i] = blocks[2 * i];
            blocks[i].merge(blocks[2 * i + 1]);
        }
        if (width % 2 == 1) {
            blocks[half] = blocks[width - 1];
        }
        width = half + width % 2;
    }
    return blocks.front().value();
}

} // namespace torzeta
