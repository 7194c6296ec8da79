#pragma once

// Data-parallel map and deterministic reduction.
//
// Every kernel in the library evaluates independent terms with map() and folds
// them with pairwise_sum(), whose tree shape depends only on the term count.
// The OpenMP and serial paths therefore produce bitwise identical results.

#include <cstddef>
#include <cstdlib>
#include <exception>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include <omp.h>

namespace efl {

enum class Exec { Serial, Parallel };

/// Thread cap from EFL_THREADS (unset or invalid: OpenMP default).
inline int thread_count() {
    if (const char* env = std::getenv("EFL_THREADS")) {
        const int n = std::atoi(env);
        if (n > 0) return n;
    }
    return omp_get_max_threads();
}

template <class T, class F>
std::vector<T> map(std::size_t n, F&& f, Exec exec = Exec::Parallel) {
    std::vector<T> out(n);
    if (exec == Exec::Serial) {
        for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
        return out;
    }
    // exceptions cannot leave the parallel region; keep the one from the lowest index
    const long long count = static_cast<long long>(n);
    std::exception_ptr error;
    long long error_index = std::numeric_limits<long long>::max();
#pragma omp parallel for schedule(dynamic, 4) num_threads(thread_count())
    for (long long i = 0; i < count; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(efl_map_error)
            if (i < error_index) {
                error_index = i;
                error = std::current_exception();
            }
        }
    }
    if (error) std::rethrow_exception(error);
    return out;
}

template <class T>
T pairwise_sum(std::span<const T> v) {
    if (v.empty()) return T{};
    if (v.size() <= 8) {
        T acc = v[0];
        for (std::size_t i = 1; i < v.size(); ++i) acc += v[i];
        return acc;
    }
    const std::size_t half = v.size() / 2;
    return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

template <class T>
T pairwise_sum(const std::vector<T>& v) {
    return pairwise_sum(std::span<const T>(v));
}

}  // namespace efl
