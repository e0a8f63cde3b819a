#pragma once

#include <cstdint>
#include <exception>
#include <vector>

#include "wavefront/exec.hpp"

namespace wavefront {

/// Threads used by Parallel kernels: WAVEFRONT_THREADS when set to a
/// positive integer, otherwise the OpenMP default.
int kernel_threads();

/// Runs body(i) for i in [0, n), serially or on an OpenMP team. Exceptions are
/// captured per index and the lowest-index one is rethrown afterwards, so the
/// outcome does not depend on scheduling.
template <typename Body>
void for_each_index(std::size_t n, Exec exec, Body&& body) {
    std::vector<std::exception_ptr> errors(n);
    if (exec == Exec::Serial) {
        for (std::size_t i = 0; i < n; ++i) {
            try {
                body(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    } else {
        const auto count = static_cast<std::int64_t>(n);
        const int threads = kernel_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
        for (std::int64_t i = 0; i < count; ++i) {
            try {
                body(static_cast<std::size_t>(i));
            } catch (...) {
                errors[static_cast<std::size_t>(i)] = std::current_exception();
            }
        }
    }
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace wavefront
