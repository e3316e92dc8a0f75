// Copyright 2026 The ulab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Index-parallel loop with a serial reference path.
//
// Every kernel that fans out over grid points, starts or samples writes its result into the
// slot of its index and reduces afterwards in index order, so the parallel and serial paths
// produce bit-identical output.

#include <cstddef>
#include <cstdint>
#include <exception>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ulab {

enum class Execution { Serial, Parallel };

/// Worker count for parallel kernels: ULAB_THREADS when set to a positive value, otherwise
/// (unset or 0) the OpenMP default.
int thread_count();

template <class Fn>
void for_each_index(std::size_t n, Execution exec, Fn &&fn) {
#ifdef _OPENMP
    if (exec == Execution::Parallel && n > 1) {
        std::exception_ptr first_error;
        std::size_t first_index = std::numeric_limits<std::size_t>::max();
        const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic) num_threads(thread_count())
        for (std::int64_t i = 0; i < count; ++i) {
            try {
                fn(static_cast<std::size_t>(i));
            } catch (...) {
#pragma omp critical(ulab_for_each_index_error)
                {
                    if (static_cast<std::size_t>(i) < first_index) {
                        first_index = static_cast<std::size_t>(i);
                        first_error = std::current_exception();
                    }
                }
            }
        }
        if (first_error) std::rethrow_exception(first_error);
        return;
    }
#else
    (void)exec;
#endif
    for (std::size_t i = 0; i < n; ++i) fn(i);
}

}  // namespace ulab
