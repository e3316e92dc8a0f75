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

#include "ulab/parallel.hpp"

#include <cstdlib>
#include <string>

namespace ulab {

int thread_count() {
    int fallback = 1;
#ifdef _OPENMP
    fallback = omp_get_max_threads();
#endif
    const char *env = std::getenv("ULAB_THREADS");
    if (env == nullptr) return fallback;
    try {
        const int requested = std::stoi(env);
        return requested > 0 ? requested : fallback;
    } catch (const std::exception &) {
        return fallback;
    }
}

}  // namespace ulab
