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

// Portable, seedable random source.
//
// Algorithm: the 64-bit seed is expanded with SplitMix64 into the 256-bit state of
// xoshiro256**. Uniform doubles take the top 53 bits of each output; normals use the
// Marsaglia polar method. Nothing here depends on <random> distributions, whose output
// is implementation-defined, so streams are identical across standard libraries.

#include <array>
#include <cstdint>

namespace ulab {

class Rng {
   public:
    explicit Rng(std::uint64_t seed);

    /// Independent stream for multi-start / per-sample work: seeded with seed XOR index.
    static Rng stream(std::uint64_t seed, std::uint64_t index) { return Rng(seed ^ index); }

    std::uint64_t next_u64();
    /// Uniform in [0, 1).
    double uniform();
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    /// Uniform integer in [lo, hi].
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);
    double normal();
    /// Standard exponential, used for flat Dirichlet draws.
    double exponential();

   private:
    std::array<std::uint64_t, 4> state_{};
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace ulab
