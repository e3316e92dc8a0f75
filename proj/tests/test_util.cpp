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

#include <cmath>
#include <set>

#include "doctest.h"
#include "ulab/errors.hpp"
#include "ulab/format.hpp"
#include "ulab/nelder_mead.hpp"
#include "ulab/parallel.hpp"
#include "ulab/rng.hpp"

using namespace ulab;

TEST_CASE("rng streams are reproducible and distinct") {
    Rng a(1);
    Rng b(1);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
    Rng s0 = Rng::stream(9, 0);
    Rng s1 = Rng::stream(9, 1);
    CHECK(s0.next_u64() != s1.next_u64());
    Rng r(2);
    double sum = 0.0;
    double sq = 0.0;
    for (int i = 0; i < 20000; ++i) {
        const double u = r.uniform();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        const double z = r.normal();
        sum += z;
        sq += z * z;
    }
    CHECK(std::abs(sum / 20000) < 0.05);
    CHECK(sq / 20000 == doctest::Approx(1.0).epsilon(0.05));
    std::set<std::int64_t> seen;
    for (int i = 0; i < 1000; ++i) seen.insert(r.uniform_int(1, 4));
    CHECK(seen == std::set<std::int64_t>{1, 2, 3, 4});
}

TEST_CASE("nelder-mead minimizes a quadratic and respects bounds") {
    const Objective f = [](std::span<const double> x) {
        return (x[0] - 0.3) * (x[0] - 0.3) + 2.0 * (x[1] + 0.4) * (x[1] + 0.4);
    };
    const std::array<double, 2> steps{0.1, 0.1};
    const NelderMeadResult r = nelder_mead(f, {1.0, 1.0}, steps);
    CHECK(r.converged);
    CHECK(r.x[0] == doctest::Approx(0.3).epsilon(1e-8));
    CHECK(r.x[1] == doctest::Approx(-0.4).epsilon(1e-8));
    NelderMeadOptions boxed;
    boxed.lower = std::vector<double>{0.0, 0.0};
    boxed.upper = std::vector<double>{1.0, 1.0};
    const NelderMeadResult b = nelder_mead(f, {0.9, 0.9}, steps, boxed);
    CHECK(b.x[0] == doctest::Approx(0.3).epsilon(1e-8));
    CHECK(std::abs(b.x[1]) < 1e-8);
    for (std::size_t i = 1; i < r.trace.size(); ++i) CHECK(r.trace[i].second <= r.trace[i - 1].second);
}

TEST_CASE("nelder-mead treats non-finite values as infinite") {
    const Objective f = [](std::span<const double> x) { return x[0] < 0.0 ? std::nan("") : (x[0] - 1) * (x[0] - 1); };
    const std::array<double, 1> steps{0.5};
    const NelderMeadResult r = nelder_mead(f, {0.2}, steps);
    CHECK(r.x[0] == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("significant digit formatting") {
    CHECK(format_significant(0.123456789, 6) == "0.123457");
    CHECK(round_significant(0.20175207338571166, 9) == 0.201752073);
    CHECK(format_significant(1.0, 6) == "1");
}

TEST_CASE("for_each_index rethrows the lowest failing index") {
    try {
        for_each_index(100, Execution::Parallel, [](std::size_t i) {
            if (i == 17 || i == 60) throw Error(ErrorCode::BadIndex, std::to_string(i));
        });
        FAIL("expected throw");
    } catch (const Error &e) {
        CHECK(std::string(e.what()).find("17") != std::string::npos);
    }
    std::vector<int> hits(50, 0);
    for_each_index(hits.size(), Execution::Parallel, [&](std::size_t i) { hits[i] += 1; });
    CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
    CHECK(thread_count() >= 1);
}
