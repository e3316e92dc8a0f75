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

#include <iostream>

#include "ulab/verify.hpp"

int main() {
    const ulab::VerifyReport report = ulab::run_verification();
    bool all = true;
    for (int criterion = 1; criterion <= 10; ++criterion) {
        const std::vector<ulab::Claim> claims = report.for_criterion(criterion);
        bool pass = !claims.empty();
        for (const ulab::Claim &c : claims) pass = pass && c.pass;
        all = all && pass;
        std::cout << "criterion " << criterion << ": " << (pass ? "PASS" : "FAIL") << " (" << claims.size()
                  << " claims, group " << (claims.empty() ? "?" : claims.front().group) << ")\n";
        for (const ulab::Claim &c : claims) std::cout << "    " << c.summary_line() << "\n";
    }
    std::cout << (all ? "acceptance: all criteria pass" : "acceptance: FAILED") << "\n";
    return all ? 0 : 1;
}
