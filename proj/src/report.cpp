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

#include "ulab/report.hpp"

#include "ulab/format.hpp"
#include "ulab/measures.hpp"
#include "ulab/state_io.hpp"
#include "ulab/uncertainty.hpp"

namespace ulab {

nlohmann::json MeasureReport::to_json() const {
    nlohmann::json values = nlohmann::json::object();
    for (const auto &[name, v] : measures) values[name] = round_significant(v, kJsonDigits);
    nlohmann::json tols = nlohmann::json::object();
    for (const auto &[name, v] : tolerances) tols[name] = v;
    return {{"state_fingerprint", state_fingerprint},
            {"measures", std::move(values)},
            {"tolerances", std::move(tols)},
            {"metadata", metadata}};
}

MeasureReport measure_report(const DensityMatrix &rho, nlohmann::json metadata) {
    MeasureReport r;
    r.state_fingerprint = state_fingerprint(rho);
    r.metadata = std::move(metadata);
    const ClassicalCorrelation classical = classical_correlation_ja_detail(rho);
    const double mi = mutual_information(rho);
    r.measures = {
        {"lqu", lqu(rho)},
        {"gd", geometric_discord(rho)},
        {"negativity", negativity(rho)},
        {"concurrence", concurrence(rho)},
        {"eof", eof(rho)},
        {"discord", mi - classical.value},
        {"classical_correlation", classical.value},
        {"mutual_information", mi},
        {"entropy_ab", von_neumann_entropy(rho)},
        {"entropy_a", von_neumann_entropy(partial_trace(rho.matrix(), Subsystem::A))},
        {"entropy_b", von_neumann_entropy(partial_trace(rho.matrix(), Subsystem::B))},
        {"conditional_entropy", conditional_entropy_ab(rho)},
    };
    const auto eig = hermitian_eig(rho.matrix()).eigenvalues;
    if (eig[1] <= 1e-8) r.measures["dissonance"] = dissonance_rank2(rho);
    r.tolerances = {{"hermitian", kHermitianTolerance}, {"psd", kPsdTolerance}, {"sqrt_snap", kSqrtSnap},
                    {"ja_simplex_diameter", 1e-9}};
    return r;
}

}  // namespace ulab
