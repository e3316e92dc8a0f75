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

#include "ulab/uncertainty.hpp"

#include <algorithm>
#include <cmath>

#include "ulab/errors.hpp"
#include "ulab/measures.hpp"

namespace ulab {

namespace {

EigenDecomposition observable_basis(const ComplexMatrix &observable) {
    if (observable.dim() != 2) throw Error(ErrorCode::BadDim, "qubit observable must be 2x2");
    EigenDecomposition eig = hermitian_eig(observable);
    if (eig.eigenvalues[1] - eig.eigenvalues[0] <= 1e-10) {
        throw Error(ErrorCode::DegenerateObservable, "eigenvalue gap below 1e-10");
    }
    return eig;
}

}  // namespace

ObservablePair::ObservablePair(ComplexMatrix p, ComplexMatrix q) : p_(std::move(p)), q_(std::move(q)) {
    observable_basis(p_);
    observable_basis(q_);
}

ObservablePair ObservablePair::pauli_xz() { return ObservablePair(pauli(1), pauli(3)); }

double measured_conditional_entropy(const DensityMatrix &rho, const ComplexMatrix &observable) {
    const EigenDecomposition basis = observable_basis(observable);
    const ComplexMatrix id = ComplexMatrix::identity(2);
    ComplexMatrix measured(4);
    for (std::size_t k = 0; k < 2; ++k) {
        const ComplexMatrix projector = kron(ComplexMatrix::outer(basis.vector(k)), id);
        measured += projector * rho.matrix() * projector;
    }
    return von_neumann_entropy(measured) - von_neumann_entropy(partial_trace(rho.matrix(), Subsystem::B));
}

double complementarity(const ComplexMatrix &p, const ComplexMatrix &q) {
    const EigenDecomposition bp = observable_basis(p);
    const EigenDecomposition bq = observable_basis(q);
    double best = 0.0;
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            Complex overlap = 0.0;
            for (std::size_t k = 0; k < 2; ++k) overlap += std::conj(bp.eigenvectors(k, i)) * bq.eigenvectors(k, j);
            best = std::max(best, std::abs(overlap));
        }
    }
    return std::min(best, 1.0);
}

double conditional_entropy_ab(const DensityMatrix &rho) {
    return von_neumann_entropy(rho) - von_neumann_entropy(partial_trace(rho.matrix(), Subsystem::B));
}

double berta_bound(const DensityMatrix &rho, const ObservablePair &pair) {
    return -2.0 * std::log2(complementarity(pair.p(), pair.q())) + conditional_entropy_ab(rho);
}

double pati_bound(const DensityMatrix &rho, const ObservablePair &pair) {
    const double classical = classical_correlation_ja(rho);
    const double discord = mutual_information(rho) - classical;
    return berta_bound(rho, pair) + std::max(0.0, discord - classical);
}

UncertaintyReport uncertainty_gap(const DensityMatrix &rho, const ObservablePair &pair) {
    UncertaintyReport r;
    r.s_pb = measured_conditional_entropy(rho, pair.p());
    r.s_qb = measured_conditional_entropy(rho, pair.q());
    r.c = complementarity(pair.p(), pair.q());
    r.berta_bound = -2.0 * std::log2(r.c) + conditional_entropy_ab(rho);
    r.classical_correlation = classical_correlation_ja(rho);
    r.discord = mutual_information(rho) - r.classical_correlation;
    r.pati_bound = r.berta_bound + std::max(0.0, r.discord - r.classical_correlation);
    r.gap = r.s_pb + r.s_qb - r.pati_bound;
    return r;
}

}  // namespace ulab
