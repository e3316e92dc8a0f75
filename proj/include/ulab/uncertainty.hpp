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

// Entropic uncertainty in the presence of quantum memory B for measurements on A.

#include "ulab/matcore.hpp"
#include "ulab/states.hpp"

namespace ulab {

/// Pair of qubit observables with non-degenerate spectra (eigenvalue gap > 1e-10).
class ObservablePair {
   public:
    /// Throws DegenerateObservable or NonHermitian.
    ObservablePair(ComplexMatrix p, ComplexMatrix q);
    /// sigma_x, sigma_z
    static ObservablePair pauli_xz();

    const ComplexMatrix &p() const noexcept { return p_; }
    const ComplexMatrix &q() const noexcept { return q_; }

   private:
    ComplexMatrix p_;
    ComplexMatrix q_;
};

struct UncertaintyReport {
    double s_pb = 0.0;
    double s_qb = 0.0;
    double c = 0.0;
    double berta_bound = 0.0;
    double pati_bound = 0.0;
    /// s_pb + s_qb - pati_bound
    double gap = 0.0;
    double discord = 0.0;
    double classical_correlation = 0.0;

    double uncertainty_sum() const { return s_pb + s_qb; }
};

/// S(rho_PB) - S(rho_B), rho_PB = sum_i (Pi_i (x) I) rho (Pi_i (x) I) over the eigenprojectors of P.
/// Throws DegenerateObservable.
double measured_conditional_entropy(const DensityMatrix &rho, const ComplexMatrix &observable);

/// max_ij |<p_i|q_j>|. Throws DegenerateObservable.
double complementarity(const ComplexMatrix &p, const ComplexMatrix &q);

/// S(rho_AB) - S(rho_B)
double conditional_entropy_ab(const DensityMatrix &rho);

/// -2 log2 c(P, Q) + S(A|B)
double berta_bound(const DensityMatrix &rho, const ObservablePair &pair);
/// Berta bound + max{0, D_A - J_A}
double pati_bound(const DensityMatrix &rho, const ObservablePair &pair);

UncertaintyReport uncertainty_gap(const DensityMatrix &rho, const ObservablePair &pair);

}  // namespace ulab
