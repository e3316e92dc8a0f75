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

// Scalar quantumness and correlation measures for two-qubit states. Entropies are in bits.

#include <array>
#include <span>
#include <vector>

#include "ulab/matcore.hpp"
#include "ulab/parallel.hpp"
#include "ulab/states.hpp"

namespace ulab {

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<std::array<double, 3>, 3>;

/// Wigner-Yanase skew information -1/2 tr([sqrt(rho), K]^2).
/// Throws DimMismatch or NonHermitian.
double skew_information(const DensityMatrix &rho, const ComplexMatrix &observable);

/// (n . sigma) (x) I
ComplexMatrix local_observable(const Vec3 &n);

/// w_ij = tr{sqrt(rho) (sigma_i (x) I) sqrt(rho) (sigma_j (x) I)}
Mat3 w_matrix(const DensityMatrix &rho);
/// Eigenvalues of a real symmetric 3x3 matrix, ascending.
Vec3 symmetric_eigenvalues(const Mat3 &m);

/// Local quantum uncertainty on A: 1 - lambda_max(W).
double lqu(const DensityMatrix &rho);

/// Entries (alpha_1 .. alpha_6) of sqrt(rho) for an X-state, built from the two 2x2 blocks.
std::array<double, 6> x_state_sqrt_alphas(const XStateParams &params);
/// Diagonal of W for an X-state from the alpha entries.
Vec3 x_state_w_diagonal(const XStateParams &params);
/// Throws InvalidParams.
double lqu_xstate_closed_form(const XStateParams &params);

/// Unit Bloch direction of the top eigenvector of W. Degenerate maxima resolve to the
/// eigenspace projection of e3, e1, e2 with the lexicographically largest (|n3|, |n1|, |n2|);
/// the first nonzero component is made positive.
Vec3 optimal_local_observable(const DensityMatrix &rho);

/// Squared Hellinger distance 1/2 tr{(sqrt(rho) - sqrt(K rho K))^2}, K = (n . sigma) (x) I.
/// Throws InvalidParams unless |n| = 1 within 1e-9.
double hellinger_check(const DensityMatrix &rho, const Vec3 &n);

double von_neumann_entropy(const ComplexMatrix &rho);
double von_neumann_entropy(const DensityMatrix &rho);
/// Throws NotADistribution.
double shannon_entropy(std::span<const double> p);
double binary_entropy(double p);

enum class NegativityScale {
    /// ||rho^T_B||_1 - 1; Bell states score 1.
    TraceNorm,
    /// (||rho^T_B||_1 - 1) / 2, the sum of |negative eigenvalues|; Bell states score 1/2.
    HalfTraceNorm,
};
double negativity(const DensityMatrix &rho, NegativityScale scale = NegativityScale::TraceNorm);

/// Wootters concurrence.
double concurrence(const DensityMatrix &rho);
double eof_from_concurrence(double c);
/// Entanglement of formation h((1 + sqrt(1 - C^2)) / 2).
double eof(const DensityMatrix &rho);

/// (|x|^2 + ||T||_F^2 - k_max) / 4 with k_max the top eigenvalue of x x^T + T T^T.
double geometric_discord(const DensityMatrix &rho);

/// S(rho_A) + S(rho_B) - S(rho_AB)
double mutual_information(const DensityMatrix &rho);

/// Sum over outcomes of p_k S(rho_B|k) for the projective measurement along n on A.
double measured_conditional_entropy_b(const DensityMatrix &rho, const Vec3 &n);

struct ClassicalCorrelation {
    double value = 0.0;
    Vec3 direction{0.0, 0.0, 1.0};
};

/// max over projective measurements on A of S(rho_B) - S(rho_B|A): 72 x 36 Bloch-sphere grid,
/// then Nelder-Mead from the best three grid points.
ClassicalCorrelation classical_correlation_ja_detail(const DensityMatrix &rho);
double classical_correlation_ja(const DensityMatrix &rho);
/// Mutual information minus J_A.
double quantum_discord_da(const DensityMatrix &rho);

struct DissonanceTerms {
    double entropy_a = 0.0;
    double entropy_ab = 0.0;
    double eof_bc = 0.0;
    double value = 0.0;
};

/// S(rho_A) - S(rho_AB) + E_F(rho_BC) via a one-qubit purification. Throws RankTooHigh.
DissonanceTerms dissonance_rank2_terms(const DensityMatrix &rho);
double dissonance_rank2(const DensityMatrix &rho);

/// LQU over a list of states, one slot per input.
std::vector<double> batch_lqu(std::span<const DensityMatrix> states, Execution exec = Execution::Parallel);

}  // namespace ulab
