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

// Two-qubit state families, validation, and canonical forms.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ulab/matcore.hpp"
#include "ulab/rng.hpp"

namespace ulab {

/// Real, non-negative X-state parameters (phases already removed by local unitaries).
struct XStateParams {
    double a11 = 0.25;
    double a22 = 0.25;
    double a33 = 0.25;
    double a44 = 0.25;
    double a14 = 0.0;
    double a23 = 0.0;

    /// First violated invariant (normalization, sign, positivity), if any.
    std::optional<std::string> violation(double tol = 1e-12) const;
    /// Largest violation of positivity and PPT inequalities (0 when all hold).
    double max_constraint_violation() const;
    std::array<double, 6> as_array() const { return {a11, a22, a33, a44, a14, a23}; }
    static XStateParams from_array(const std::array<double, 6> &v) {
        return {v[0], v[1], v[2], v[3], v[4], v[5]};
    }
};

struct BellDiagonalParams {
    double t1 = 0.0;
    double t2 = 0.0;
    double t3 = 0.0;
};

struct BlochForm {
    std::array<double, 3> x{};
    std::array<double, 3> y{};
    std::array<std::array<double, 3>, 3> t{};
};

/// Hermitian, unit-trace, PSD matrix of dimension 2, 4 or 8. The constructor validates.
class DensityMatrix {
   public:
    /// Throws InvalidState naming the first violated invariant.
    explicit DensityMatrix(ComplexMatrix mat);

    const ComplexMatrix &matrix() const noexcept { return mat_; }
    std::size_t dim() const noexcept { return mat_.dim(); }

    /// First violated invariant of a candidate state, or nullopt when valid.
    static std::optional<std::string> check(const ComplexMatrix &mat);

   private:
    ComplexMatrix mat_;
};

enum class BellKind { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

using StateVector = std::vector<Complex>;

/// Throws InvalidParams naming the failed invariant.
DensityMatrix x_state(const XStateParams &params);

struct CanonicalXState {
    XStateParams params;
    /// Local phases theta (on A) and phi (on B) of diag(1, e^{i theta}) (x) diag(1, e^{i phi})
    /// that make both coherences real and non-negative.
    double phase_a = 0.0;
    double phase_b = 0.0;
};

/// Recognizes the X sparsity pattern (off-pattern entries below tol) and removes coherence
/// phases. Returns nullopt for non-X matrices.
std::optional<CanonicalXState> canonicalize_x_state(const ComplexMatrix &mat, double tol = 1e-12);
/// Throws InvalidParams when the state is not X-shaped.
XStateParams extract_x_params(const DensityMatrix &rho);

double min_partial_transpose_eigenvalue(const DensityMatrix &rho);
/// PPT test at threshold -1e-10.
bool is_separable(const DensityMatrix &rho);
/// a11 a44 >= a23^2 and a22 a33 >= a14^2.
bool x_params_ppt(const XStateParams &params, double tol = 1e-12);

XStateParams rho_star_params();
DensityMatrix rho_star();
/// eps rho* + (1 - eps) |phi+><phi+|. Throws OutOfRange.
DensityMatrix chi_state(double eps);
/// p rho* + (1 - p) I/4. Throws OutOfRange.
DensityMatrix noisy_star(double p);
/// p |psi-><psi-| + (1 - p) I/4, i.e. Bell-diagonal with T = -p I. Throws OutOfRange for p
/// outside [-1/3, 1].
DensityMatrix werner(double p);
DensityMatrix maximally_mixed();

/// (I + sum t_i sigma_i (x) sigma_i) / 4. Throws Unphysical with the offending eigenvalue.
DensityMatrix bell_diagonal(const BellDiagonalParams &params);
/// Same construction without throwing; nullopt when not PSD within 1e-10.
std::optional<DensityMatrix> try_bell_diagonal(const BellDiagonalParams &params);

StateVector bell_vector(BellKind kind);
DensityMatrix bell_state(BellKind kind);

BlochForm to_bloch(const DensityMatrix &rho);

/// sqrt(l0)|phi0>|0> + sqrt(l1)|phi1>|1> over the two largest eigenpairs; qubit order A, B, C.
/// Throws RankTooHigh if the third eigenvalue exceeds 1e-8.
StateVector purify_rank2(const DensityMatrix &rho);

/// (U (x) V) rho (U (x) V)^dagger
DensityMatrix apply_local_unitaries(const DensityMatrix &rho, const ComplexMatrix &u,
                                    const ComplexMatrix &v);
/// w a + (1 - w) b
DensityMatrix mix(const DensityMatrix &a, const DensityMatrix &b, double w);

/// Normalized qubit with each amplitude drawn from two independent normals.
std::array<Complex, 2> random_qubit(Rng &rng);
/// Haar-random SU(2) element.
ComplexMatrix random_unitary2(Rng &rng);
/// Hilbert-Schmidt random two-qubit mixed state.
DensityMatrix random_state(Rng &rng);
DensityMatrix random_pure_state(Rng &rng);
/// Flat-Dirichlet mixture of k random product pure states.
DensityMatrix random_separable(Rng &rng, int k);
DensityMatrix random_separable(std::uint64_t seed, int k);
/// Flat-simplex populations with coherences uniform up to the positivity bound.
XStateParams random_x_params(Rng &rng);
/// Point on the flat simplex of the given size.
std::vector<double> random_simplex(Rng &rng, std::size_t size);

}  // namespace ulab
