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

#include "ulab/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ulab/errors.hpp"
#include "ulab/nelder_mead.hpp"

namespace ulab {

namespace {

ComplexMatrix to_complex(const Mat3 &m) {
    ComplexMatrix out(3);
    for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) out(i, j) = m[i][j];
    }
    return out;
}

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

struct BlockRoot {
    double diag_first;
    double diag_second;
    double coherence;
};

// Square root of [[p, c], [c, q]] (c >= 0) through its eigenvector slopes omega.
BlockRoot sqrt_block(double p, double q, double c) {
    const auto root = [](double x) { return x <= kSqrtSnap ? 0.0 : std::sqrt(x); };
    if (c == 0.0) return {root(p), root(q), 0.0};
    const double mean = 0.5 * (p + q);
    const double half_gap = 0.5 * (p - q);
    const double r = std::hypot(half_gap, c);
    const double s_hi = root(mean + r);
    const double s_lo = root(mean - r);
    // omega for the larger eigenvalue: (p - q + (l_hi - l_lo)) / (2c); the partner is -1/omega.
    const double omega = half_gap >= 0.0 ? (half_gap + r) / c : c / (r - half_gap);
    const double w2 = omega * omega;
    const double share_hi = w2 / (w2 + 1.0);  // omega^2 / (omega^2 + 1)
    const double share_lo = 1.0 / (w2 + 1.0);
    const double cross = omega / (w2 + 1.0);
    return {s_hi * share_hi + s_lo * share_lo, s_hi * share_lo + s_lo * share_hi, (s_hi - s_lo) * cross};
}

// Per-outcome 2x2 conditional state of B: tr_A((Pi (x) I) rho) for Pi = (I + sign n.sigma)/2.
struct Blocks {
    // blocks[a][b](k,l) = rho(2a + k, 2b + l)
    std::array<std::array<std::array<Complex, 4>, 2>, 2> r{};
};

Blocks split_blocks(const ComplexMatrix &rho) {
    Blocks b;
    for (std::size_t a = 0; a < 2; ++a) {
        for (std::size_t c = 0; c < 2; ++c) {
            for (std::size_t k = 0; k < 2; ++k) {
                for (std::size_t l = 0; l < 2; ++l) b.r[a][c][2 * k + l] = rho(2 * a + k, 2 * c + l);
            }
        }
    }
    return b;
}

// p S(M / p) for an unnormalized 2x2 Hermitian block M with trace p.
double weighted_block_entropy(const std::array<Complex, 4> &m) {
    const double p = m[0].real() + m[3].real();
    if (p <= 0.0) return 0.0;
    const double mean = 0.5 * p;
    const double r = std::hypot(0.5 * (m[0].real() - m[3].real()), std::abs(m[1]));
    double total = 0.0;
    for (double mu : {mean + r, mean - r}) {
        if (mu > 0.0) total -= mu * std::log2(mu / p);
    }
    return total;
}

double conditional_entropy_from_blocks(const Blocks &b, const Vec3 &n) {
    double total = 0.0;
    for (double sign : {1.0, -1.0}) {
        // Pi = (I + sign n.sigma)/2
        const Complex pi00 = 0.5 * (1.0 + sign * n[2]);
        const Complex pi11 = 0.5 * (1.0 - sign * n[2]);
        const Complex pi01 = 0.5 * sign * Complex(n[0], -n[1]);
        const Complex pi10 = std::conj(pi01);
        std::array<Complex, 4> m{};
        for (std::size_t e = 0; e < 4; ++e) {
            m[e] = pi00 * b.r[0][0][e] + pi01 * b.r[1][0][e] + pi10 * b.r[0][1][e] + pi11 * b.r[1][1][e];
        }
        total += weighted_block_entropy(m);
    }
    return total;
}

Vec3 direction(double theta, double phi) {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

}  // namespace

double skew_information(const DensityMatrix &rho, const ComplexMatrix &observable) {
    if (observable.dim() != rho.dim()) {
        throw Error(ErrorCode::DimMismatch, "observable dim " + std::to_string(observable.dim()) +
                                                " vs state dim " + std::to_string(rho.dim()));
    }
    if (hermiticity_error(observable) > kHermitianTolerance) {
        throw Error(ErrorCode::NonHermitian, "observable is not Hermitian");
    }
    const ComplexMatrix c = commutator(matrix_sqrt_psd(rho.matrix()), observable);
    return -0.5 * trace_product_real(c, c);
}

ComplexMatrix local_observable(const Vec3 &n) { return kron(bloch_operator(n), ComplexMatrix::identity(2)); }

Mat3 w_matrix(const DensityMatrix &rho) {
    if (rho.dim() != 4) throw Error(ErrorCode::BadDim, "W matrix needs a two-qubit state");
    const ComplexMatrix root = matrix_sqrt_psd(rho.matrix());
    const ComplexMatrix id = ComplexMatrix::identity(2);
    std::array<ComplexMatrix, 3> s;
    for (int i = 0; i < 3; ++i) s[i] = root * kron(pauli(i + 1), id);
    Mat3 w{};
    for (int i = 0; i < 3; ++i) {
        for (int j = i; j < 3; ++j) w[i][j] = w[j][i] = trace_product_real(s[i], s[j]);
    }
    return w;
}

Vec3 symmetric_eigenvalues(const Mat3 &m) {
    const std::vector<double> ev = hermitian_eig(to_complex(m)).eigenvalues;
    return {ev[0], ev[1], ev[2]};
}

double lqu(const DensityMatrix &rho) { return 1.0 - symmetric_eigenvalues(w_matrix(rho))[2]; }

std::array<double, 6> x_state_sqrt_alphas(const XStateParams &p) {
    if (auto problem = p.violation()) throw Error(ErrorCode::InvalidParams, *problem);
    const BlockRoot outer = sqrt_block(p.a11, p.a44, p.a14);
    const BlockRoot inner = sqrt_block(p.a22, p.a33, p.a23);
    return {outer.diag_first, inner.diag_first, inner.diag_second, outer.diag_second, outer.coherence,
            inner.coherence};
}

Vec3 x_state_w_diagonal(const XStateParams &p) {
    const auto [a1, a2, a3, a4, a5, a6] = x_state_sqrt_alphas(p);
    const double diagonal_part = 2.0 * (a1 * a3 + a2 * a4);
    return {diagonal_part + 4.0 * a5 * a6, diagonal_part - 4.0 * a5 * a6,
            a1 * a1 + a2 * a2 + a3 * a3 + a4 * a4 - 2.0 * a5 * a5 - 2.0 * a6 * a6};
}

double lqu_xstate_closed_form(const XStateParams &p) {
    const Vec3 w = x_state_w_diagonal(p);
    return 1.0 - std::max({w[0], w[1], w[2]});
}

Vec3 optimal_local_observable(const DensityMatrix &rho) {
    const EigenDecomposition eig = hermitian_eig(to_complex(w_matrix(rho)));
    const double top = eig.eigenvalues[2];
    // Projector onto the (possibly degenerate) top eigenspace; real because W is real symmetric.
    Mat3 projector{};
    for (std::size_t k = 0; k < 3; ++k) {
        if (top - eig.eigenvalues[k] > 1e-9) continue;
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) {
                projector[i][j] += (eig.eigenvectors(i, k) * std::conj(eig.eigenvectors(j, k))).real();
            }
        }
    }
    const auto key = [](const Vec3 &n) {
        return std::array<double, 3>{std::abs(n[2]), std::abs(n[0]), std::abs(n[1])};
    };
    Vec3 best{};
    bool found = false;
    for (std::size_t axis : {2u, 0u, 1u}) {
        Vec3 n{projector[0][axis], projector[1][axis], projector[2][axis]};
        const double norm = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
        if (norm < 1e-6) continue;
        for (double &v : n) v /= norm;
        if (!found || key(n) > key(best)) {
            best = n;
            found = true;
        }
    }
    for (double v : best) {
        if (std::abs(v) > 1e-12) {
            if (v < 0.0) {
                for (double &u : best) u = -u;
            }
            break;
        }
    }
    return best;
}

double hellinger_check(const DensityMatrix &rho, const Vec3 &n) {
    const double norm = std::sqrt(n[0] * n[0] + n[1] * n[1] + n[2] * n[2]);
    if (std::abs(norm - 1.0) > 1e-9) throw Error(ErrorCode::InvalidParams, "direction must be a unit vector");
    const ComplexMatrix k = local_observable(n);
    const ComplexMatrix disturbed = k * rho.matrix() * k;
    const ComplexMatrix diff = matrix_sqrt_psd(rho.matrix()) - matrix_sqrt_psd(disturbed);
    return 0.5 * trace_product_real(diff, diff);
}

double von_neumann_entropy(const ComplexMatrix &rho) {
    double s = 0.0;
    for (double lambda : hermitian_eig(rho).eigenvalues) s -= xlog2x(lambda);
    return std::max(s, 0.0);
}

double von_neumann_entropy(const DensityMatrix &rho) { return von_neumann_entropy(rho.matrix()); }

double shannon_entropy(std::span<const double> p) {
    double total = 0.0;
    for (double v : p) {
        if (!(v >= -1e-12)) throw Error(ErrorCode::NotADistribution, "negative probability");
        total += v;
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw Error(ErrorCode::NotADistribution, "probabilities sum to " + std::to_string(total));
    }
    double h = 0.0;
    for (double v : p) h -= xlog2x(v);
    return std::max(h, 0.0);
}

double binary_entropy(double p) { return -xlog2x(p) - xlog2x(1.0 - p); }

double negativity(const DensityMatrix &rho, NegativityScale scale) {
    double trace_norm = 0.0;
    for (double lambda : hermitian_eig(partial_transpose(rho.matrix(), Subsystem::B)).eigenvalues) {
        trace_norm += std::abs(lambda);
    }
    const double n = std::max(trace_norm - 1.0, 0.0);
    return scale == NegativityScale::TraceNorm ? n : 0.5 * n;
}

double concurrence(const DensityMatrix &rho) {
    if (rho.dim() != 4) throw Error(ErrorCode::BadDim, "concurrence needs a two-qubit state");
    const ComplexMatrix yy = kron(pauli(2), pauli(2));
    ComplexMatrix conj_rho = rho.matrix();
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) conj_rho(i, j) = std::conj(conj_rho(i, j));
    }
    const ComplexMatrix tilde = yy * conj_rho * yy;
    const ComplexMatrix root = matrix_sqrt_psd(rho.matrix());
    ComplexMatrix r = root * tilde * root;
    r = (r + r.adjoint()) * Complex(0.5);
    std::vector<double> ev = hermitian_eig(r).eigenvalues;
    for (double &v : ev) v = std::sqrt(std::max(v, 0.0));
    std::sort(ev.begin(), ev.end(), std::greater<>());
    return std::clamp(ev[0] - ev[1] - ev[2] - ev[3], 0.0, 1.0);
}

double eof_from_concurrence(double c) {
    if (c <= 0.0) return 0.0;
    return binary_entropy(0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - c * c))));
}

double eof(const DensityMatrix &rho) { return eof_from_concurrence(concurrence(rho)); }

double geometric_discord(const DensityMatrix &rho) {
    const BlochForm bloch = to_bloch(rho);
    Mat3 k{};
    double x_norm2 = 0.0;
    double t_norm2 = 0.0;
    for (int i = 0; i < 3; ++i) {
        x_norm2 += bloch.x[i] * bloch.x[i];
        for (int j = 0; j < 3; ++j) {
            t_norm2 += bloch.t[i][j] * bloch.t[i][j];
            k[i][j] = bloch.x[i] * bloch.x[j];
            for (int m = 0; m < 3; ++m) k[i][j] += bloch.t[i][m] * bloch.t[j][m];
        }
    }
    return std::max(0.25 * (x_norm2 + t_norm2 - symmetric_eigenvalues(k)[2]), 0.0);
}

double mutual_information(const DensityMatrix &rho) {
    return von_neumann_entropy(partial_trace(rho.matrix(), Subsystem::A)) +
           von_neumann_entropy(partial_trace(rho.matrix(), Subsystem::B)) - von_neumann_entropy(rho);
}

double measured_conditional_entropy_b(const DensityMatrix &rho, const Vec3 &n) {
    if (rho.dim() != 4) throw Error(ErrorCode::BadDim, "measurement needs a two-qubit state");
    return conditional_entropy_from_blocks(split_blocks(rho.matrix()), n);
}

ClassicalCorrelation classical_correlation_ja_detail(const DensityMatrix &rho) {
    if (rho.dim() != 4) throw Error(ErrorCode::BadDim, "J_A needs a two-qubit state");
    constexpr int kAzimuth = 72;
    constexpr int kPolar = 36;
    const Blocks blocks = split_blocks(rho.matrix());
    const auto objective = [&](std::span<const double> angles) {
        return conditional_entropy_from_blocks(blocks, direction(angles[0], angles[1]));
    };

    struct GridPoint {
        double value;
        double theta;
        double phi;
    };
    std::vector<GridPoint> grid;
    grid.reserve(kAzimuth * kPolar);
    for (int j = 0; j < kPolar; ++j) {
        const double theta = std::numbers::pi * j / kPolar;
        for (int i = 0; i < kAzimuth; ++i) {
            const double phi = 2.0 * std::numbers::pi * i / kAzimuth;
            const std::array<double, 2> angles{theta, phi};
            grid.push_back({objective(angles), theta, phi});
        }
    }
    std::stable_sort(grid.begin(), grid.end(),
                     [](const GridPoint &a, const GridPoint &b) { return a.value < b.value; });

    double best_value = grid.front().value;
    Vec3 best_direction = direction(grid.front().theta, grid.front().phi);
    const std::array<double, 2> steps{std::numbers::pi / kPolar / 2.0, std::numbers::pi / kAzimuth};
    NelderMeadOptions options;
    options.diameter_tolerance = 1e-9;
    options.max_iterations = 500;
    for (std::size_t s = 0; s < 3 && s < grid.size(); ++s) {
        const NelderMeadResult refined = nelder_mead(objective, {grid[s].theta, grid[s].phi}, steps, options);
        if (refined.value < best_value) {
            best_value = refined.value;
            best_direction = direction(refined.x[0], refined.x[1]);
        }
    }
    const double entropy_b = von_neumann_entropy(partial_trace(rho.matrix(), Subsystem::B));
    return {entropy_b - best_value, best_direction};
}

double classical_correlation_ja(const DensityMatrix &rho) { return classical_correlation_ja_detail(rho).value; }

double quantum_discord_da(const DensityMatrix &rho) { return mutual_information(rho) - classical_correlation_ja(rho); }

DissonanceTerms dissonance_rank2_terms(const DensityMatrix &rho) {
    const StateVector psi = purify_rank2(rho);
    const ComplexMatrix abc = ComplexMatrix::outer(psi);
    const DensityMatrix bc(reduce_qubits(abc, 3, 0b011u));
    DissonanceTerms t;
    t.entropy_a = von_neumann_entropy(partial_trace(rho.matrix(), Subsystem::A));
    t.entropy_ab = von_neumann_entropy(rho);
    t.eof_bc = eof(bc);
    t.value = t.entropy_a - t.entropy_ab + t.eof_bc;
    return t;
}

double dissonance_rank2(const DensityMatrix &rho) { return dissonance_rank2_terms(rho).value; }

std::vector<double> batch_lqu(std::span<const DensityMatrix> states, Execution exec) {
    std::vector<double> out(states.size());
    for_each_index(states.size(), exec, [&](std::size_t i) { out[i] = lqu(states[i]); });
    return out;
}

}  // namespace ulab
