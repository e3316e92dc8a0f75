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

#include "ulab/states.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "ulab/errors.hpp"

namespace ulab {

namespace {

std::string fmt(double v) {
    std::ostringstream out;
    out.precision(12);
    out << v;
    return out.str();
}

void require_unit_interval(double value, const char *name) {
    if (!(value >= 0.0 && value <= 1.0)) {
        throw Error(ErrorCode::OutOfRange, std::string(name) + " = " + fmt(value) + " not in [0, 1]");
    }
}

ComplexMatrix bell_diagonal_matrix(const BellDiagonalParams &p) {
    ComplexMatrix m = ComplexMatrix::identity(4);
    const std::array<double, 3> t{p.t1, p.t2, p.t3};
    for (int i = 0; i < 3; ++i) m += t[i] * kron(pauli(i + 1), pauli(i + 1));
    return m * Complex(0.25);
}

}  // namespace

std::optional<std::string> XStateParams::violation(double tol) const {
    const double sum = a11 + a22 + a33 + a44;
    if (std::abs(sum - 1.0) > tol) return "normalization: a11+a22+a33+a44 = " + fmt(sum);
    for (double v : as_array()) {
        if (!std::isfinite(v)) return "non-finite parameter";
        if (v < -tol) return "non-negativity: parameter " + fmt(v) + " < 0";
    }
    if (a11 * a44 < a14 * a14 - tol) return "positivity: a11*a44 < a14^2";
    if (a22 * a33 < a23 * a23 - tol) return "positivity: a22*a33 < a23^2";
    return std::nullopt;
}

double XStateParams::max_constraint_violation() const {
    double worst = std::abs(a11 + a22 + a33 + a44 - 1.0);
    for (double v : as_array()) worst = std::max(worst, -v);
    worst = std::max({worst, a14 * a14 - a11 * a44, a23 * a23 - a22 * a33, a23 * a23 - a11 * a44,
                      a14 * a14 - a22 * a33});
    return std::max(worst, 0.0);
}

DensityMatrix::DensityMatrix(ComplexMatrix mat) : mat_(std::move(mat)) {
    if (auto problem = check(mat_)) throw Error(ErrorCode::InvalidState, *problem);
}

std::optional<std::string> DensityMatrix::check(const ComplexMatrix &mat) {
    if (mat.dim() != 2 && mat.dim() != 4 && mat.dim() != 8) {
        return "dimension " + std::to_string(mat.dim()) + " is not 2, 4 or 8";
    }
    for (const Complex &z : mat.entries()) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return "finite entries";
    }
    if (const double err = hermiticity_error(mat); err > kHermitianTolerance) {
        return "Hermiticity: max |rho - rho^dagger| = " + fmt(err);
    }
    if (const double tr = mat.trace().real(); std::abs(tr - 1.0) > 1e-10) {
        return "unit trace: trace = " + fmt(tr);
    }
    if (const double lo = hermitian_eig(mat).eigenvalues.front(); lo < -kPsdTolerance) {
        return "positive semidefinite: eigenvalue " + fmt(lo);
    }
    return std::nullopt;
}

DensityMatrix x_state(const XStateParams &p) {
    if (auto problem = p.violation()) throw Error(ErrorCode::InvalidParams, *problem);
    ComplexMatrix m(4);
    m(0, 0) = p.a11;
    m(1, 1) = p.a22;
    m(2, 2) = p.a33;
    m(3, 3) = p.a44;
    m(0, 3) = m(3, 0) = p.a14;
    m(1, 2) = m(2, 1) = p.a23;
    return DensityMatrix(std::move(m));
}

std::optional<CanonicalXState> canonicalize_x_state(const ComplexMatrix &m, double tol) {
    if (m.dim() != 4) return std::nullopt;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            const bool on_pattern = i == j || i + j == 3;
            if (!on_pattern && std::abs(m(i, j)) > tol) return std::nullopt;
        }
    }
    const Complex c14 = m(0, 3);
    const Complex c23 = m(1, 2);
    const double arg14 = std::abs(c14) > 0.0 ? std::arg(c14) : 0.0;
    const double arg23 = std::abs(c23) > 0.0 ? std::arg(c23) : 0.0;
    CanonicalXState out;
    out.params = {m(0, 0).real(), m(1, 1).real(), m(2, 2).real(), m(3, 3).real(), std::abs(c14),
                  std::abs(c23)};
    out.phase_a = 0.5 * (arg14 + arg23);
    out.phase_b = 0.5 * (arg14 - arg23);
    return out;
}

XStateParams extract_x_params(const DensityMatrix &rho) {
    auto canonical = canonicalize_x_state(rho.matrix());
    if (!canonical) throw Error(ErrorCode::InvalidParams, "state is not an X-state");
    return canonical->params;
}

double min_partial_transpose_eigenvalue(const DensityMatrix &rho) {
    return hermitian_eig(partial_transpose(rho.matrix(), Subsystem::B)).eigenvalues.front();
}

bool is_separable(const DensityMatrix &rho) { return min_partial_transpose_eigenvalue(rho) >= -kPsdTolerance; }

bool x_params_ppt(const XStateParams &p, double tol) {
    return p.a11 * p.a44 >= p.a23 * p.a23 - tol && p.a22 * p.a33 >= p.a14 * p.a14 - tol;
}

XStateParams rho_star_params() {
    const double r2 = std::numbers::sqrt2;
    const double hi = 0.25 * ((r2 + 1.0) / r2);
    const double lo = 0.25 * ((r2 - 1.0) / r2);
    const double coherence = 0.25 * (1.0 / r2);
    return {hi, hi, lo, lo, coherence, coherence};
}

DensityMatrix rho_star() { return x_state(rho_star_params()); }

DensityMatrix chi_state(double eps) {
    require_unit_interval(eps, "eps");
    return mix(rho_star(), bell_state(BellKind::PhiPlus), eps);
}

DensityMatrix noisy_star(double p) {
    require_unit_interval(p, "p");
    return mix(rho_star(), maximally_mixed(), p);
}

DensityMatrix werner(double p) {
    if (!(p >= -1.0 / 3.0 && p <= 1.0)) {
        throw Error(ErrorCode::OutOfRange, "werner p = " + fmt(p) + " not in [-1/3, 1]");
    }
    return bell_diagonal({-p, -p, -p});
}

DensityMatrix maximally_mixed() { return DensityMatrix(ComplexMatrix::identity(4) * Complex(0.25)); }

std::optional<DensityMatrix> try_bell_diagonal(const BellDiagonalParams &params) {
    ComplexMatrix m = bell_diagonal_matrix(params);
    if (hermitian_eig(m).eigenvalues.front() < -kPsdTolerance) return std::nullopt;
    return DensityMatrix(std::move(m));
}

DensityMatrix bell_diagonal(const BellDiagonalParams &params) {
    ComplexMatrix m = bell_diagonal_matrix(params);
    if (const double lo = hermitian_eig(m).eigenvalues.front(); lo < -kPsdTolerance) {
        throw Error(ErrorCode::Unphysical, "Bell-diagonal eigenvalue " + fmt(lo));
    }
    return DensityMatrix(std::move(m));
}

StateVector bell_vector(BellKind kind) {
    const double h = std::numbers::sqrt2 / 2.0;
    switch (kind) {
        case BellKind::PhiPlus:
            return {h, 0.0, 0.0, h};
        case BellKind::PhiMinus:
            return {h, 0.0, 0.0, -h};
        case BellKind::PsiPlus:
            return {0.0, h, h, 0.0};
        case BellKind::PsiMinus:
            return {0.0, h, -h, 0.0};
    }
    return {};
}

DensityMatrix bell_state(BellKind kind) { return DensityMatrix(ComplexMatrix::outer(bell_vector(kind))); }

BlochForm to_bloch(const DensityMatrix &rho) {
    const ComplexMatrix id = ComplexMatrix::identity(2);
    const ComplexMatrix &m = rho.matrix();
    BlochForm out;
    for (int i = 0; i < 3; ++i) {
        out.x[i] = trace_product_real(m, kron(pauli(i + 1), id));
        out.y[i] = trace_product_real(m, kron(id, pauli(i + 1)));
        for (int j = 0; j < 3; ++j) out.t[i][j] = trace_product_real(m, kron(pauli(i + 1), pauli(j + 1)));
    }
    return out;
}

StateVector purify_rank2(const DensityMatrix &rho) {
    const EigenDecomposition eig = hermitian_eig(rho.matrix());
    const std::size_t n = eig.eigenvalues.size();
    if (n < 3 || eig.eigenvalues[n - 3] > 1e-8) {
        throw Error(ErrorCode::RankTooHigh,
                    "third eigenvalue " + fmt(n < 3 ? 1.0 : eig.eigenvalues[n - 3]) + " exceeds 1e-8");
    }
    StateVector psi(2 * n);
    for (std::size_t c = 0; c < 2; ++c) {
        const std::size_t k = n - 1 - c;
        const double weight = std::sqrt(std::max(eig.eigenvalues[k], 0.0));
        for (std::size_t i = 0; i < n; ++i) psi[2 * i + c] = weight * eig.eigenvectors(i, k);
    }
    return psi;
}

DensityMatrix apply_local_unitaries(const DensityMatrix &rho, const ComplexMatrix &u, const ComplexMatrix &v) {
    const ComplexMatrix w = kron(u, v);
    return DensityMatrix(w * rho.matrix() * w.adjoint());
}

DensityMatrix mix(const DensityMatrix &a, const DensityMatrix &b, double w) {
    return DensityMatrix(a.matrix() * Complex(w) + b.matrix() * Complex(1.0 - w));
}

std::array<Complex, 2> random_qubit(Rng &rng) {
    std::array<Complex, 2> q;
    double norm = 0.0;
    for (Complex &z : q) {
        const double re = rng.normal();
        const double im = rng.normal();
        z = Complex(re, im);
        norm += re * re + im * im;
    }
    norm = std::sqrt(norm);
    for (Complex &z : q) z /= norm;
    return q;
}

ComplexMatrix random_unitary2(Rng &rng) {
    std::array<double, 4> g{};
    double norm = 0.0;
    for (double &v : g) {
        v = rng.normal();
        norm += v * v;
    }
    norm = std::sqrt(norm);
    const Complex a(g[0] / norm, g[1] / norm);
    const Complex b(g[2] / norm, g[3] / norm);
    return ComplexMatrix(2, {a, -std::conj(b), b, std::conj(a)});
}

DensityMatrix random_state(Rng &rng) {
    ComplexMatrix g(4);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            const double re = rng.normal();
            g(i, j) = Complex(re, rng.normal());
        }
    }
    ComplexMatrix m = g * g.adjoint();
    return DensityMatrix(m * Complex(1.0 / m.trace().real()));
}

DensityMatrix random_pure_state(Rng &rng) {
    StateVector psi(4);
    double norm = 0.0;
    for (Complex &z : psi) {
        const double re = rng.normal();
        z = Complex(re, rng.normal());
        norm += std::norm(z);
    }
    for (Complex &z : psi) z /= std::sqrt(norm);
    return DensityMatrix(ComplexMatrix::outer(psi));
}

std::vector<double> random_simplex(Rng &rng, std::size_t size) {
    std::vector<double> w(size);
    double total = 0.0;
    for (double &v : w) {
        v = rng.exponential();
        total += v;
    }
    for (double &v : w) v /= total;
    return w;
}

DensityMatrix random_separable(Rng &rng, int k) {
    if (k < 1) throw Error(ErrorCode::OutOfRange, "mixture size must be >= 1");
    const std::vector<double> weights = random_simplex(rng, static_cast<std::size_t>(k));
    ComplexMatrix m(4);
    for (double w : weights) {
        const auto a = random_qubit(rng);
        const auto b = random_qubit(rng);
        const StateVector product{a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]};
        m += ComplexMatrix::outer(product) * Complex(w);
    }
    return DensityMatrix(std::move(m));
}

DensityMatrix random_separable(std::uint64_t seed, int k) {
    Rng rng(seed);
    return random_separable(rng, k);
}

XStateParams random_x_params(Rng &rng) {
    const std::vector<double> d = random_simplex(rng, 4);
    XStateParams p{d[0], d[1], d[2], d[3], 0.0, 0.0};
    p.a14 = rng.uniform() * std::sqrt(p.a11 * p.a44);
    p.a23 = rng.uniform() * std::sqrt(p.a22 * p.a33);
    return p;
}

}  // namespace ulab
