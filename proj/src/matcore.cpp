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

#include "ulab/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ulab/errors.hpp"

namespace ulab {

namespace {

void require_same_dim(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.dim() != b.dim()) {
        throw Error(ErrorCode::DimMismatch,
                    "dimensions " + std::to_string(a.dim()) + " and " + std::to_string(b.dim()));
    }
}

void require_dim(const ComplexMatrix &m, std::size_t dim) {
    if (m.dim() != dim) {
        throw Error(ErrorCode::BadDim,
                    "expected dim " + std::to_string(dim) + ", got " + std::to_string(m.dim()));
    }
}

double off_diagonal_norm(const ComplexMatrix &a) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (i != j) sum += std::norm(a(i, j));
        }
    }
    return std::sqrt(sum);
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), entries_(std::move(entries)) {
    if (entries_.size() != dim_ * dim_) {
        throw Error(ErrorCode::BadDim, "expected " + std::to_string(dim_ * dim_) + " entries, got " +
                                           std::to_string(entries_.size()));
    }
    for (const Complex &z : entries_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw Error(ErrorCode::InvalidParams, "non-finite matrix entry");
        }
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
    return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> v) {
    ComplexMatrix m(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[i] * std::conj(v[j]);
    }
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
    }
    return out;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
    return t;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &rhs) {
    require_same_dim(*this, rhs);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &rhs) {
    require_same_dim(*this, rhs);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex scale) {
    for (Complex &z : entries_) z *= scale;
    return *this;
}

ComplexMatrix operator*(const ComplexMatrix &lhs, const ComplexMatrix &rhs) {
    require_same_dim(lhs, rhs);
    const std::size_t n = lhs.dim();
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const Complex a = lhs(i, k);
            if (a == Complex{}) continue;
            for (std::size_t j = 0; j < n; ++j) out(i, j) += a * rhs(k, j);
        }
    }
    return out;
}

double max_abs(const ComplexMatrix &m) {
    double best = 0.0;
    for (const Complex &z : m.entries()) best = std::max(best, std::abs(z));
    return best;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b);
    double best = 0.0;
    for (std::size_t k = 0; k < a.entries().size(); ++k) {
        best = std::max(best, std::abs(a.entries()[k] - b.entries()[k]));
    }
    return best;
}

double hermiticity_error(const ComplexMatrix &m) {
    double best = 0.0;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = i; j < m.dim(); ++j) {
            best = std::max(best, std::abs(m(i, j) - std::conj(m(j, i))));
        }
    }
    return best;
}

double trace_product_real(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b);
    double sum = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t k = 0; k < a.dim(); ++k) sum += (a(i, k) * b(k, i)).real();
    }
    return sum;
}

ComplexMatrix commutator(const ComplexMatrix &a, const ComplexMatrix &b) { return a * b - b * a; }

std::vector<Complex> EigenDecomposition::vector(std::size_t k) const {
    std::vector<Complex> v(eigenvectors.dim());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = eigenvectors(i, k);
    return v;
}

ComplexMatrix EigenDecomposition::reconstruct(const std::function<double(double)> &f) const {
    const std::size_t n = eigenvectors.dim();
    ComplexMatrix out(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double weight = f(eigenvalues[k]);
        if (weight == 0.0) continue;
        for (std::size_t i = 0; i < n; ++i) {
            const Complex vi = eigenvectors(i, k) * weight;
            for (std::size_t j = 0; j < n; ++j) out(i, j) += vi * std::conj(eigenvectors(j, k));
        }
    }
    return out;
}

ComplexMatrix EigenDecomposition::reconstruct() const {
    return reconstruct([](double x) { return x; });
}

EigenDecomposition hermitian_eig(const ComplexMatrix &h) {
    const double asym = hermiticity_error(h);
    if (asym > kHermitianTolerance) {
        throw Error(ErrorCode::NonHermitian, "max |H - H^dagger| = " + std::to_string(asym));
    }
    const std::size_t n = h.dim();
    ComplexMatrix a = h;
    for (std::size_t i = 0; i < n; ++i) {
        a(i, i) = a(i, i).real();
        for (std::size_t j = i + 1; j < n; ++j) {
            a(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(j, i) = std::conj(a(i, j));
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(n);

    constexpr int kMaxSweeps = 100;
    constexpr double kOffTolerance = 1e-14;
    for (int sweep = 0; sweep < kMaxSweeps && off_diagonal_norm(a) >= kOffTolerance; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double r = std::abs(a(p, q));
                if (r < 1e-300) continue;
                // Phase the (p,q) coupling real, then apply a real Givens rotation.
                const Complex phase = a(p, q) / r;
                const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * r);
                const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // J = [[c, s], [-s conj(phase), c conj(phase)]] on columns p, q.
                const Complex jqp = -s * std::conj(phase);
                const Complex jqq = c * std::conj(phase);
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex akp = a(k, p);
                    const Complex akq = a(k, q);
                    a(k, p) = akp * c + akq * jqp;
                    a(k, q) = akp * s + akq * jqq;
                    const Complex vkp = v(k, p);
                    const Complex vkq = v(k, q);
                    v(k, p) = vkp * c + vkq * jqp;
                    v(k, q) = vkp * s + vkq * jqq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex apk = a(p, k);
                    const Complex aqk = a(q, k);
                    a(p, k) = c * apk + std::conj(jqp) * aqk;
                    a(q, k) = s * apk + std::conj(jqq) * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });
    EigenDecomposition out{std::vector<double>(n), ComplexMatrix(n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
    }
    return out;
}

ComplexMatrix matrix_sqrt_psd(const EigenDecomposition &eig) {
    if (!eig.eigenvalues.empty() && eig.eigenvalues.front() < -kPsdTolerance) {
        throw Error(ErrorCode::NotPSD, "eigenvalue " + std::to_string(eig.eigenvalues.front()));
    }
    return eig.reconstruct([](double x) { return x <= kSqrtSnap ? 0.0 : std::sqrt(x); });
}

ComplexMatrix matrix_sqrt_psd(const ComplexMatrix &h) { return matrix_sqrt_psd(hermitian_eig(h)); }

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    const std::size_t na = a.dim();
    const std::size_t nb = b.dim();
    ComplexMatrix out(na * nb);
    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = 0; j < na; ++j) {
            const Complex aij = a(i, j);
            for (std::size_t k = 0; k < nb; ++k) {
                for (std::size_t l = 0; l < nb; ++l) out(i * nb + k, j * nb + l) = aij * b(k, l);
            }
        }
    }
    return out;
}

ComplexMatrix partial_trace(const ComplexMatrix &rho, Subsystem keep) {
    require_dim(rho, 4);
    return reduce_qubits(rho, 2, keep == Subsystem::A ? 0b10u : 0b01u);
}

ComplexMatrix partial_transpose(const ComplexMatrix &rho, Subsystem on) {
    require_dim(rho, 4);
    ComplexMatrix out(4);
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t k = 0; k < 2; ++k) {
            for (std::size_t j = 0; j < 2; ++j) {
                for (std::size_t l = 0; l < 2; ++l) {
                    out(2 * i + k, 2 * j + l) = on == Subsystem::B ? rho(2 * i + l, 2 * j + k)
                                                                   : rho(2 * j + k, 2 * i + l);
                }
            }
        }
    }
    return out;
}

ComplexMatrix reduce_qubits(const ComplexMatrix &rho, std::size_t n_qubits, unsigned keep_mask) {
    require_dim(rho, std::size_t{1} << n_qubits);
    // Bit (n_qubits - 1 - q) of a basis index belongs to qubit q.
    std::vector<unsigned> kept;
    std::vector<unsigned> traced;
    for (std::size_t q = 0; q < n_qubits; ++q) {
        const unsigned bit = 1u << (n_qubits - 1 - q);
        ((keep_mask >> (n_qubits - 1 - q)) & 1u ? kept : traced).push_back(bit);
    }
    const auto spread = [](std::size_t value, const std::vector<unsigned> &bits) {
        std::size_t index = 0;
        for (std::size_t b = 0; b < bits.size(); ++b) {
            if ((value >> (bits.size() - 1 - b)) & 1u) index |= bits[b];
        }
        return index;
    };
    const std::size_t out_dim = std::size_t{1} << kept.size();
    const std::size_t env_dim = std::size_t{1} << traced.size();
    ComplexMatrix out(out_dim);
    for (std::size_t i = 0; i < out_dim; ++i) {
        for (std::size_t j = 0; j < out_dim; ++j) {
            Complex sum = 0.0;
            for (std::size_t e = 0; e < env_dim; ++e) {
                const std::size_t env = spread(e, traced);
                sum += rho(spread(i, kept) | env, spread(j, kept) | env);
            }
            out(i, j) = sum;
        }
    }
    return out;
}

ComplexMatrix pauli(int index) {
    using namespace std::complex_literals;
    switch (index) {
        case 1:
            return ComplexMatrix(2, {0.0, 1.0, 1.0, 0.0});
        case 2:
            return ComplexMatrix(2, {0.0, -1i, 1i, 0.0});
        case 3:
            return ComplexMatrix(2, {1.0, 0.0, 0.0, -1.0});
        default:
            throw Error(ErrorCode::BadIndex, "pauli index " + std::to_string(index));
    }
}

ComplexMatrix bloch_operator(std::span<const double, 3> n) {
    using namespace std::complex_literals;
    return ComplexMatrix(2, {n[2], n[0] - 1i * n[1], n[0] + 1i * n[1], -n[2]});
}

}  // namespace ulab
