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

// Dense complex matrix kernel sized for two- and three-qubit work (dim <= 8).

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace ulab {

using Complex = std::complex<double>;

/// Square, row-major complex matrix with finite entries.
class ComplexMatrix {
   public:
    ComplexMatrix() = default;
    /// Zero matrix of the given dimension.
    explicit ComplexMatrix(std::size_t dim);
    /// Throws BadDim if entries.size() != dim*dim, InvalidParams on non-finite entries.
    ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diagonal(std::span<const double> values);
    /// |v><v|
    static ComplexMatrix outer(std::span<const Complex> v);

    std::size_t dim() const noexcept { return dim_; }
    std::span<const Complex> entries() const noexcept { return entries_; }

    Complex &operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
    const Complex &operator()(std::size_t row, std::size_t col) const {
        return entries_[row * dim_ + col];
    }

    ComplexMatrix adjoint() const;
    Complex trace() const;

    ComplexMatrix &operator+=(const ComplexMatrix &rhs);
    ComplexMatrix &operator-=(const ComplexMatrix &rhs);
    ComplexMatrix &operator*=(Complex scale);

    friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix &rhs) { return lhs += rhs; }
    friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix &rhs) { return lhs -= rhs; }
    friend ComplexMatrix operator*(ComplexMatrix lhs, Complex scale) { return lhs *= scale; }
    friend ComplexMatrix operator*(Complex scale, ComplexMatrix rhs) { return rhs *= scale; }
    friend ComplexMatrix operator*(const ComplexMatrix &lhs, const ComplexMatrix &rhs);

    bool operator==(const ComplexMatrix &other) const = default;

   private:
    std::size_t dim_ = 0;
    std::vector<Complex> entries_;
};

/// Largest entrywise modulus.
double max_abs(const ComplexMatrix &m);
/// Largest entrywise modulus of a - b. Throws DimMismatch.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);
/// max |H - H^dagger| entrywise.
double hermiticity_error(const ComplexMatrix &m);
/// Re tr(a b) without forming the product.
double trace_product_real(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix commutator(const ComplexMatrix &a, const ComplexMatrix &b);

struct EigenDecomposition {
    std::vector<double> eigenvalues;  // ascending
    ComplexMatrix eigenvectors;       // column k pairs with eigenvalues[k]

    std::vector<Complex> vector(std::size_t k) const;
    /// V diag(f(lambda)) V^dagger
    ComplexMatrix reconstruct(const std::function<double(double)> &f) const;
    ComplexMatrix reconstruct() const;
};

inline constexpr double kHermitianTolerance = 1e-10;
inline constexpr double kPsdTolerance = 1e-10;
/// Eigenvalues at or below this magnitude are treated as exact zeros by spectral square roots.
inline constexpr double kSqrtSnap = 1e-14;

/// Cyclic complex Jacobi. Throws NonHermitian when max |H - H^dagger| > 1e-10.
EigenDecomposition hermitian_eig(const ComplexMatrix &h);

/// Principal square root. Throws NotPSD if an eigenvalue is below -1e-10.
ComplexMatrix matrix_sqrt_psd(const ComplexMatrix &h);
ComplexMatrix matrix_sqrt_psd(const EigenDecomposition &eig);

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

enum class Subsystem { A, B };

/// Reduced 2x2 state of a two-qubit operator. Throws BadDim unless dim == 4.
ComplexMatrix partial_trace(const ComplexMatrix &rho, Subsystem keep);
/// Partial transpose on one qubit of a two-qubit operator. Throws BadDim unless dim == 4.
ComplexMatrix partial_transpose(const ComplexMatrix &rho, Subsystem on);

/// Traces out every qubit whose bit in `keep_mask` is clear. Qubit 0 is the most significant
/// tensor factor. Throws BadDim unless dim == 2^n_qubits.
ComplexMatrix reduce_qubits(const ComplexMatrix &rho, std::size_t n_qubits, unsigned keep_mask);

/// sigma_x, sigma_y, sigma_z for index 1, 2, 3. Throws BadIndex.
ComplexMatrix pauli(int index);

/// n . sigma for a real 3-vector n.
ComplexMatrix bloch_operator(std::span<const double, 3> n);

}  // namespace ulab
