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

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "ulab/errors.hpp"
#include "ulab/matcore.hpp"
#include "ulab/states.hpp"

using namespace ulab;

namespace {

const Complex I1{0.0, 1.0};

ComplexMatrix diag(std::vector<double> values) { return ComplexMatrix::diagonal(values); }

ComplexMatrix diag4(double a, double b, double c, double d) { return diag({a, b, c, d}); }

}  // namespace

TEST_CASE("matrix construction validates shape and entries") {
    CHECK_THROWS_AS(ComplexMatrix(2, std::vector<Complex>(3)), Error);
    CHECK_THROWS_AS(ComplexMatrix(2, {1.0, 0.0, std::nan(""), 1.0}), Error);
    const ComplexMatrix m(2, {1.0, 2.0, 3.0, 4.0});
    CHECK(m(1, 0) == Complex(3.0));
    CHECK(m.trace() == Complex(5.0));
}

TEST_CASE("hermitian_eig on diagonal and Pauli inputs") {
    const EigenDecomposition d = hermitian_eig(diag4(3, 1, 4, 2));
    for (int i = 0; i < 4; ++i) CHECK(d.eigenvalues[i] == doctest::Approx(i + 1.0).epsilon(1e-14));
    CHECK(max_abs_diff(d.reconstruct(), diag4(3, 1, 4, 2)) < 1e-12);
    const EigenDecomposition x = hermitian_eig(pauli(1));
    CHECK(x.eigenvalues[0] == doctest::Approx(-1.0));
    CHECK(x.eigenvalues[1] == doctest::Approx(1.0));
    CHECK_THROWS_AS(hermitian_eig(ComplexMatrix(2, {0.0, 1.0, 0.0, 0.0})), Error);
}

TEST_CASE("hermitian_eig postconditions on random Hermitian matrices") {
    Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = trial % 2 ? 4 : 8;
        ComplexMatrix h(n);
        for (std::size_t i = 0; i < n; ++i) {
            h(i, i) = rng.normal();
            for (std::size_t j = i + 1; j < n; ++j) {
                h(i, j) = Complex(rng.normal(), rng.normal());
                h(j, i) = std::conj(h(i, j));
            }
        }
        const EigenDecomposition e = hermitian_eig(h);
        const ComplexMatrix &v = e.eigenvectors;
        CHECK(max_abs_diff(v.adjoint() * v, ComplexMatrix::identity(n)) < 1e-10);
        CHECK(max_abs_diff(h * v, v * ComplexMatrix::diagonal(e.eigenvalues)) < 1e-10);
        for (std::size_t k = 1; k < n; ++k) CHECK(e.eigenvalues[k - 1] <= e.eigenvalues[k]);
    }
}

TEST_CASE("rho* outer block has eigenvalues 0 and 1/2") {
    const XStateParams p = rho_star_params();
    const EigenDecomposition e = hermitian_eig(ComplexMatrix(2, {p.a11, p.a14, p.a14, p.a44}));
    CHECK(std::abs(e.eigenvalues[0]) < 1e-15);
    CHECK(e.eigenvalues[1] == doctest::Approx(0.5).epsilon(1e-15));
}

TEST_CASE("matrix_sqrt_psd") {
    CHECK(max_abs_diff(matrix_sqrt_psd(ComplexMatrix::identity(4)), ComplexMatrix::identity(4)) < 1e-14);
    const StateVector psi = bell_vector(BellKind::PsiMinus);
    const ComplexMatrix proj = ComplexMatrix::outer(psi);
    CHECK(max_abs_diff(matrix_sqrt_psd(proj), proj) < 1e-14);
    const ComplexMatrix s = matrix_sqrt_psd(rho_star().matrix());
    CHECK(max_abs_diff(s * s, rho_star().matrix()) < 1e-14);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            if (i != j && i + j != 3) CHECK(std::abs(s(i, j)) < 1e-15);
        }
    }
    CHECK_THROWS_AS(matrix_sqrt_psd(diag4(1, -0.1, 0, 0)), Error);
}

TEST_CASE("kron") {
    CHECK(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)) == ComplexMatrix::identity(4));
    CHECK(kron(pauli(3), ComplexMatrix::identity(2)) == diag4(1, 1, -1, -1));
    const ComplexMatrix xx = kron(pauli(1), pauli(1));
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) CHECK(xx(i, j) == Complex(i + j == 3 ? 1.0 : 0.0));
    }
}

TEST_CASE("partial_trace") {
    CHECK(partial_trace(diag4(1, 0, 0, 0), Subsystem::A) == diag({1.0, 0.0}));
    const ComplexMatrix bell = bell_state(BellKind::PhiPlus).matrix();
    CHECK(max_abs_diff(partial_trace(bell, Subsystem::A), diag({0.5, 0.5})) < 1e-15);
    CHECK(max_abs_diff(partial_trace(bell, Subsystem::B), diag({0.5, 0.5})) < 1e-15);
    const ComplexMatrix a = partial_trace(rho_star().matrix(), Subsystem::A);
    CHECK(a(0, 0).real() == doctest::Approx((2.0 + std::numbers::sqrt2) / 4.0).epsilon(1e-14));
    CHECK(a(1, 1).real() == doctest::Approx((2.0 - std::numbers::sqrt2) / 4.0).epsilon(1e-14));
    CHECK_THROWS_AS(partial_trace(ComplexMatrix::identity(2), Subsystem::A), Error);
}

TEST_CASE("partial_transpose") {
    CHECK(partial_transpose(diag4(1, 0, 0, 0), Subsystem::B) == diag4(1, 0, 0, 0));
    const ComplexMatrix bell = bell_state(BellKind::PhiPlus).matrix();
    CHECK(hermitian_eig(partial_transpose(bell, Subsystem::B)).eigenvalues[0] == doctest::Approx(-0.5));
    CHECK(hermitian_eig(partial_transpose(rho_star().matrix(), Subsystem::B)).eigenvalues[0] >= -1e-10);
    Rng rng(5);
    const ComplexMatrix r = random_state(rng).matrix();
    for (Subsystem s : {Subsystem::A, Subsystem::B}) {
        const ComplexMatrix t = partial_transpose(r, s);
        CHECK(hermiticity_error(t) < 1e-15);
        CHECK(partial_transpose(t, s) == r);
    }
    CHECK_THROWS_AS(partial_transpose(ComplexMatrix::identity(8), Subsystem::A), Error);
}

TEST_CASE("pauli algebra") {
    for (int i = 1; i <= 3; ++i) {
        CHECK(pauli(i) * pauli(i) == ComplexMatrix::identity(2));
        CHECK(pauli(i).trace() == Complex(0.0));
    }
    CHECK(max_abs_diff(pauli(1) * pauli(2), I1 * pauli(3)) == 0.0);
    CHECK_THROWS_AS(pauli(0), Error);
    CHECK_THROWS_AS(pauli(4), Error);
}

TEST_CASE("error codes carry names") {
    try {
        pauli(7);
        FAIL("expected throw");
    } catch (const Error &e) {
        CHECK(e.code() == ErrorCode::BadIndex);
        CHECK(std::string(e.what()).rfind("BadIndex", 0) == 0);
    }
}
