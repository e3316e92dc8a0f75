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
#include "ulab/measures.hpp"
#include "ulab/uncertainty.hpp"

using namespace ulab;

namespace {

// Independent oracle values for chi(eps) and the noisy family with (sigma_x, sigma_z).
struct ChiOracle {
    double eps;
    double gap;
    double uncertainty_sum;
    double pati;
    double discord;
    double classical;
};

constexpr std::array<ChiOracle, 4> kChi{{
    {0.5, 0.08833192406606405, 1.0589951792536556, 0.9706632551875916, 0.3150279104406297, 0.6221611349737073},
    {0.7, 0.11654637338497786, 1.2015660161170587, 1.0850196427320808, 0.20712686869996055, 0.5230897974579487},
    {0.714, 0.11877935140389706, 1.207523285963073, 1.0887439345591758, 0.2019434570739178, 0.5167050872410599},
    {1.0, 0.20175207338571166, 1.2017520733857117, 1.0, 0.20175207338571166, 0.3991239633071446},
}};

double h4(double a, double b, double c, double d) {
    const std::array<double, 4> p{a, b, c, d};
    return shannon_entropy(p);
}

}  // namespace

TEST_CASE("observable pairs reject degenerate spectra") {
    CHECK_THROWS_AS(ObservablePair(ComplexMatrix::identity(2), pauli(3)), Error);
    CHECK_THROWS_AS(ObservablePair(pauli(1), ComplexMatrix(2)), Error);
    CHECK_NOTHROW(ObservablePair(pauli(1), pauli(2)));
}

TEST_CASE("measured conditional entropy") {
    CHECK(std::abs(measured_conditional_entropy(bell_state(BellKind::PhiPlus), pauli(3))) < 1e-12);
    const double s2 = std::numbers::sqrt2;
    for (int i = 0; i <= 10; ++i) {
        const double e = i / 10.0;
        const DensityMatrix chi = chi_state(e);
        const double p = h4((2 - s2) * e / 8, (2 - s2) * e / 8, (4 - (2 - s2) * e) / 8, (4 - (2 - s2) * e) / 8) - 1;
        const double q =
            h4((2 - s2) * e / 8, (2 + s2) * e / 8, (4 - (2 + s2) * e) / 8, (4 - (2 - s2) * e) / 8) - 1;
        CHECK(std::abs(measured_conditional_entropy(chi, pauli(1)) - p) < 1e-9);
        CHECK(std::abs(measured_conditional_entropy(chi, pauli(3)) - q) < 1e-9);
    }
    Rng rng(53);
    for (int i = 0; i < 50; ++i) {
        const DensityMatrix rho = random_state(rng);
        const Vec3 n{0.6, 0.0, 0.8};
        // S(P|B) = S(B|P) + H(p) - S(B), with p = (1 +- n.x) / 2.
        const BlochForm b = to_bloch(rho);
        const double nx = n[0] * b.x[0] + n[1] * b.x[1] + n[2] * b.x[2];
        const double s_b = von_neumann_entropy(partial_trace(rho.matrix(), Subsystem::B));
        CHECK(measured_conditional_entropy(rho, bloch_operator(n)) ==
              doctest::Approx(measured_conditional_entropy_b(rho, n) + binary_entropy(0.5 * (1 + nx)) - s_b)
                  .epsilon(1e-12));
    }
}

TEST_CASE("complementarity") {
    CHECK(complementarity(pauli(1), pauli(3)) == doctest::Approx(1 / std::numbers::sqrt2).epsilon(1e-15));
    CHECK(complementarity(pauli(3), pauli(3)) == doctest::Approx(1.0).epsilon(1e-15));
    const ComplexMatrix rotated = (pauli(1) + pauli(3)) * Complex(1 / std::numbers::sqrt2);
    CHECK(complementarity(pauli(3), rotated) == doctest::Approx(std::cos(std::numbers::pi / 8)).epsilon(1e-14));
}

TEST_CASE("entropic bounds") {
    const ObservablePair xz = ObservablePair::pauli_xz();
    CHECK(std::abs(berta_bound(bell_state(BellKind::PhiPlus), xz)) < 1e-12);
    CHECK(berta_bound(maximally_mixed(), xz) == doctest::Approx(2.0).epsilon(1e-14));
    const DensityMatrix star = rho_star();
    const double s_b = von_neumann_entropy(partial_trace(star.matrix(), Subsystem::B));
    CHECK(berta_bound(star, xz) == doctest::Approx(1 + (1 - s_b)).epsilon(1e-12));
    CHECK(pati_bound(bell_state(BellKind::PhiPlus), xz) == doctest::Approx(berta_bound(bell_state(BellKind::PhiPlus), xz)));
    const DensityMatrix prod(ComplexMatrix::diagonal(std::vector<double>{0.7, 0.3, 0, 0}));
    CHECK(pati_bound(prod, xz) == doctest::Approx(berta_bound(prod, xz)).epsilon(1e-9));
    const DensityMatrix w = werner(0.8);
    const bool excess = quantum_discord_da(w) > classical_correlation_ja(w);
    CHECK((pati_bound(w, xz) > berta_bound(w, xz)) == excess);
}

TEST_CASE("uncertainty gap") {
    const ObservablePair xz = ObservablePair::pauli_xz();
    CHECK(std::abs(uncertainty_gap(bell_state(BellKind::PhiPlus), xz).gap) < 1e-9);
    for (const ChiOracle &o : kChi) {
        const UncertaintyReport r = uncertainty_gap(chi_state(o.eps), xz);
        CHECK(r.gap == doctest::Approx(o.gap).epsilon(1e-7));
        CHECK(r.uncertainty_sum() == doctest::Approx(o.uncertainty_sum).epsilon(1e-9));
        CHECK(r.pati_bound == doctest::Approx(o.pati).epsilon(1e-7));
        CHECK(r.discord == doctest::Approx(o.discord).epsilon(1e-7));
        CHECK(r.classical_correlation == doctest::Approx(o.classical).epsilon(1e-7));
        CHECK(r.c == doctest::Approx(1 / std::numbers::sqrt2));
    }
    CHECK(uncertainty_gap(noisy_star(0.5), xz).gap == doctest::Approx(0.00442647674472374).epsilon(1e-6));
    CHECK(uncertainty_gap(noisy_star(0.9), xz).gap == doctest::Approx(0.08160946129312308).epsilon(1e-6));
}

TEST_CASE("uncertainty relations hold on random states") {
    const ObservablePair xz = ObservablePair::pauli_xz();
    Rng rng(59);
    for (int i = 0; i < 40; ++i) {
        const UncertaintyReport r = uncertainty_gap(random_state(rng), xz);
        CHECK(r.pati_bound >= r.berta_bound - 1e-12);
        CHECK(r.gap >= -1e-8);
    }
}
