#include "doctest.h"

#include <cmath>

#include "deltaspin/spectra.hpp"
#include "test_support.hpp"

using namespace deltaspin;

TEST_SUITE("spectra") {

TEST_CASE("Hermitian coupling gives an all-real spectrum") {
    Rng rng(61);
    const Matrix h = build_spin_half_h(testkit::self_adjoint_params(rng));
    const auto report = classify_spectrum(h, 1e-9);
    CHECK(report.all_real);
    CHECK(report.conjugate_closed);
    CHECK(report.symmetry.self_adjoint);
}

TEST_CASE("real couplings give conjugate-closed spectra") {
    Rng rng(62);
    for (int trial = 0; trial < 10; ++trial) {
        const Matrix h = build_spin_half_h(testkit::random_params(rng, true));
        const auto report = classify_spectrum(h, 1e-8);
        CHECK(report.conjugate_closed);
        CHECK(report.symmetry.pt_symmetric);
    }
}

TEST_CASE("rotation block plus zeros") {
    Matrix h = Matrix::Zero(4, 4);
    h(0, 1) = 1.0;
    h(1, 0) = -1.0;
    const auto report = classify_spectrum(h, 1e-10);
    REQUIRE(report.eigenvalues.size() == 4);
    CHECK(!report.all_real);
    CHECK(report.conjugate_closed);
    CHECK(std::abs(report.eigenvalues.front() - Complex(0, -1)) <= 1e-10);
    CHECK(std::abs(report.eigenvalues.back() - Complex(0, 1)) <= 1e-10);
    CHECK(std::abs(report.eigenvalues[1]) <= 1e-10);
    CHECK(std::abs(report.eigenvalues[2]) <= 1e-10);
}

TEST_CASE("scalar attractive delta has the textbook bound state") {
    const ManyBodyModel model(2, 1, Matrix::Constant(1, 1, -2.0), Statistics::Bose);
    const auto modes = bound_state_modes(model);
    REQUIRE(modes.size() == 1);
    CHECK(std::abs(modes[0].lambda - Complex(-2, 0)) <= 1e-12);
    CHECK(std::abs(modes[0].kappa - Complex(-1, 0)) <= 1e-12);
    CHECK(std::abs(modes[0].energy2 - Complex(-2, 0)) <= 1e-12);
    CHECK(std::abs(bound_energy(modes[0].lambda, 3) - Complex(-8, 0)) <= 1e-12);
    CHECK(std::abs(bound_energy(modes[0].lambda, 4) - Complex(-20, 0)) <= 1e-12);
}

TEST_CASE("scalar fermions have no bound mode") {
    const ManyBodyModel model(2, 1, Matrix::Constant(1, 1, -2.0), Statistics::Fermi);
    CHECK(bound_state_modes(model).empty());
}

TEST_CASE("positive couplings yield no modes") {
    Rng rng(63);
    Matrix h = build_spin_half_h(testkit::self_adjoint_params(rng));
    h = (h * h.adjoint()).eval();  // positive semidefinite
    h += 0.3 * Matrix::Identity(4, 4);
    const ManyBodyModel model(2, 2, h, Statistics::Bose);
    CHECK(bound_state_modes(model).empty());
}

TEST_CASE("modes satisfy their defining invariants") {
    Rng rng(64);
    int seen = 0;
    for (int trial = 0; trial < 20 && seen < 6; ++trial) {
        const Matrix h = build_spin_half_h(testkit::self_adjoint_params(rng));
        const ManyBodyModel model(3, 2, h, Statistics::Bose);
        const Matrix p = signed_permutation(ManyBodyModel(2, 2, h, Statistics::Bose), 1, 2);
        for (const auto& mode : bound_state_modes(model, 1e-10)) {
            ++seen;
            CHECK((h * mode.vector - mode.lambda * mode.vector).norm() <= 1e-9 * (1 + h.norm()));
            CHECK((p * mode.vector - mode.vector).norm() <= 1e-9);
            CHECK(mode.kappa.real() < 0);
            CHECK(std::abs(mode.energyN.at(2) - mode.energy2) == 0.0);
            CHECK(!mode.quasi);  // Hermitian h: real spectrum
            CHECK(mode.energy2.real() < 0);
        }
    }
    CHECK(seen > 0);
}

TEST_CASE("string state residual for the scalar family") {
    const ManyBodyModel m2(2, 1, Matrix::Constant(1, 1, -2.0), Statistics::Bose);
    const auto modes2 = bound_state_modes(m2);
    REQUIRE(modes2.size() == 1);
    CHECK(bound_state_residual(m2, modes2[0], 10, 71) <= 1e-12);

    const ManyBodyModel m3(3, 1, Matrix::Constant(1, 1, -2.0), Statistics::Bose);
    const auto modes3 = bound_state_modes(m3);
    REQUIRE(modes3.size() == 1);
    CHECK(std::abs(modes3[0].energyN.at(3) - Complex(-8, 0)) <= 1e-12);
    CHECK(bound_state_residual(m3, modes3[0], 10, 72) <= 1e-10);

    const ManyBodyModel m4(4, 1, Matrix::Constant(1, 1, -2.0), Statistics::Bose);
    const auto modes4 = bound_state_modes(m4);
    CHECK(std::abs(modes4[0].energyN.at(4) - Complex(-20, 0)) <= 1e-12);
    CHECK(bound_state_residual(m4, modes4[0], 6, 73) <= 1e-10);
}

TEST_CASE("product-mode couplings carry strings to N=3") {
    Rng rng(65);
    for (int trial = 0; trial < 4; ++trial) {
        const double lambda = rng.uniform(-2.5, -0.8);
        const Matrix h = testkit::product_mode_h(rng, lambda);
        const ManyBodyModel m3(3, 2, h, Statistics::Bose);
        const auto modes = bound_state_modes(m3, 1e-9);
        // locate the product mode among the returned ones
        bool found = false;
        for (const auto& mode : modes) {
            if (std::abs(mode.lambda - Complex(lambda, 0)) > 1e-8) continue;
            found = true;
            CHECK(bound_state_residual(m3, mode, 8, 500 + trial) <= 1e-9);
            CHECK(std::abs(mode.energyN.at(3) - bound_energy(Complex(lambda, 0), 3)) <= 1e-12);
        }
        CHECK(found);
    }
}

TEST_CASE("generic self-adjoint couplings have no N=3 simultaneous eigenvector") {
    Rng rng(66);
    int observed = 0;
    for (int trial = 0; trial < 12 && observed == 0; ++trial) {
        const Matrix h = build_spin_half_h(testkit::self_adjoint_params(rng));
        const ManyBodyModel m3(3, 2, h, Statistics::Bose);
        for (const auto& mode : bound_state_modes(m3, 1e-10)) {
            // skip accidental product modes; generic draws have none
            try {
                (void)bound_state_residual(m3, mode, 2, 11);
            } catch (const NoSimultaneousEigenvector&) {
                ++observed;
                break;
            }
        }
    }
    CHECK(observed > 0);
}

TEST_CASE("quasi modes are flagged for complex couplings") {
    // PT-symmetric coupling tuned to a complex-conjugate eigenvalue pair with
    // negative real part
    Matrix h = Matrix::Zero(4, 4);
    h(0, 0) = -2.0;
    h(0, 3) = 1.0;
    h(3, 0) = -1.0;
    h(3, 3) = -2.0;
    h(1, 1) = h(2, 2) = 1.0;
    const ManyBodyModel model(2, 2, h, Statistics::Bose);
    const auto modes = bound_state_modes(model, 1e-10);
    REQUIRE(modes.size() >= 1);
    bool any_quasi = false;
    for (const auto& mode : modes) any_quasi = any_quasi || mode.quasi;
    CHECK(any_quasi);
}

}  // TEST_SUITE
