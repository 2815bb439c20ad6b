#include "doctest.h"

#include <cmath>

#include "deltaspin/bethe.hpp"
#include "test_support.hpp"

using namespace deltaspin;

namespace {

BetheAmplitudes fermi_state(Rng& rng, int N, Vector* seed_out = nullptr) {
    const Matrix h = build_spin_half_h(testkit::random_params(rng, false));
    const ManyBodyModel model(N, 2, h, Statistics::Fermi);
    const MomentumSet k = testkit::random_momenta(rng, N, -2.0, 2.0, 0.15);
    const Vector seed = testkit::random_state(rng, model.dim());
    if (seed_out) *seed_out = seed;
    return propagate_amplitudes(model, k, seed, 1e-9);
}

}  // namespace

TEST_SUITE("bethe") {

TEST_CASE("two-body table holds the seed and Y seed") {
    Rng rng(51);
    const Matrix h = build_spin_half_h(testkit::random_params(rng, false));
    const ManyBodyModel model(2, 2, h, Statistics::Bose);
    const MomentumSet k{(RealVector(2) << 0.9, -0.4).finished()};
    const Vector seed = testkit::random_state(rng, 4);

    const auto amps = propagate_amplitudes(model, k, seed);
    REQUIRE(amps.table.size() == 2);
    CHECK((amps.amplitude({0, 1}) - seed).norm() == 0.0);
    const Matrix y = y_embedded(model, 1, (k.k(0) - k.k(1)) / 2.0).matrix;
    CHECK((amps.amplitude({1, 0}) - y * seed).norm() <= 1e-14);
}

TEST_CASE("longest element of S3 agrees along both reduced words") {
    Rng rng(52);
    const Matrix h = build_spin_half_h(testkit::random_params(rng, true));
    const ManyBodyModel model(3, 2, h, Statistics::Fermi);
    const MomentumSet k{(RealVector(3) << 1.0, 0.3, -0.7).finished()};
    const Vector seed = testkit::random_state(rng, 8);

    const Vector a = amplitude_along_word(model, k, seed, {1, 2, 1});
    const Vector b = amplitude_along_word(model, k, seed, {2, 1, 2});
    CHECK((a - b).norm() / a.norm() <= 1e-10);

    const auto amps = propagate_amplitudes(model, k, seed, 1e-9);
    CHECK((amps.amplitude({2, 1, 0}) - a).norm() / a.norm() <= 1e-10);
    CHECK(amps.path_defect <= 1e-10);
}

TEST_CASE("non-commutant coupling propagates into PathInconsistency") {
    Matrix d = Matrix::Zero(4, 4);
    for (int i = 0; i < 4; ++i) d(i, i) = i + 1.0;
    const ManyBodyModel model(3, 2, d, Statistics::Bose);
    const MomentumSet k{(RealVector(3) << 1.0, 0.3, -0.7).finished()};
    const Vector seed = Vector::Ones(8);
    CHECK_THROWS_AS((void)propagate_amplitudes(model, k, seed, 1e-9), PathInconsistency);
}

TEST_CASE("degenerate momenta are rejected") {
    const ManyBodyModel model(3, 1, Matrix::Constant(1, 1, -2.0), Statistics::Bose);
    const MomentumSet k{(RealVector(3) << 1.0, 1.0, 2.0).finished()};
    CHECK_THROWS_AS((void)propagate_amplitudes(model, k, Vector::Ones(1)), DegenerateMomenta);
}

TEST_CASE("scalar two-body evaluation against direct substitution") {
    const double gamma = -2.0;
    const ManyBodyModel model(2, 1, Matrix::Constant(1, 1, gamma), Statistics::Bose);
    const double k1 = 0.7, k2 = -0.2;
    const MomentumSet k{(RealVector(2) << k1, k2).finished()};
    const Vector seed = Vector::Ones(1);
    const auto amps = propagate_amplitudes(model, k, seed);

    const Complex u12 = amps.amplitude({0, 1})(0);
    const Complex u21 = amps.amplitude({1, 0})(0);
    const RealVector x = (RealVector(2) << -1.0, 1.0).finished();
    const Complex expected = u12 * std::exp(Complex(0, k1 * (-1.0) + k2 * 1.0)) +
                             u21 * std::exp(Complex(0, k2 * (-1.0) + k1 * 1.0));
    const auto sample = evaluate(amps, x);
    CHECK(std::abs(sample.value(0) - expected) <= 1e-14);
}

TEST_CASE("statistics symmetry under simultaneous exchange") {
    Rng rng(53);
    for (const Statistics stats : {Statistics::Bose, Statistics::Fermi}) {
        const Matrix h = (stats == Statistics::Bose) ? testkit::scalar_channel_h(rng)
                                                     : build_spin_half_h(testkit::random_params(rng, false));
        const ManyBodyModel model(2, 2, h, stats);
        const MomentumSet k{(RealVector(2) << 1.1, -0.5).finished()};
        const auto amps = propagate_amplitudes(model, k, testkit::random_state(rng, 4));

        const RealVector x = (RealVector(2) << -0.8, 0.6).finished();
        const RealVector xs = (RealVector(2) << 0.6, -0.8).finished();
        const auto direct = evaluate(amps, x);
        const auto swapped = evaluate(amps, xs);
        const double sign = (stats == Statistics::Fermi) ? -1.0 : 1.0;
        // psi_{ab}(x1,x2) = +- psi_{ba}(x2,x1), componentwise
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b)
                CHECK(std::abs(direct.value(a * 2 + b) - sign * swapped.value(b * 2 + a)) <= 1e-12);
    }
}

TEST_CASE("boundary conditions hold on every plane for consistent models") {
    Rng rng(54);

    // fermions, generic family coupling, N = 2, 3, 4
    for (const int N : {2, 3, 4}) {
        const auto amps = fermi_state(rng, N);
        for (int i = 1; i <= N; ++i)
            for (int j = i + 1; j <= N; ++j)
                CHECK(boundary_residual(amps, i, j, 10, 1000 + static_cast<std::uint64_t>(N)) <= 1e-9);
    }

    // bosons on the scalar-channel subfamily, N = 3
    const ManyBodyModel mb(3, 2, testkit::scalar_channel_h(rng), Statistics::Bose);
    const MomentumSet kb = testkit::random_momenta(rng, 3, -2.0, 2.0, 0.15);
    const auto amps_b = propagate_amplitudes(mb, kb, testkit::random_state(rng, 8), 1e-9);
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j) CHECK(boundary_residual(amps_b, i, j, 10, 77) <= 1e-9);

    // free particles: derivative jump must vanish identically
    const ManyBodyModel free_model(3, 2, Matrix::Zero(4, 4), Statistics::Bose);
    const MomentumSet kf = testkit::random_momenta(rng, 3, -2.0, 2.0, 0.15);
    const auto amps_f = propagate_amplitudes(free_model, kf, testkit::random_state(rng, 8));
    CHECK(boundary_residual(amps_f, 1, 2, 10, 5) <= 1e-13);
}

TEST_CASE("plane-wave energy identity") {
    Rng rng(55);
    const auto amps = fermi_state(rng, 3);
    std::vector<RealVector> samples;
    for (int s = 0; s < 10; ++s) samples.push_back(testkit::distinct_coords(rng, 3));
    CHECK(energy_residual(amps, samples) <= 1e-12);
}

TEST_CASE("total energy is the sum of squared momenta") {
    const MomentumSet k{(RealVector(3) << 1.0, 2.0, 3.0).finished()};
    CHECK(total_energy(k) == 14.0);
}

TEST_CASE("gradient matches central finite differences") {
    Rng rng(56);
    const auto amps = fermi_state(rng, 3);
    const RealVector x = testkit::distinct_coords(rng, 3);
    const auto sample = evaluate(amps, x);
    const double step = 1e-6;
    for (int i = 0; i < 3; ++i) {
        RealVector xp = x, xm = x;
        xp(i) += step;
        xm(i) -= step;
        const Vector fd = (evaluate(amps, xp).value - evaluate(amps, xm).value) / (2 * step);
        const Vector an = sample.gradient.row(i).transpose();
        CHECK((fd - an).norm() / std::max(1.0, an.norm()) <= 1e-6);
    }
}

TEST_CASE("contact plane evaluation is rejected") {
    Rng rng(57);
    const auto amps = fermi_state(rng, 3);
    const RealVector x = (RealVector(3) << 0.5, 0.5, 1.5).finished();
    CHECK_THROWS_AS((void)evaluate(amps, x), OnContactPlane);
}

TEST_CASE("path independence across random reduced words at N=4") {
    Rng rng(58);
    Vector seed;
    const Matrix h = build_spin_half_h(testkit::random_params(rng, false));
    const ManyBodyModel model(4, 2, h, Statistics::Fermi);
    const MomentumSet k = testkit::random_momenta(rng, 4, -2.0, 2.0, 0.15);
    seed = testkit::random_state(rng, model.dim());

    // random maximal chains in weak order all end at the reversed string
    auto random_word = [&]() {
        std::vector<int> s{0, 1, 2, 3}, word;
        while (true) {
            std::vector<int> ascents;
            for (int j = 0; j + 1 < 4; ++j)
                if (s[j] < s[j + 1]) ascents.push_back(j);
            if (ascents.empty()) break;
            const int j = ascents[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(ascents.size()) - 1))];
            word.push_back(j + 1);
            std::swap(s[j], s[j + 1]);
        }
        return word;
    };
    const Vector ref = amplitude_along_word(model, k, seed, random_word());
    for (int trial = 0; trial < 6; ++trial) {
        const Vector other = amplitude_along_word(model, k, seed, random_word());
        CHECK((other - ref).norm() / std::max(1.0, ref.norm()) <= 1e-9);
    }
}

}  // TEST_SUITE
