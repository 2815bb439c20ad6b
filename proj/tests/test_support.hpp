#pragma once

// Seeded draw helpers shared by the unit and acceptance suites.

#include <cmath>

#include "deltaspin/bethe.hpp"
#include "deltaspin/rng.hpp"
#include "deltaspin/spinspace.hpp"

namespace testkit {

using namespace deltaspin;

inline SpinHalfParams random_params(Rng& rng, bool real_only) {
    auto draw = [&]() -> Complex {
        return real_only ? Complex(rng.uniform(-1.5, 1.5), 0.0) : rng.uniform_complex(-1.5, 1.5);
    };
    SpinHalfParams p;
    p.a = draw(); p.b = draw(); p.c = draw(); p.d = draw(); p.f = draw(); p.g = draw();
    p.e1 = draw(); p.e2 = draw(); p.e3 = draw(); p.e4 = draw();
    return p;
}

// e2 = e1*, e4 = e3*, d = c*, a,b,f,g real
inline SpinHalfParams self_adjoint_params(Rng& rng) {
    SpinHalfParams p;
    p.a = rng.uniform(-1.5, 1.5);
    p.b = rng.uniform(-1.5, 1.5);
    p.f = rng.uniform(-1.5, 1.5);
    p.g = rng.uniform(-1.5, 1.5);
    p.c = rng.uniform_complex(-1.5, 1.5);
    p.d = std::conj(p.c);
    p.e1 = rng.uniform_complex(-1.5, 1.5);
    p.e2 = std::conj(p.e1);
    p.e3 = rng.uniform_complex(-1.5, 1.5);
    p.e4 = std::conj(p.e3);
    return p;
}

// e2 = e1, e4 = e3, d = c, everything real
inline SpinHalfParams both_params(Rng& rng) {
    SpinHalfParams p;
    p.a = rng.uniform(-1.5, 1.5);
    p.b = rng.uniform(-1.5, 1.5);
    p.f = rng.uniform(-1.5, 1.5);
    p.g = rng.uniform(-1.5, 1.5);
    p.c = rng.uniform(-1.5, 1.5);
    p.d = p.c;
    p.e1 = rng.uniform(-1.5, 1.5);
    p.e2 = p.e1;
    p.e3 = rng.uniform(-1.5, 1.5);
    p.e4 = p.e3;
    return p;
}

inline Matrix swap4() {
    Matrix p = Matrix::Zero(4, 4);
    p(0, 0) = p(3, 3) = p(1, 2) = p(2, 1) = 1.0;
    return p;
}

// alpha I + beta p: acts as a scalar on both pair-exchange sectors, the
// subfamily whose bosonic Bethe ansatz is consistent at N >= 3
inline Matrix scalar_channel_h(Rng& rng, double lo = -1.5, double hi = 1.5) {
    const double alpha = rng.uniform(lo, hi);
    const double beta = rng.uniform(lo, hi);
    return alpha * Matrix::Identity(4, 4) + beta * swap4();
}

// Real symmetric member of the spin-1/2 family possessing a symmetric
// product eigenvector (R e1)x(R e1) with eigenvalue `lambda`: the sub-family
// whose bound states extend to all N. Built as (R x R) h0 (R x R)^T with a
// planar rotation R and h0 block diag{lambda} + [[f,g],[g,f]]-type couplings.
inline Matrix product_mode_h(Rng& rng, double lambda) {
    SpinHalfParams p;
    p.a = lambda;
    p.b = rng.uniform(-1.0, 1.0);
    p.f = rng.uniform(-1.0, 1.0);
    p.g = rng.uniform(-1.0, 1.0);
    p.e3 = rng.uniform(-1.0, 1.0);
    p.e4 = p.e3;
    const Matrix h0 = build_spin_half_h(p);
    const double th = rng.uniform(0.0, 2.0 * M_PI);
    Eigen::Matrix2cd r;
    r << std::cos(th), -std::sin(th), std::sin(th), std::cos(th);
    const Matrix rr = kron(Matrix(r), Matrix(r));
    return rr * h0 * rr.transpose();
}

inline MomentumSet random_momenta(Rng& rng, int N, double lo, double hi, double min_gap) {
    while (true) {
        RealVector k(N);
        for (int i = 0; i < N; ++i) k(i) = rng.uniform(lo, hi);
        MomentumSet m{k};
        if (m.min_gap() >= min_gap) return m;
    }
}

inline Vector random_state(Rng& rng, Eigen::Index dim) {
    Vector v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) v(i) = rng.uniform_complex(-1.0, 1.0);
    return v;
}

inline RealVector distinct_coords(Rng& rng, int N, double lo = -3.0, double hi = 3.0,
                                  double min_gap = 1e-2) {
    while (true) {
        RealVector x(N);
        for (int i = 0; i < N; ++i) x(i) = rng.uniform(lo, hi);
        bool ok = true;
        for (int a = 0; a < N; ++a)
            for (int b = a + 1; b < N; ++b)
                if (std::abs(x(a) - x(b)) < min_gap) ok = false;
        if (ok) return x;
    }
}

}  // namespace testkit
