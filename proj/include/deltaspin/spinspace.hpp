#pragma once

#include <vector>

#include "deltaspin/boundary.hpp"
#include "deltaspin/types.hpp"

namespace deltaspin {

enum class Statistics { Bose, Fermi };

/// The ten free parameters of the spin-1/2 coupling family: the general
/// 4x4 matrix commuting with the two-particle spin swap.
struct SpinHalfParams {
    Complex a{}, b{}, c{}, d{}, f{}, g{}, e1{}, e2{}, e3{}, e4{};
};

/// N identical particles on the line, n spin components each, pair coupling h
/// (n^2 x n^2) entering the derivative-jump condition at every contact plane.
struct ManyBodyModel {
    int N;
    int n;
    Matrix h;
    Statistics statistics;

    ManyBodyModel(int N_, int n_, Matrix h_, Statistics s);

    /// n^N, the spin-space dimension.
    Eigen::Index dim() const;

    /// Integer spin (n odd) pairs with Bose, half-integer with Fermi. The
    /// mismatch is legal for experimentation; callers may warn.
    bool statistics_physical() const;
};

/// The 4x4 coupling of the spin-1/2 family:
///   [[a,e1,e1,c],[e2,f,g,e3],[e2,g,f,e3],[d,e4,e4,b]].
Matrix build_spin_half_h(const SpinHalfParams& p);

/// Symmetry class of the family member; agrees with classify() on the
/// boundary condition {n=2, C=build_spin_half_h(p)}.
SymmetryClass classify_spin_half(const SpinHalfParams& p, double tol = kDefaultTol);

/// Unitary representation U(g) of a permutation g of tensor factors on the
/// n^N space: U(g) e_{b1} x...x e_{bN} = e_{a1} x...x e_{aN} with
/// a_m = b_{g^{-1}(m)} (g given 0-based as g[i] = image of slot i).
Matrix perm_operator(int n, const std::vector<int>& g);

/// Spin swap p^{ij} of tensor factors i and j (1-based, i < j <= N).
Matrix pair_permutation(int N, int n, int i, int j);

/// Statistics-signed swap: +p^{ij} for Bose, -p^{ij} for Fermi.
Matrix signed_permutation(const ManyBodyModel& model, int i, int j);

/// h acting on factors (i, j) and identity elsewhere. Non-adjacent pairs are
/// built by conjugating an adjacent embedding with a factor swap.
Matrix embed_pair(const ManyBodyModel& model, int i, int j);

/// ||h P - P h||_F, the integrability criterion meter.
double commutator_norm(const Matrix& h, const Matrix& P);

}  // namespace deltaspin
