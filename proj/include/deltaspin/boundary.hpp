#pragma once

#include "deltaspin/types.hpp"

namespace deltaspin {

struct SymmetryClass {
    bool self_adjoint = false;
    bool pt_symmetric = false;
};

/// Point-interaction boundary condition for two spin-s particles (n = 2s+1
/// components each): the derivative of the relative wavefunction jumps by
/// C psi(0), with C an n^2 x n^2 coupling matrix.
struct BoundaryCondition {
    int n;
    Matrix C;

    BoundaryCondition(int n_, Matrix c);
};

/// self_adjoint iff C is Hermitian, pt_symmetric iff C is real, both tested
/// relative to max(1, ||C||_F).
SymmetryClass classify(const BoundaryCondition& bc, double tol = kDefaultTol);

/// The raw map C -> -conj(C): the coupling matrix appearing in the boundary
/// condition satisfied by PT psi, written at the 0+ -> 0- orientation. Note
/// its naive fixed points (anti-real C) are *not* PT-symmetric; the parity
/// swap of 0+ and 0- flips the sign back, so the fixed-point condition on the
/// transfer matrix reduces to "C real". classify() is the authority.
BoundaryCondition pt_transform(const BoundaryCondition& bc);

/// Transfer matrix [[I, 0], [C, I]] across the contact point (2n^2 x 2n^2).
Matrix transfer_matrix(const Matrix& C);

}  // namespace deltaspin
