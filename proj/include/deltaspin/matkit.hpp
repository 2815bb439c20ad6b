#pragma once

#include <vector>

#include "deltaspin/types.hpp"

namespace deltaspin {

/// Kronecker product, dimensions (A.rows*B.rows) x (A.cols*B.cols).
Matrix kron(const Matrix& a, const Matrix& b);

/// Inverse of a square matrix. Throws SingularMatrix when the smallest pivot
/// of the full-pivot LU falls below tol * ||A||_F (a pole: for the Y-operator
/// this is 2ik hitting the spectrum of h).
Matrix inverse(const Matrix& a, double tol = kDefaultTol);

struct EigenPair {
    Complex value;
    Vector vector;          // unit norm; size 0 when defective
    bool defective = false; // eigenvalue without an independent eigenvector
};

/// All eigenpairs of a square (generally non-Hermitian) matrix, with algebraic
/// multiplicity, satisfying ||A v - lambda v|| <= tol * ||A||_F per kept vector.
/// Repeated eigenvalues whose eigenspace is deficient come back flagged
/// `defective` with no vector; consumers treat those as "no mode".
/// Throws NoConvergence when the residual contract cannot be met.
std::vector<EigenPair> eigen_pairs(const Matrix& a, double tol = kDefaultTol);

}  // namespace deltaspin
