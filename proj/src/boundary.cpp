#include "deltaspin/boundary.hpp"

#include <string>

namespace deltaspin {

BoundaryCondition::BoundaryCondition(int n_, Matrix c) : n(n_), C(std::move(c)) {
    if (n < 1) throw DimensionMismatch("BoundaryCondition: n must be positive");
    const Eigen::Index d = static_cast<Eigen::Index>(n) * n;
    if (C.rows() != d || C.cols() != d)
        throw DimensionMismatch("BoundaryCondition: C must be n^2 x n^2 (= " + std::to_string(d) +
                                " x " + std::to_string(d) + "), got " + std::to_string(C.rows()) +
                                " x " + std::to_string(C.cols()));
    if (!is_finite(C)) throw DimensionMismatch("BoundaryCondition: C has non-finite entries");
}

SymmetryClass classify(const BoundaryCondition& bc, double tol) {
    const double guard = std::max(1.0, bc.C.norm());
    SymmetryClass cls;
    cls.self_adjoint = (bc.C - bc.C.adjoint()).norm() <= tol * guard;
    cls.pt_symmetric = bc.C.imag().norm() <= tol * guard;
    return cls;
}

BoundaryCondition pt_transform(const BoundaryCondition& bc) {
    return BoundaryCondition(bc.n, (-bc.C.conjugate()).eval());
}

Matrix transfer_matrix(const Matrix& C) {
    const Eigen::Index d = C.rows();
    Matrix t = Matrix::Zero(2 * d, 2 * d);
    t.topLeftCorner(d, d) = Matrix::Identity(d, d);
    t.bottomRightCorner(d, d) = Matrix::Identity(d, d);
    t.bottomLeftCorner(d, d) = C;
    return t;
}

}  // namespace deltaspin
