#include "deltaspin/matkit.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>
#include <unsupported/Eigen/KroneckerProduct>

namespace deltaspin {

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    out = Eigen::kroneckerProduct(a, b);
    return out;
}

Matrix inverse(const Matrix& a, double tol) {
    if (a.rows() != a.cols())
        throw DimensionMismatch("inverse: matrix is " + std::to_string(a.rows()) + " x " +
                                std::to_string(a.cols()));
    Eigen::FullPivLU<Matrix> lu(a);
    const double scale = a.norm();
    // full pivoting sorts |U(i,i)| decreasing; the last one is the smallest pivot
    const Eigen::Index n = a.rows();
    const double smallest = std::abs(lu.matrixLU()(n - 1, n - 1));
    if (smallest <= tol * scale)
        throw SingularMatrix("inverse: pivot " + std::to_string(smallest) + " below tol * ||A||_F = " +
                             std::to_string(tol * scale));
    return lu.inverse();
}

namespace {

// polish an eigenpair by shifted inverse iteration + Rayleigh quotient
void refine_pair(const Matrix& a, Complex& value, Vector& vec) {
    const Eigen::Index n = a.rows();
    for (int it = 0; it < 3; ++it) {
        Matrix shifted = a - value * Matrix::Identity(n, n);
        Eigen::FullPivLU<Matrix> lu(shifted);
        if (std::abs(lu.matrixLU()(n - 1, n - 1)) < 1e-300) break;  // exactly singular: vec already exact
        Vector w = lu.solve(vec);
        const double nw = w.norm();
        if (!(nw > 0) || !w.allFinite()) break;
        vec = w / nw;
        value = vec.dot(a * vec);  // Eigen's dot conjugates the left argument
    }
}

}  // namespace

std::vector<EigenPair> eigen_pairs(const Matrix& a, double tol) {
    if (a.rows() != a.cols())
        throw DimensionMismatch("eigen_pairs: matrix is " + std::to_string(a.rows()) + " x " +
                                std::to_string(a.cols()));
    const Eigen::Index n = a.rows();
    const double scale = std::max(a.norm(), 1e-300);

    Eigen::ComplexEigenSolver<Matrix> ces(a, /*computeEigenvectors=*/true);
    if (ces.info() != Eigen::Success)
        throw NoConvergence("eigen_pairs: QR iteration failed");

    std::vector<Eigen::Index> order(n);
    for (Eigen::Index i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](Eigen::Index l, Eigen::Index r) {
        const Complex vl = ces.eigenvalues()(l), vr = ces.eigenvalues()(r);
        if (vl.real() != vr.real()) return vl.real() < vr.real();
        return vl.imag() < vr.imag();
    });

    // cluster nearby eigenvalues; within a cluster, rank of the eigenvector set
    // decides how many independent vectors exist
    const double cluster_gap = 1e-5 * scale;
    std::vector<EigenPair> out;
    Eigen::Index pos = 0;
    while (pos < n) {
        Eigen::Index end = pos + 1;
        while (end < n && std::abs(ces.eigenvalues()(order[end]) - ces.eigenvalues()(order[end - 1])) <=
                              cluster_gap)
            ++end;
        const Eigen::Index m = end - pos;
        Matrix vecs(n, m);
        for (Eigen::Index c = 0; c < m; ++c) vecs.col(c) = ces.eigenvectors().col(order[pos + c]);

        Eigen::Index rank = m;
        std::vector<Eigen::Index> keep;
        if (m > 1) {
            Eigen::ColPivHouseholderQR<Matrix> qr(vecs);
            qr.setThreshold(1e-6);
            rank = qr.rank();
            for (Eigen::Index c = 0; c < rank; ++c) keep.push_back(qr.colsPermutation().indices()(c));
            std::sort(keep.begin(), keep.end());
        } else {
            keep.push_back(0);
        }

        for (Eigen::Index c = 0; c < m; ++c) {
            EigenPair p;
            p.value = ces.eigenvalues()(order[pos + c]);
            const bool kept = std::find(keep.begin(), keep.end(), c) != keep.end();
            if (kept) {
                p.vector = vecs.col(c).normalized();
                double resid = (a * p.vector - p.value * p.vector).norm();
                if (resid > tol * scale) {
                    refine_pair(a, p.value, p.vector);
                    resid = (a * p.vector - p.value * p.vector).norm();
                }
                if (resid > tol * scale) {
                    if (m > 1) {
                        p.defective = true;  // repeated value, no reliable vector
                        p.vector = Vector();
                    } else {
                        throw NoConvergence("eigen_pairs: residual " + std::to_string(resid) +
                                            " exceeds tol * ||A||_F");
                    }
                }
            } else {
                p.defective = true;
            }
            out.push_back(std::move(p));
        }
        pos = end;
    }
    return out;
}

}  // namespace deltaspin
