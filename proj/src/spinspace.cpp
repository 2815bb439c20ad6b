#include "deltaspin/spinspace.hpp"

#include <cmath>
#include <string>

#include "deltaspin/matkit.hpp"

namespace deltaspin {

namespace {

Eigen::Index ipow(int base, int exp) {
    Eigen::Index out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

void check_pair(int N, int i, int j) {
    if (!(1 <= i && i < j && j <= N))
        throw IndexOutOfRange("pair (" + std::to_string(i) + ", " + std::to_string(j) +
                              ") out of range for N = " + std::to_string(N));
}

}  // namespace

ManyBodyModel::ManyBodyModel(int N_, int n_, Matrix h_, Statistics s)
    : N(N_), n(n_), h(std::move(h_)), statistics(s) {
    if (N < 2) throw IndexOutOfRange("ManyBodyModel: N must be >= 2");
    if (n < 1) throw DimensionMismatch("ManyBodyModel: n must be >= 1");
    const Eigen::Index d = static_cast<Eigen::Index>(n) * n;
    if (h.rows() != d || h.cols() != d)
        throw DimensionMismatch("ManyBodyModel: h must be n^2 x n^2 (= " + std::to_string(d) + " x " +
                                std::to_string(d) + "), got " + std::to_string(h.rows()) + " x " +
                                std::to_string(h.cols()));
    if (!is_finite(h)) throw DimensionMismatch("ManyBodyModel: h has non-finite entries");
}

Eigen::Index ManyBodyModel::dim() const { return ipow(n, N); }

bool ManyBodyModel::statistics_physical() const {
    const bool integer_spin = (n % 2 == 1);  // n = 2s+1
    return integer_spin == (statistics == Statistics::Bose);
}

Matrix build_spin_half_h(const SpinHalfParams& p) {
    Matrix h(4, 4);
    h << p.a, p.e1, p.e1, p.c,
         p.e2, p.f, p.g, p.e3,
         p.e2, p.g, p.f, p.e3,
         p.d, p.e4, p.e4, p.b;
    return h;
}

SymmetryClass classify_spin_half(const SpinHalfParams& p, double tol) {
    return classify(BoundaryCondition(2, build_spin_half_h(p)), tol);
}

Matrix perm_operator(int n, const std::vector<int>& g) {
    const int N = static_cast<int>(g.size());
    std::vector<int> ginv(g.size());
    for (int i = 0; i < N; ++i) {
        if (g[i] < 0 || g[i] >= N) throw IndexOutOfRange("perm_operator: not a permutation");
        ginv[g[i]] = i;
    }
    const Eigen::Index dim = ipow(n, N);
    Matrix u = Matrix::Zero(dim, dim);
    std::vector<int> beta(N), alpha(N);
    for (Eigen::Index col = 0; col < dim; ++col) {
        Eigen::Index c = col;
        for (int k = N - 1; k >= 0; --k) {
            beta[k] = static_cast<int>(c % n);
            c /= n;
        }
        for (int m = 0; m < N; ++m) alpha[m] = beta[ginv[m]];
        Eigen::Index row = 0;
        for (int k = 0; k < N; ++k) row = row * n + alpha[k];
        u(row, col) = 1.0;
    }
    return u;
}

Matrix pair_permutation(int N, int n, int i, int j) {
    check_pair(N, i, j);
    std::vector<int> g(N);
    for (int m = 0; m < N; ++m) g[m] = m;
    std::swap(g[i - 1], g[j - 1]);
    return perm_operator(n, g);
}

Matrix signed_permutation(const ManyBodyModel& model, int i, int j) {
    Matrix p = pair_permutation(model.N, model.n, i, j);
    if (model.statistics == Statistics::Fermi) p = -p;
    return p;
}

Matrix embed_pair(const ManyBodyModel& model, int i, int j) {
    check_pair(model.N, i, j);
    const int n = model.n;
    if (j == i + 1) {
        const Eigen::Index left = ipow(n, i - 1);
        const Eigen::Index right = ipow(n, model.N - j);
        Matrix out = kron(Matrix::Identity(left, left), model.h);
        return kron(out, Matrix::Identity(right, right));
    }
    const Matrix k = pair_permutation(model.N, n, i + 1, j);
    return k * embed_pair(model, i, i + 1) * k;
}

double commutator_norm(const Matrix& h, const Matrix& P) {
    if (h.rows() != P.rows() || h.cols() != P.cols() || h.rows() != h.cols())
        throw DimensionMismatch("commutator_norm: dimensions differ");
    return (h * P - P * h).norm();
}

}  // namespace deltaspin
