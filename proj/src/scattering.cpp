#include "deltaspin/scattering.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "deltaspin/matkit.hpp"

namespace deltaspin {

double MomentumSet::min_gap() const {
    double gap = std::numeric_limits<double>::infinity();
    for (int a = 0; a < size(); ++a)
        for (int b = a + 1; b < size(); ++b) gap = std::min(gap, std::abs(k(a) - k(b)));
    return gap;
}

Matrix y_two_body(const Matrix& h, const Matrix& P, double kdiff, double tol) {
    if (h.rows() != h.cols() || P.rows() != P.cols() || h.rows() != P.rows())
        throw DimensionMismatch("y_two_body: h and P must be square of equal dimension");
    const Eigen::Index d = h.rows();
    const Complex two_ik(0.0, 2.0 * kdiff);
    const Matrix lhs = two_ik * Matrix::Identity(d, d) - h;
    const Matrix rhs = two_ik * P + h;
    return inverse(lhs, tol) * rhs;
}

YOperator y_embedded(const ManyBodyModel& model, int j, double kdiff, double tol) {
    if (j < 1 || j >= model.N)
        throw IndexOutOfRange("y_embedded: slot " + std::to_string(j) + " out of range for N = " +
                              std::to_string(model.N));
    YOperator y;
    y.slot_i = j;
    y.slot_j = j + 1;
    y.kdiff = kdiff;
    y.matrix = y_two_body(embed_pair(model, j, j + 1), signed_permutation(model, j, j + 1), kdiff, tol);
    return y;
}

double inverse_relation_residual(const ManyBodyModel& model, int j, double kdiff, double tol) {
    const Matrix yp = y_embedded(model, j, kdiff, tol).matrix;
    const Matrix ym = y_embedded(model, j, -kdiff, tol).matrix;
    const Eigen::Index d = yp.rows();
    return (yp * ym - Matrix::Identity(d, d)).norm() / std::max(1.0, yp.norm());
}

double ybe_residual(const ManyBodyModel& model, double k1, double k2, double k3, double tol) {
    const ManyBodyModel m3(3, model.n, model.h, model.statistics);
    const double k12 = (k1 - k2) / 2.0;
    const double k13 = (k1 - k3) / 2.0;
    const double k23 = (k2 - k3) / 2.0;
    const Matrix lhs = y_embedded(m3, 1, k23, tol).matrix * y_embedded(m3, 2, k13, tol).matrix *
                       y_embedded(m3, 1, k12, tol).matrix;
    const Matrix rhs = y_embedded(m3, 2, k12, tol).matrix * y_embedded(m3, 1, k13, tol).matrix *
                       y_embedded(m3, 2, k23, tol).matrix;
    return (lhs - rhs).norm() / std::max(1.0, lhs.norm());
}

double ybe_far_commutation_residual(const ManyBodyModel& model, const MomentumSet& momenta,
                                    double tol) {
    if (model.N < 4) throw IndexOutOfRange("ybe_far_commutation_residual: requires N >= 4");
    if (momenta.size() != model.N)
        throw DimensionMismatch("ybe_far_commutation_residual: momenta size != N");
    double worst = 0.0;
    for (int a = 1; a < model.N; ++a) {
        for (int b = a + 2; b < model.N; ++b) {
            const double ka = (momenta.k(a - 1) - momenta.k(a)) / 2.0;
            const double kb = (momenta.k(b - 1) - momenta.k(b)) / 2.0;
            const Matrix ya = y_embedded(model, a, ka, tol).matrix;
            const Matrix yb = y_embedded(model, b, kb, tol).matrix;
            const double resid =
                (ya * yb - yb * ya).norm() / std::max(1.0, ya.norm() * yb.norm());
            worst = std::max(worst, resid);
        }
    }
    return worst;
}

}  // namespace deltaspin
