#include "deltaspin/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SparseCholesky>
#include <Eigen/SparseCore>

#include "deltaspin/rng.hpp"

namespace deltaspin {

namespace {

using Sparse = Eigen::SparseMatrix<double>;

Sparse grid_operator(const RealMatrix& h, const GridSpec& grid) {
    const int n2 = static_cast<int>(h.rows());
    const int mi = grid.M - 2;  // interior nodes; walls carry psi = 0
    const double dx = grid.dx();
    const double kin = 2.0 / (dx * dx);

    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(static_cast<std::size_t>(mi) * n2 * (n2 + 3));
    for (int m = 0; m < mi; ++m) {
        const double x = -grid.L + (m + 1) * dx;
        const double g =
            std::exp(-x * x / (2.0 * grid.sigma * grid.sigma)) / (grid.sigma * std::sqrt(2.0 * M_PI));
        for (int s = 0; s < n2; ++s) {
            const int row = m * n2 + s;
            trip.emplace_back(row, row, 2.0 * kin);
            if (m > 0) trip.emplace_back(row, (m - 1) * n2 + s, -kin);
            if (m + 1 < mi) trip.emplace_back(row, (m + 1) * n2 + s, -kin);
            for (int sp = 0; sp < n2; ++sp) {
                const double v = 2.0 * g * h(s, sp);
                if (v != 0.0) trip.emplace_back(row, m * n2 + sp, v);
            }
        }
    }
    Sparse out(mi * n2, mi * n2);
    out.setFromTriplets(trip.begin(), trip.end());
    return out;
}

double gershgorin_lower(const Sparse& a) {
    RealVector diag = a.diagonal();
    RealVector offsum = RealVector::Zero(a.rows());
    for (int c = 0; c < a.outerSize(); ++c)
        for (Sparse::InnerIterator it(a, c); it; ++it)
            if (it.row() != it.col()) offsum(it.row()) += std::abs(it.value());
    return (diag - offsum).minCoeff();
}

struct GridSolve {
    RealVector energies;   // count lowest, ascending
    RealMatrix vectors;    // columns aligned with energies
};

// shift-invert Lanczos with full reorthogonalization; the shift sits below the
// spectrum so (H - shift) is positive definite
GridSolve lowest_modes(const Sparse& H, int count) {
    const Eigen::Index dim = H.rows();
    const double shift = gershgorin_lower(H) - 1.0;
    Sparse shifted = H;
    for (Eigen::Index i = 0; i < dim; ++i) shifted.coeffRef(i, i) -= shift;
    Eigen::SimplicialLDLT<Sparse> solver(shifted);
    if (solver.info() != Eigen::Success)
        throw NoConvergence("oracle: sparse factorization failed");

    const int max_iter = static_cast<int>(std::min<Eigen::Index>(dim, 300));
    RealMatrix V(dim, max_iter + 1);
    RealVector alpha(max_iter), beta(max_iter);

    Rng rng(0x0dac1e);
    RealVector v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) v(i) = rng.uniform(-1.0, 1.0);
    v.normalize();
    V.col(0) = v;

    int j = 0;
    auto converged = [&](int steps) {
        RealMatrix T = RealMatrix::Zero(steps, steps);
        for (int i = 0; i < steps; ++i) {
            T(i, i) = alpha(i);
            if (i + 1 < steps) T(i, i + 1) = T(i + 1, i) = beta(i);
        }
        Eigen::SelfAdjointEigenSolver<RealMatrix> es(T);
        if (steps < count + 2) return false;
        for (int t = 0; t < count; ++t) {
            const int idx = steps - 1 - t;  // largest theta <-> lowest energy
            const double theta = es.eigenvalues()(idx);
            const double resid = beta(steps - 1) * std::abs(es.eigenvectors()(steps - 1, idx));
            if (theta <= 0 || resid / (theta * theta) > 1e-10) return false;
        }
        return true;
    };

    for (j = 0; j < max_iter; ++j) {
        RealVector w = solver.solve(V.col(j));
        alpha(j) = V.col(j).dot(w);
        w -= alpha(j) * V.col(j);
        if (j > 0) w -= beta(j - 1) * V.col(j - 1);
        // two rounds of reorthogonalization against the whole basis
        for (int round = 0; round < 2; ++round)
            w -= V.leftCols(j + 1) * (V.leftCols(j + 1).transpose() * w);
        beta(j) = w.norm();
        if (beta(j) < 1e-14) {
            ++j;
            break;
        }
        V.col(j + 1) = w / beta(j);
        if ((j + 1) % 8 == 0 && converged(j + 1)) {
            ++j;
            break;
        }
    }

    const int steps = j;
    RealMatrix T = RealMatrix::Zero(steps, steps);
    for (int i = 0; i < steps; ++i) {
        T(i, i) = alpha(i);
        if (i + 1 < steps) T(i, i + 1) = T(i + 1, i) = beta(i);
    }
    Eigen::SelfAdjointEigenSolver<RealMatrix> es(T);
    if (es.info() != Eigen::Success || steps < count)
        throw NoConvergence("oracle: Lanczos failed to produce enough Ritz pairs");

    GridSolve out;
    out.energies.resize(count);
    out.vectors.resize(dim, count);
    for (int t = 0; t < count; ++t) {
        const int idx = steps - 1 - t;
        const double theta = es.eigenvalues()(idx);
        out.energies(t) = shift + 1.0 / theta;
        out.vectors.col(t) = (V.leftCols(steps) * es.eigenvectors().col(idx)).normalized();
    }
    return out;
}

RealMatrix require_real_symmetric(const Matrix& h) {
    if (h.rows() != h.cols()) throw DimensionMismatch("oracle: h must be square");
    const double scale = std::max(1.0, h.norm());
    if (h.imag().norm() > 1e-12 * scale || (h - h.transpose()).norm() > 1e-12 * scale)
        throw std::invalid_argument(
            "oracle: only real symmetric h is supported (non-Hermitian validation is analytic)");
    return h.real();
}

void validate(const GridSpec& grid, int count) {
    if (count < 1 || count > 4) throw std::invalid_argument("oracle: count must be in 1..4");
    if (grid.M % 2 == 0 || grid.M < 201)
        throw GridTooCoarse("grid: M must be odd and >= 201, got " + std::to_string(grid.M));
    if (grid.sigma < 2.0 * grid.dx())
        throw GridTooCoarse("grid: sigma must resolve >= 2 cells (sigma >= " +
                            std::to_string(2.0 * grid.dx()) + ")");
    if (grid.L <= 0) throw GridTooCoarse("grid: L must be positive");
}

}  // namespace

GridSpec refined(const GridSpec& grid) { return GridSpec{grid.L, 2 * grid.M - 1, grid.sigma / 2.0}; }

RealVector interior_points(const GridSpec& grid) {
    const int mi = grid.M - 2;
    RealVector x(mi);
    for (int m = 0; m < mi; ++m) x(m) = -grid.L + (m + 1) * grid.dx();
    return x;
}

std::vector<GridMode> ground_modes(const Matrix& h, const GridSpec& grid, int count) {
    validate(grid, count);
    const RealMatrix hr = require_real_symmetric(h);

    const GridSolve coarse = lowest_modes(grid_operator(hr, grid), count);
    const GridSpec fine_spec = refined(grid);
    const GridSolve fine = lowest_modes(grid_operator(hr, fine_spec), count);

    std::vector<GridMode> modes(count);
    for (int t = 0; t < count; ++t) {
        modes[t].energy_coarse = coarse.energies(t);
        modes[t].energy_fine = fine.energies(t);
        modes[t].energy = 2.0 * fine.energies(t) - coarse.energies(t);
        modes[t].profile = fine.vectors.col(t);
    }
    return modes;
}

OracleComparison compare_bound_states(const ManyBodyModel& model, const GridSpec& grid,
                                      double tol_rel) {
    if (model.N != 2) throw std::invalid_argument("compare_bound_states: model.N must be 2");
    OracleComparison report;

    const auto analytic = bound_state_modes(model, 1e-10);
    if (analytic.empty()) {
        const auto modes = ground_modes(model.h, grid, 1);
        report.no_modes = true;
        report.grid_min = modes[0].energy;
        report.all_pass = report.grid_min >= -tol_rel;
        return report;
    }

    const int count = static_cast<int>(std::min<std::size_t>(4, analytic.size() + 1));
    const auto modes = ground_modes(model.h, grid, count);
    report.grid_min = modes[0].energy;
    for (const auto& mode : analytic) {
        ModeComparison cmp;
        cmp.analytic = mode.energy2.real();
        double best = std::numeric_limits<double>::infinity();
        for (const auto& gm : modes) {
            if (std::abs(gm.energy - cmp.analytic) < best) {
                best = std::abs(gm.energy - cmp.analytic);
                cmp.grid = gm.energy;
            }
        }
        cmp.rel_error = best / std::abs(cmp.analytic);
        cmp.pass = cmp.rel_error <= tol_rel;
        report.all_pass = report.all_pass && cmp.pass;
        report.modes.push_back(cmp);
    }
    return report;
}

}  // namespace deltaspin
