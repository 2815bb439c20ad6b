#include "deltaspin/spectra.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>

#include "deltaspin/matkit.hpp"
#include "deltaspin/rng.hpp"

namespace deltaspin {

SpectrumReport classify_spectrum(const Matrix& h, double tol) {
    SpectrumReport report;
    const double guard = tol * (1.0 + h.norm());

    const auto pairs = eigen_pairs(h, std::max(tol, 1e-12));
    for (const auto& p : pairs) report.eigenvalues.push_back(p.value);
    std::sort(report.eigenvalues.begin(), report.eigenvalues.end(), [](Complex l, Complex r) {
        if (l.real() != r.real()) return l.real() < r.real();
        return l.imag() < r.imag();
    });

    report.all_real = true;
    for (Complex v : report.eigenvalues)
        if (std::abs(v.imag()) > guard) report.all_real = false;

    // greedy nearest-match of the multiset against its conjugate
    std::vector<Complex> pool(report.eigenvalues);
    report.conjugate_closed = true;
    for (Complex v : report.eigenvalues) {
        double best = std::numeric_limits<double>::infinity();
        std::size_t best_i = 0;
        for (std::size_t i = 0; i < pool.size(); ++i) {
            const double d = std::abs(pool[i] - std::conj(v));
            if (d < best) {
                best = d;
                best_i = i;
            }
        }
        if (pool.empty() || best > guard) {
            report.conjugate_closed = false;
            break;
        }
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(best_i));
    }
    if (report.all_real) report.conjugate_closed = true;

    const int n = static_cast<int>(std::llround(std::sqrt(static_cast<double>(h.rows()))));
    report.symmetry = classify(BoundaryCondition(std::max(n, 1), h), tol);
    return report;
}

Complex bound_energy(Complex lambda, int N) {
    return -lambda * lambda * static_cast<double>(N) * static_cast<double>(N * N - 1) / 12.0;
}

namespace {

BoundStateMode make_mode(Complex lambda, Vector vec, const ManyBodyModel& model, double tol) {
    BoundStateMode mode;
    mode.lambda = lambda;
    mode.vector = std::move(vec);
    mode.kappa = lambda / 2.0;
    mode.energy2 = bound_energy(lambda, 2);
    for (int N = 2; N <= std::max(2, model.N); ++N) mode.energyN[N] = bound_energy(lambda, N);
    mode.quasi = std::abs(lambda.imag()) > tol * (1.0 + model.h.norm());
    return mode;
}

}  // namespace

std::vector<BoundStateMode> bound_state_modes(const ManyBodyModel& model, double tol) {
    const Matrix& h = model.h;
    const double scale = std::max(1.0, h.norm());
    const ManyBodyModel two_body(2, model.n, h, model.statistics);
    const Matrix p = signed_permutation(two_body, 1, 2);
    const Eigen::Index d = h.rows();
    const Matrix projector = 0.5 * (Matrix::Identity(d, d) + p);

    auto pairs = eigen_pairs(h, std::max(tol, 1e-12));
    std::sort(pairs.begin(), pairs.end(), [](const EigenPair& l, const EigenPair& r) {
        if (l.value.real() != r.value.real()) return l.value.real() < r.value.real();
        return l.value.imag() < r.value.imag();
    });

    const double accept = std::max(tol, 1e-9) * scale;
    std::vector<BoundStateMode> modes;
    std::size_t pos = 0;
    while (pos < pairs.size()) {
        std::size_t end = pos + 1;
        while (end < pairs.size() &&
               std::abs(pairs[end].value - pairs[end - 1].value) <= 1e-8 * scale)
            ++end;

        bool cluster_defective = false;
        std::vector<Vector> basis;
        for (std::size_t i = pos; i < end; ++i) {
            if (pairs[i].defective)
                cluster_defective = true;
            else
                basis.push_back(pairs[i].vector);
        }
        if (!basis.empty()) {
            Complex lambda = Complex(0, 0);
            for (std::size_t i = pos; i < end; ++i) lambda += pairs[i].value;
            lambda /= static_cast<double>(end - pos);
            if ((lambda / 2.0).real() < 0.0) {
                Matrix projected(d, static_cast<Eigen::Index>(basis.size()));
                for (std::size_t c = 0; c < basis.size(); ++c)
                    projected.col(static_cast<Eigen::Index>(c)) = projector * basis[c];
                Eigen::JacobiSVD<Matrix> svd(projected, Eigen::ComputeFullU);
                for (Eigen::Index r = 0; r < svd.singularValues().size(); ++r) {
                    if (svd.singularValues()(r) <= 1e-7) continue;
                    Vector candidate = svd.matrixU().col(r);
                    // accepted iff it is an eigenvector and P-fixed within tol
                    if ((h * candidate - lambda * candidate).norm() > accept) continue;
                    if ((candidate - projector * candidate).norm() > accept) continue;
                    BoundStateMode mode = make_mode(lambda, std::move(candidate), model, tol);
                    mode.defective = cluster_defective;
                    modes.push_back(std::move(mode));
                }
            }
        }
        pos = end;
    }

    std::sort(modes.begin(), modes.end(), [](const BoundStateMode& l, const BoundStateMode& r) {
        return l.energy2.real() < r.energy2.real();
    });
    return modes;
}

Vector symmetric_spin_state(const ManyBodyModel& model, Complex lambda, double tol) {
    const Eigen::Index dim = model.dim();
    const int pairs = model.N * (model.N - 1) / 2;
    Matrix stacked(2 * pairs * dim, dim);
    Eigen::Index row = 0;
    for (int i = 1; i <= model.N; ++i) {
        for (int j = i + 1; j <= model.N; ++j) {
            stacked.middleRows(row, dim) = embed_pair(model, i, j) - lambda * Matrix::Identity(dim, dim);
            row += dim;
            stacked.middleRows(row, dim) =
                signed_permutation(model, i, j) - Matrix::Identity(dim, dim);
            row += dim;
        }
    }
    Eigen::JacobiSVD<Matrix> svd(stacked, Eigen::ComputeFullV);
    const Eigen::Index last = svd.singularValues().size() - 1;
    const double smallest = svd.singularValues()(last);
    const double scale = std::max(1.0, model.h.norm() + std::abs(lambda));
    if (smallest > tol * scale)
        throw NoSimultaneousEigenvector(
            "no spin state satisfies P^{ij} v = v and h_{ij} v = lambda v for all pairs "
            "(smallest singular value " +
            std::to_string(smallest) + ")");
    return svd.matrixV().col(last);
}

namespace {

double string_plane_defect(const ManyBodyModel& model, Complex kappa, const Vector& v,
                           const RealVector& base, int i, int j) {
    const int N = model.N;
    RealVector x = base;
    x(j - 1) = x(i - 1);  // collide onto the plane

    double s_sum = 0.0;
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < a; ++b) s_sum += std::abs(x(a) - x(b));
    const Complex amp = std::exp(kappa * s_sum);
    const Vector psi0 = v * amp;

    // one-sided (d_i - d_j)/2 from the signed sums, with sign(x_i - x_j) = +-1
    auto half_diff = [&](double side) {
        double di = side, dj = -side;
        for (int l = 0; l < N; ++l) {
            if (l == i - 1 || l == j - 1) continue;
            const double s = (x(i - 1) > x(l)) ? 1.0 : -1.0;
            di += s;
            dj += s;
        }
        return 0.5 * (di - dj);
    };
    const Vector d_plus = kappa * half_diff(+1.0) * psi0;
    const Vector d_minus = kappa * half_diff(-1.0) * psi0;
    const Matrix h_ij = embed_pair(model, i, j);
    const double jump = ((d_plus - d_minus) - h_ij * psi0).norm();
    return jump / std::max(1.0, psi0.norm());
}

double string_pde_defect(const ManyBodyModel& model, Complex kappa, const Vector& v,
                         const RealVector& x, Complex energy) {
    const int N = model.N;
    double s_sum = 0.0;
    double lap = 0.0;
    for (int m = 0; m < N; ++m) {
        double dm = 0.0;
        for (int l = 0; l < N; ++l) {
            if (l == m) continue;
            dm += (x(m) > x(l)) ? 1.0 : -1.0;
            if (l < m) s_sum += std::abs(x(m) - x(l));
        }
        lap += dm * dm;
    }
    const Vector psi = v * std::exp(kappa * s_sum);
    const Vector defect = (-kappa * kappa * lap - energy) * psi;
    return defect.norm() / std::max(1.0, psi.norm());
}

}  // namespace

double bound_state_residual(const ManyBodyModel& model, const BoundStateMode& mode,
                            const std::vector<RealVector>& base_samples) {
    const Vector v = symmetric_spin_state(model, mode.lambda);
    const Complex energy = bound_energy(mode.lambda, model.N);

    double worst = 0.0;
    for (const RealVector& base : base_samples) {
        if (base.size() != model.N)
            throw DimensionMismatch("bound_state_residual: sample size != N");
        worst = std::max(worst, string_pde_defect(model, mode.kappa, v, base, energy));
        for (int i = 1; i <= model.N; ++i)
            for (int j = i + 1; j <= model.N; ++j)
                worst = std::max(worst, string_plane_defect(model, mode.kappa, v, base, i, j));
    }
    return worst;
}

double bound_state_residual(const ManyBodyModel& model, const BoundStateMode& mode, int count,
                            std::uint64_t seed) {
    Rng rng(seed);
    std::vector<RealVector> samples;
    samples.reserve(count);
    while (static_cast<int>(samples.size()) < count) {
        RealVector x(model.N);
        bool ok = true;
        for (int m = 0; m < model.N; ++m) {
            x(m) = rng.uniform(-3.0, 3.0);
            for (int l = 0; l < m; ++l)
                if (std::abs(x(m) - x(l)) < 1e-2) ok = false;
        }
        if (ok) samples.push_back(std::move(x));
    }
    return bound_state_residual(model, mode, samples);
}

}  // namespace deltaspin
