#include "deltaspin/bethe.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <tuple>

#include "deltaspin/rng.hpp"

namespace deltaspin {

namespace {

constexpr double kPlaneEps = 1e-12;

using YCache = std::map<std::tuple<int, int, int>, Matrix>;

const Matrix& y_for_swap(YCache& cache, const ManyBodyModel& model, const MomentumSet& momenta,
                         int slot, int a, int b, double tol) {
    const auto key = std::make_tuple(slot, a, b);
    auto it = cache.find(key);
    if (it == cache.end()) {
        const double kd = (momenta.k(a) - momenta.k(b)) / 2.0;
        it = cache.emplace(key, y_embedded(model, slot, kd, tol).matrix).first;
    }
    return it->second;
}

int parity(const std::vector<int>& g) {
    int inv = 0;
    for (std::size_t a = 0; a < g.size(); ++a)
        for (std::size_t b = a + 1; b < g.size(); ++b)
            if (g[a] > g[b]) ++inv;
    return (inv % 2 == 0) ? +1 : -1;
}

void require_sizes(const ManyBodyModel& model, const MomentumSet& momenta, const Vector& seed) {
    if (momenta.size() != model.N)
        throw DimensionMismatch("momenta count " + std::to_string(momenta.size()) +
                                " does not match N = " + std::to_string(model.N));
    if (seed.size() != model.dim())
        throw DimensionMismatch("seed length " + std::to_string(seed.size()) + " != n^N = " +
                                std::to_string(model.dim()));
    if (momenta.min_gap() < kPlaneEps)
        throw DegenerateMomenta("momenta contain a coincident pair; the plane-wave basis degenerates");
}

}  // namespace

const Vector& BetheAmplitudes::amplitude(const std::vector<int>& sigma) const {
    auto it = table.find(sigma);
    if (it == table.end()) throw IndexOutOfRange("amplitude: unknown permutation key");
    return it->second;
}

BetheAmplitudes propagate_amplitudes(const ManyBodyModel& model, const MomentumSet& momenta,
                                     const Vector& seed, double tol) {
    require_sizes(model, momenta, seed);
    const int N = model.N;

    BetheAmplitudes amps{model, momenta, {}, 0.0};
    std::vector<int> id(N);
    std::iota(id.begin(), id.end(), 0);
    amps.table.emplace(id, seed);

    // Fill by inversion count: every string with c+1 inversions is reached from
    // one with c by swapping an ascent. Each extra incoming edge is a
    // factorization cross-check, so all multi-path cells are compared.
    YCache cache;
    std::vector<std::vector<std::vector<int>>> by_inv(max_inv + 1);
    by_inv[0].push_back(id);
    for (int c = 0; c < max_inv; ++c) {
        for (const auto& s : by_inv[c]) {
            const Vector u = amps.table.at(s);
            for (int j = 0; j + 1 < N; ++j) {
                if (s[j] >= s[j + 1]) continue;
                std::vector<int> t = s;
                std::swap(t[j], t[j + 1]);
                const Matrix& y = y_for_swap(cache, model, momenta, j + 1, s[j], s[j + 1], tol);
                Vector v = y * u;
                auto it = amps.table.find(t);
                if (it == amps.table.end()) {
                    by_inv[c + 1].push_back(t);
                    amps.table.emplace(std::move(t), std::move(v));
                } else {
                    const double mismatch = (v - it->second).norm() / std::max(1.0, it->second.norm());
                    amps.path_defect = std::max(amps.path_defect, mismatch);
                }
            }
        }
    }

    if (amps.path_defect > tol)
        throw PathInconsistency("factorizations disagree by " + std::to_string(amps.path_defect) +
                                " (> tol); h fails the integrability criterion");
    return amps;
}

Vector amplitude_along_word(const ManyBodyModel& model, const MomentumSet& momenta,
                            const Vector& seed, const std::vector<int>& word, double tol) {
    require_sizes(model, momenta, seed);
    const int N = model.N;
    std::vector<int> s(N);
    std::iota(s.begin(), s.end(), 0);
    Vector u = seed;
    YCache cache;
    for (int slot : word) {
        if (slot < 1 || slot >= N) throw IndexOutOfRange("amplitude_along_word: bad slot");
        const int j = slot - 1;
        u = y_for_swap(cache, model, momenta, slot, s[j], s[j + 1], tol) * u;
        std::swap(s[j], s[j + 1]);
    }
    return u;
}

WavefunctionSample evaluate_in_region(const BetheAmplitudes& amps, const RealVector& x,
                                      const std::vector<int>& region) {
    const int N = amps.model.N;
    const Eigen::Index dim = amps.model.dim();
    if (x.size() != N || static_cast<int>(region.size()) != N)
        throw DimensionMismatch("evaluate_in_region: coordinate count != N");

    RealVector y(N);
    for (int m = 0; m < N; ++m) y(m) = x(region[m]);
    for (int m = 0; m + 1 < N; ++m)
        if (y(m) > y(m + 1) + kPlaneEps)
            throw IndexOutOfRange("evaluate_in_region: region does not order the coordinates");

    std::vector<int> rank(N);
    for (int m = 0; m < N; ++m) rank[region[m]] = m;

    Vector value = Vector::Zero(dim);
    Eigen::MatrixXcd grad = Eigen::MatrixXcd::Zero(N, dim);
    const RealVector& k = amps.momenta.k;
    for (const auto& [sigma, u] : amps.table) {
        double phase_arg = 0.0;
        for (int m = 0; m < N; ++m) phase_arg += k(sigma[m]) * y(m);
        const Complex phase = std::exp(Complex(0.0, phase_arg));
        value += u * phase;
        for (int i = 0; i < N; ++i)
            grad.row(i) += (Complex(0.0, k(sigma[rank[i]])) * phase) * u.transpose();
    }

    const Matrix u_op = perm_operator(amps.model.n, region);
    double sign = 1.0;
    if (amps.model.statistics == Statistics::Fermi) sign = parity(region);
    WavefunctionSample out;
    out.position = x;
    out.value = sign * (u_op * value);
    out.gradient = sign * (u_op * grad.transpose()).transpose();
    return out;
}

namespace {

std::vector<int> sorted_region(const RealVector& x) {
    std::vector<int> region(x.size());
    std::iota(region.begin(), region.end(), 0);
    std::sort(region.begin(), region.end(), [&](int a, int b) { return x(a) < x(b); });
    return region;
}

void require_off_planes(const RealVector& x) {
    for (Eigen::Index a = 0; a < x.size(); ++a)
        for (Eigen::Index b = a + 1; b < x.size(); ++b)
            if (std::abs(x(a) - x(b)) < kPlaneEps)
                throw OnContactPlane("coordinates " + std::to_string(a + 1) + " and " +
                                     std::to_string(b + 1) + " coincide");
}

}  // namespace

WavefunctionSample evaluate(const BetheAmplitudes& amps, const RealVector& x) {
    require_off_planes(x);
    return evaluate_in_region(amps, x, sorted_region(x));
}

Vector laplacian(const BetheAmplitudes& amps, const RealVector& x) {
    require_off_planes(x);
    const std::vector<int> region = sorted_region(x);
    const int N = amps.model.N;
    RealVector y(N);
    for (int m = 0; m < N; ++m) y(m) = x(region[m]);

    Vector acc = Vector::Zero(amps.model.dim());
    const RealVector& k = amps.momenta.k;
    for (const auto& [sigma, u] : amps.table) {
        double phase_arg = 0.0;
        double sq = 0.0;
        for (int m = 0; m < N; ++m) {
            phase_arg += k(sigma[m]) * y(m);
            sq += k(sigma[m]) * k(sigma[m]);  // sum over ranks == sum over coords
        }
        acc += u * (std::exp(Complex(0.0, phase_arg)) * Complex(-sq, 0.0));
    }
    const Matrix u_op = perm_operator(amps.model.n, region);
    double sign = 1.0;
    if (amps.model.statistics == Statistics::Fermi) sign = parity(region);
    return sign * (u_op * acc);
}

double boundary_residual(const BetheAmplitudes& amps, int i, int j,
                         const std::vector<RealVector>& on_plane_samples) {
    const int N = amps.model.N;
    if (!(1 <= i && i < j && j <= N)) throw IndexOutOfRange("boundary_residual: bad plane indices");
    const Matrix h_ij = embed_pair(amps.model, i, j);
    const int ia = i - 1, ja = j - 1;

    double worst = 0.0;
    for (const RealVector& x : on_plane_samples) {
        if (x.size() != N) throw DimensionMismatch("boundary_residual: sample size != N");
        if (std::abs(x(ia) - x(ja)) > kPlaneEps)
            throw IndexOutOfRange("boundary_residual: sample is not on the plane x_i = x_j");

        // region with x_i just below x_j (the x_i < x_j side), then the flip
        auto region_with_tie = [&](bool i_below) {
            std::vector<int> region(N);
            std::iota(region.begin(), region.end(), 0);
            std::sort(region.begin(), region.end(), [&](int a, int b) {
                if (x(a) != x(b)) return x(a) < x(b);
                const bool a_first = (a == ia) == i_below;
                return a_first && a != b;
            });
            return region;
        };
        const WavefunctionSample minus = evaluate_in_region(amps, x, region_with_tie(true));
        const WavefunctionSample plus = evaluate_in_region(amps, x, region_with_tie(false));

        const Vector mid = 0.5 * (plus.value + minus.value);
        const double continuity = (plus.value - minus.value).norm();
        const Vector d_plus = 0.5 * (plus.gradient.row(ia) - plus.gradient.row(ja)).transpose();
        const Vector d_minus = 0.5 * (minus.gradient.row(ia) - minus.gradient.row(ja)).transpose();
        const double jump = ((d_plus - d_minus) - h_ij * mid).norm();
        worst = std::max(worst, std::max(continuity, jump) / std::max(1.0, mid.norm()));
    }
    return worst;
}

double boundary_residual(const BetheAmplitudes& amps, int i, int j, int count, std::uint64_t seed) {
    const int N = amps.model.N;
    if (!(1 <= i && i < j && j <= N)) throw IndexOutOfRange("boundary_residual: bad plane indices");
    Rng rng(seed);
    std::vector<RealVector> samples;
    samples.reserve(count);
    while (static_cast<int>(samples.size()) < count) {
        RealVector x(N);
        const double t = rng.uniform(-3.0, 3.0);
        x(i - 1) = x(j - 1) = t;
        bool ok = true;
        for (int m = 0; m < N; ++m) {
            if (m == i - 1 || m == j - 1) continue;
            x(m) = rng.uniform(-3.0, 3.0);
            for (int l = 0; l < m; ++l)
                if (l != j - 1 && std::abs(x(m) - x(l)) < 1e-2) ok = false;
            if (std::abs(x(m) - t) < 1e-2) ok = false;
        }
        if (ok) samples.push_back(std::move(x));
    }
    return boundary_residual(amps, i, j, samples);
}

double total_energy(const MomentumSet& momenta) { return momenta.k.squaredNorm(); }

double energy_residual(const BetheAmplitudes& amps, const std::vector<RealVector>& samples) {
    const double e = total_energy(amps.momenta);
    double worst = 0.0;
    for (const RealVector& x : samples) {
        const WavefunctionSample s = evaluate(amps, x);
        const Vector lap = laplacian(amps, x);
        const double denom = std::max(s.value.norm(), 1e-300);
        worst = std::max(worst, (-lap - e * s.value).norm() / denom);
    }
    return worst;
}

}  // namespace deltaspin
