#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "deltaspin/scattering.hpp"
#include "deltaspin/spinspace.hpp"
#include "deltaspin/types.hpp"

namespace deltaspin {

/// Full S_N amplitude table of a coordinate Bethe-ansatz state. Keys are
/// momentum-label strings sigma (0-based): sigma[m] is the momentum label
/// riding on the m-th ordered coordinate in the fundamental region
/// x_1 < ... < x_N. The identity string holds the user seed.
struct BetheAmplitudes {
    ManyBodyModel model;
    MomentumSet momenta;
    std::map<std::vector<int>, Vector> table;
    double path_defect = 0.0;  // worst factorization mismatch seen while filling

    const Vector& amplitude(const std::vector<int>& sigma) const;
};

struct WavefunctionSample {
    RealVector position;
    Vector value;                // n^N components
    Eigen::MatrixXcd gradient;   // N x n^N, row i = d/dx_i
};

/// Fills all N! amplitudes by walking adjacent transpositions from the
/// identity: swapping slots (j, j+1) of a source string applies
/// Y^{j,j+1}[(k_a - k_b)/2] with (a, b) the labels read from the source in
/// slot order. Every multi-path cell is cross-checked; a mismatch beyond tol
/// throws PathInconsistency (the numeric signature of a non-integrable h).
/// Throws DegenerateMomenta when two momenta coincide, SingularMatrix when a
/// constituent Y hits a pole.
BetheAmplitudes propagate_amplitudes(const ManyBodyModel& model, const MomentumSet& momenta,
                                     const Vector& seed, double tol = kDefaultTol);

/// Amplitude reached from the seed along an explicit word of adjacent slots
/// (1-based; applied left to right). Ascending and descending steps use the
/// same rule, so any word is legal, not only reduced ones.
Vector amplitude_along_word(const ManyBodyModel& model, const MomentumSet& momenta,
                            const Vector& seed, const std::vector<int>& word,
                            double tol = kDefaultTol);

/// Value and analytic gradient at x (coordinates pairwise distinct; throws
/// OnContactPlane within 1e-12 of a plane). The point's region is mapped to
/// the fundamental one by the statistics-signed spin-coordinate permutation.
WavefunctionSample evaluate(const BetheAmplitudes& amps, const RealVector& x);

/// Same, with the region fixed by the caller: region[m] is the (0-based)
/// index of the coordinate holding rank m. Admits points on a contact plane,
/// which is how one-sided limits are taken exactly.
WavefunctionSample evaluate_in_region(const BetheAmplitudes& amps, const RealVector& x,
                                      const std::vector<int>& region);

/// Analytic sum of second derivatives at x (same region handling as evaluate).
Vector laplacian(const BetheAmplitudes& amps, const RealVector& x);

/// Max over samples of the normalized defect in the contact conditions at
/// plane x_i = x_j: continuity of psi and jump of (d_i - d_j)/2 psi by
/// h_{ij} psi(0), both from one-sided analytic limits. Each sample is a full
/// coordinate vector with entries i and j equal.
double boundary_residual(const BetheAmplitudes& amps, int i, int j,
                         const std::vector<RealVector>& on_plane_samples);

/// Convenience: `count` seeded samples with the collision point and the
/// transverse coordinates uniform in [-3, 3].
double boundary_residual(const BetheAmplitudes& amps, int i, int j, int count, std::uint64_t seed);

/// E = sum k_i^2.
double total_energy(const MomentumSet& momenta);

/// Max over samples of ||(-laplacian) psi - E psi|| / ||psi|| off the planes.
double energy_residual(const BetheAmplitudes& amps, const std::vector<RealVector>& samples);

}  // namespace deltaspin
