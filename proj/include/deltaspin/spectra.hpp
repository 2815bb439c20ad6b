#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "deltaspin/boundary.hpp"
#include "deltaspin/spinspace.hpp"
#include "deltaspin/types.hpp"

namespace deltaspin {

struct SpectrumReport {
    std::vector<Complex> eigenvalues;  // sorted by (re, im)
    bool all_real = false;
    bool conjugate_closed = false;
    SymmetryClass symmetry;
};

/// Eigenvalues of the coupling matrix plus the reality classification:
/// all_real iff max |Im| <= tol (1 + ||h||), conjugate_closed iff the
/// multiset equals its conjugate within the same tolerance.
SpectrumReport classify_spectrum(const Matrix& h, double tol = kDefaultTol);

/// One two-body bound mode: eigenpair (Lambda, u) of h with the
/// statistics-signed swap fixing u, decay exponent kappa = Lambda/2 < 0.
struct BoundStateMode {
    Complex lambda{};
    Vector vector;                    // on the n^2 two-particle spin space
    Complex kappa{};                  // Lambda / 2
    Complex energy2{};                // -Lambda^2 / 2
    std::map<int, Complex> energyN;   // N -> -Lambda^2 N(N^2-1)/12, N = 2..model.N
    bool quasi = false;               // complex Lambda (PT non-real regime), energies complex
    bool defective = false;           // eigenvalue cluster was defective
};

/// Bound-state energy -Lambda^2 N(N^2 - 1)/12.
Complex bound_energy(Complex lambda, int N);

/// Every eigenpair of model.h whose eigenvector is fixed by the
/// statistics-signed swap (within tol, via the projector (I+P)/2; degenerate
/// eigenspaces are searched for symmetric vectors) and whose decay exponent
/// has Re(kappa) < 0. Sorted by Re(energy2), most bound first.
std::vector<BoundStateMode> bound_state_modes(const ManyBodyModel& model, double tol = kDefaultTol);

/// Simultaneous spin eigenvector on the n^N space: P^{ij} v = v and
/// h_{ij} v = lambda v for every pair. Throws NoSimultaneousEigenvector when
/// none exists (possible for N >= 3 even when an N=2 mode exists).
Vector symmetric_spin_state(const ManyBodyModel& model, Complex lambda, double tol = 1e-8);

/// Max normalized defect of the string state v exp(kappa sum_{i>j}|x_i-x_j|):
/// the contact-plane jump condition at every plane (one-sided analytic
/// derivatives) and the PDE eigenvalue defect against energyN off the planes.
/// Base samples are pairwise-distinct coordinate vectors; plane points are
/// formed from them by colliding each pair.
double bound_state_residual(const ManyBodyModel& model, const BoundStateMode& mode,
                            const std::vector<RealVector>& base_samples);

/// Convenience: `count` seeded base samples uniform in [-3, 3].
double bound_state_residual(const ManyBodyModel& model, const BoundStateMode& mode, int count,
                            std::uint64_t seed);

}  // namespace deltaspin
