#pragma once

#include <vector>

#include "deltaspin/spectra.hpp"
#include "deltaspin/spinspace.hpp"
#include "deltaspin/types.hpp"

namespace deltaspin {

/// Relative-coordinate grid: domain [-L, L], M points including the walls
/// (odd, so x = 0 is a node), delta mollified as a unit-mass Gaussian of
/// standard deviation sigma.
struct GridSpec {
    double L = 15.0;
    int M = 3001;
    double sigma = 0.02;

    double dx() const { return 2.0 * L / (M - 1); }
};

/// The (L, 2M-1, sigma/2) refinement used internally for extrapolation.
GridSpec refined(const GridSpec& grid);

struct GridMode {
    double energy = 0.0;         // sigma -> 0 extrapolated: 2 E(sigma/2) - E(sigma)
    double energy_coarse = 0.0;  // raw eigenvalue at (M, sigma)
    double energy_fine = 0.0;    // raw eigenvalue at (2M-1, sigma/2)
    RealVector profile;          // fine-grid interior profile, (M_f - 2) * n^2
};

/// The `count` lowest modes of H_rel = -2 d^2/dx^2 (x) I + 2 h g_sigma(x)
/// with Dirichlet walls and second-order central differences, solved at
/// (M, sigma) and (2M-1, sigma/2) and extrapolated in sigma. Requires h real
/// symmetric; throws GridTooCoarse when M is even, M < 201 or sigma < 2 dx.
std::vector<GridMode> ground_modes(const Matrix& h, const GridSpec& grid, int count);

/// Interior grid points matching GridMode::profile blocks (use refined(grid)).
RealVector interior_points(const GridSpec& grid);

struct ModeComparison {
    double analytic = 0.0;
    double grid = 0.0;
    double rel_error = 0.0;
    bool pass = false;
};

struct OracleComparison {
    std::vector<ModeComparison> modes;
    bool all_pass = true;
    bool no_modes = false;
    double grid_min = 0.0;  // lowest grid eigenvalue (reported when no analytic modes)
};

/// Matches each analytic two-body mode energy from bound_state_modes to the
/// nearest grid eigenvalue; pass per mode iff the relative error <= tol_rel.
/// With no analytic modes the report notes it and passes iff the grid
/// minimum is >= -tol_rel.
OracleComparison compare_bound_states(const ManyBodyModel& model, const GridSpec& grid,
                                      double tol_rel);

}  // namespace deltaspin
