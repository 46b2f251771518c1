#pragma once
// Coarse-grained entropies of a classical ensemble, box-counted on the same
// (x, p_x) lattice the reduced density matrix lives on.  Densities are
// normalized by the number of offered samples, so mass that left the grid
// lowers the in-range density instead of being silently renormalized away.

#include <span>

#include "qcent/grid.hpp"

namespace qcent {

class WorkerPool;

// Bins one (x, p_x) snapshot.  Throws ValidationError("centropy.empty") on an
// empty snapshot; upstream sampling guarantees n >= 1 for real runs.
PhaseSpaceHistogram bin_snapshot(std::span<const double> xs,
                                 std::span<const double> ps, const Grid1D& grid,
                                 WorkerPool& pool, double pixel_scale = 1.0);

// 1 - 2*pi*hbar * sum rho^2 dx dp.  The value goes negative when the density
// packs below one hbar cell; it is reported raw, never clamped, and
// sub_planck_concentration() is the agreed flag for warning about it.
double classical_linear_entropy(const PhaseSpaceHistogram& h, double hbar);

// -sum rho ln(2*pi*hbar rho) dx dp, with the 0 ln 0 -> 0 limit for empty
// pixels.  The 2*pi*hbar inside the logarithm makes the argument
// dimensionless.
double classical_von_neumann_entropy(const PhaseSpaceHistogram& h, double hbar);

inline bool sub_planck_concentration(double linear_entropy) {
    return linear_entropy < 0.0;
}

}  // namespace qcent
