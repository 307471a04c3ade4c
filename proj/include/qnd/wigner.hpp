#pragma once

#include "qnd/types.hpp"

namespace qnd {

/// Uniform rectangular grid in quadrature coordinates, alpha = (x + ip)/sqrt(2).
struct PhaseSpaceGrid {
    RealVector x;
    RealVector p;

    static PhaseSpaceGrid uniform(double min, double max, int n);
    void validate() const;
};

/// W(x, p) sampled on a PhaseSpaceGrid; x runs over rows, p over columns.
/// Convention: integral of W over dx dp is 1, so the vacuum peaks at 1/pi.
struct WignerMap {
    PhaseSpaceGrid grid;
    RealMatrix values;

    /// Plain Riemann sum of W over the grid (~1 when the grid encloses the
    /// state's support).
    double riemann_sum() const;
};

/// Displaced-parity evaluation W(alpha) = (1/pi) Tr[D(-alpha) rho D(alpha) P],
/// alpha = (x + ip)/sqrt(2), P the photon-number parity. The state is
/// zero-padded internally so the displaced support stays below the
/// truncation for every grid point. Multi-mode input is rejected; reduce
/// with partial_trace first.
WignerMap wigner(const DensityOperator& rho_single_mode, const PhaseSpaceGrid& grid);

/// Single-point evaluation with the same convention and padding rule.
double wigner_point(const DensityOperator& rho_single_mode, double x, double p);

}  // namespace qnd
