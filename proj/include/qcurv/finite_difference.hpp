#pragma once

// Finite-difference radial derivatives on graded grids. Stencils have
// 2*half_width+1 points taken with a stride so that neighbouring stencil
// points are at least min_spacing apart; points left of the origin are
// supplied by even reflection f(-r) = f(r).

#include <span>
#include <vector>

namespace qcurv {

class RadialGrid;

struct StencilOptions {
    int half_width = 3;
    double min_spacing = 0.01;
};

/// Fornberg weights for derivatives 0..max_order at x0 from arbitrary points.
/// Result[m][j] multiplies f(points[j]) for the m-th derivative.
std::vector<std::vector<double>> fornberg_weights(double x0, std::span<const double> points, int max_order);

/// df/dr at every node (0 at the origin).
std::vector<double> radial_derivative(std::span<const double> values, const RadialGrid& grid,
                                      const StencilOptions& opts = {});

/// f'' + (2n-1) f'/r in R^{2n}, with the limit 2n f''(0) at the origin.
std::vector<double> radial_laplacian(std::span<const double> values, const RadialGrid& grid,
                                     const StencilOptions& opts = {});

}  // namespace qcurv
