#pragma once

// Manufactured radial data with known properties: smooth compactly supported
// mean-zero right-hand sides.

#include <cstdint>
#include <vector>

#include "qcurv/radial_field.hpp"

namespace qcurv {

/// exp(1 - 1/(1 - z^2)) for |z| < 1 with z = (r - centre)/half_width, else 0. Peak value 1.
double smooth_bump(double r, double centre, double half_width);

/// Positive bump at the origin minus a scaled bump further out.
struct BumpPair {
    double inner_width = 1.0;
    double outer_centre = 3.0;
    double outer_width = 0.75;
};

/// The scale of the outer bump makes the grid quadrature of the field vanish exactly.
RadialField mean_zero_bump_pair(const GridPtr& grid, const BumpPair& pair);

/// Seeded family: inner width in [0.8, 1.5], outer centre in [2, 4], outer width in [0.5, 1].
std::vector<BumpPair> random_bump_pairs(int count, std::uint64_t seed);

}  // namespace qcurv
