#pragma once

#include <vector>

namespace qcurv {

/// Nodes on (-1, 1) and weights of a Gauss rule.
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// M-point Gauss-Jacobi rule for the weight (1-t)^a (1+t)^b on (-1, 1), a, b > -1.
/// Weights sum to the weight's total mass. Computed by Golub-Welsch.
GaussRule gauss_jacobi(int points, double a, double b);

/// M-point Gauss-Legendre rule on (-1, 1).
GaussRule gauss_legendre(int points);

}  // namespace qcurv
