#include "qcurv/gauss_rules.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Dense>

#include "qcurv/errors.hpp"

namespace qcurv {

GaussRule gauss_jacobi(int points, double a, double b)
{
    if (points < 1) {
        throw InvalidArgument("Gauss rule needs at least one point");
    }
    if (!(a > -1.0) || !(b > -1.0)) {
        throw InvalidArgument("Jacobi exponents must exceed -1");
    }
    const int m = points;
    const double ab = a + b;

    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(m, m);
    for (int k = 0; k < m; ++k) {
        const double den = (2.0 * k + ab) * (2.0 * k + ab + 2.0);
        jac(k, k) = (k == 0) ? (b - a) / (ab + 2.0) : (b * b - a * a) / den;
    }
    for (int k = 1; k < m; ++k) {
        double beta = 0.0;
        if (k == 1) {
            beta = 4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
        } else {
            const double s = 2.0 * k + ab;
            beta = 4.0 * k * (k + a) * (k + b) * (k + ab) / (s * s * (s + 1.0) * (s - 1.0));
        }
        jac(k, k - 1) = jac(k - 1, k) = std::sqrt(beta);
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(jac);
    if (eig.info() != Eigen::Success) {
        throw Error("Golub-Welsch eigen-decomposition failed");
    }
    const double mass = std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) +
                                 std::lgamma(b + 1.0) - std::lgamma(ab + 2.0));

    GaussRule rule;
    rule.nodes.resize(static_cast<std::size_t>(m));
    rule.weights.resize(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) {
        const double v0 = eig.eigenvectors()(0, k);
        rule.nodes[static_cast<std::size_t>(k)] = eig.eigenvalues()(k);
        rule.weights[static_cast<std::size_t>(k)] = mass * v0 * v0;
    }
    // symmetric weights: enforce exact antisymmetry of nodes
    if (a == b) {
        for (int k = 0; k < m / 2; ++k) {
            const auto lo = static_cast<std::size_t>(k);
            const auto hi = static_cast<std::size_t>(m - 1 - k);
            const double x = 0.5 * (rule.nodes[hi] - rule.nodes[lo]);
            const double w = 0.5 * (rule.weights[hi] + rule.weights[lo]);
            rule.nodes[lo] = -x;
            rule.nodes[hi] = x;
            rule.weights[lo] = rule.weights[hi] = w;
        }
        if (m % 2 == 1) {
            rule.nodes[static_cast<std::size_t>(m / 2)] = 0.0;
        }
    }
    return rule;
}

GaussRule gauss_legendre(int points)
{
    return gauss_jacobi(points, 0.0, 0.0);
}

}  // namespace qcurv
