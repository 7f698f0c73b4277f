#include <cmath>

#include <gtest/gtest.h>

#include "qcurv/errors.hpp"
#include "qcurv/gauss_rules.hpp"

using namespace qcurv;

TEST(GaussRules, LegendreExactForPolynomials)
{
    const GaussRule g = gauss_legendre(10);
    for (int p = 0; p <= 19; ++p) {
        double acc = 0.0;
        for (std::size_t i = 0; i < g.nodes.size(); ++i) {
            acc += g.weights[i] * std::pow(g.nodes[i], p);
        }
        const double exact = p % 2 == 1 ? 0.0 : 2.0 / (p + 1);
        EXPECT_NEAR(acc, exact, 1e-14) << p;
    }
}

TEST(GaussRules, JacobiMassAndMoments)
{
    // (1 - t^2)^{1/2}: mass pi/2, second moment pi/8
    const GaussRule g = gauss_jacobi(16, 0.5, 0.5);
    double m0 = 0.0;
    double m2 = 0.0;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        m0 += g.weights[i];
        m2 += g.weights[i] * g.nodes[i] * g.nodes[i];
        EXPECT_GT(g.weights[i], 0.0);
    }
    EXPECT_NEAR(m0, M_PI / 2, 1e-14);
    EXPECT_NEAR(m2, M_PI / 8, 1e-14);
}

TEST(GaussRules, ChebyshevNodes)
{
    const GaussRule g = gauss_jacobi(8, -0.5, -0.5);
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        EXPECT_NEAR(g.weights[i], M_PI / 8, 1e-13);
    }
}

TEST(GaussRules, RejectsBadParameters)
{
    EXPECT_THROW(gauss_jacobi(0, 0, 0), InvalidArgument);
    EXPECT_THROW(gauss_jacobi(4, -1.0, 0), InvalidArgument);
}
