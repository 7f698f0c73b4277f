#include <cmath>

#include <gtest/gtest.h>

#include "qcurv/constants.hpp"
#include "qcurv/errors.hpp"

using namespace qcurv;

TEST(Constants, GammaMatchesClosedForm)
{
    EXPECT_NEAR(gamma_n(DimensionParam(1)), 2.0 * kPi, 1e-15 * 2.0 * kPi);
    EXPECT_NEAR(gamma_n(DimensionParam(2)), 8.0 * kPi * kPi, 1e-14 * 8.0 * kPi * kPi);
    EXPECT_NEAR(gamma_n(DimensionParam(3)), 64.0 * std::pow(kPi, 3), 1e-14 * 64.0 * std::pow(kPi, 3));
}

TEST(Constants, GammaEqualsHalfFactorialTimesSphere)
{
    for (int n = 1; n <= 6; ++n) {
        const DimensionParam d(n);
        const double other = factorial(2 * n - 1) / 2.0 * sphere_area(2 * n);
        EXPECT_NEAR(gamma_n(d) / other, 1.0, 1e-14) << "n=" << n;
    }
}

TEST(Constants, SphereAreas)
{
    EXPECT_NEAR(sphere_area(1), 2.0 * kPi, 1e-14);
    EXPECT_NEAR(sphere_area(2), 4.0 * kPi, 1e-14);
    EXPECT_NEAR(sphere_area(3), 2.0 * kPi * kPi, 1e-13);
    EXPECT_NEAR(sphere_area(4), 8.0 * kPi * kPi / 3.0, 1e-13);
    EXPECT_THROW(sphere_area(0), InvalidArgument);
}

TEST(Constants, SphereTotalCurvature)
{
    EXPECT_NEAR(total_sphere_curvature(DimensionParam(2)), 16.0 * kPi * kPi, 1e-12);
    EXPECT_NEAR(total_sphere_curvature(DimensionParam(3)), 128.0 * std::pow(kPi, 3), 1e-10);
}

TEST(Constants, Factorials)
{
    EXPECT_EQ(factorial(0), 1.0);
    EXPECT_EQ(factorial(5), 120.0);
    EXPECT_EQ(factorial(15), 1307674368000.0);
}

TEST(Constants, DimensionParamRange)
{
    EXPECT_THROW(DimensionParam(0), InvalidArgument);
    EXPECT_THROW(DimensionParam(kMaxOrder + 1), InvalidArgument);
    EXPECT_EQ(DimensionParam(3).dimension(), 6);
}

// r^k D_k ln r from symbolic differentiation of ln r in R^{2n}.
TEST(Constants, AkMatchesSymbolicChain)
{
    const std::vector<std::vector<double>> expected{
        {1, 2, -4},
        {1, 4, -8, -16, 64},
        {1, 6, -12, -48, 192, 384, -2304},
    };
    for (int n = 2; n <= 4; ++n) {
        const auto& row = expected[static_cast<std::size_t>(n - 2)];
        for (int k = 1; k <= 2 * n - 1; ++k) {
            EXPECT_EQ(a_k(DimensionParam(n), k), row[static_cast<std::size_t>(k - 1)]) << n << " " << k;
        }
    }
    EXPECT_THROW(a_k(DimensionParam(2), 4), InvalidArgument);
    EXPECT_THROW(a_k(DimensionParam(2), 0), InvalidArgument);
}
