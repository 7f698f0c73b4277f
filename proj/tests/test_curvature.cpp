#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "qcurv/curvature.hpp"
#include "qcurv/errors.hpp"

using namespace qcurv;

TEST(Curvature, FamiliesEvaluate)
{
    EXPECT_EQ(CurvatureSpec::constant(-6).evaluate(3.0), -6.0);
    EXPECT_NEAR(CurvatureSpec::neg_power_shifted(3).evaluate(1.0), -0.125, 1e-15);
    EXPECT_NEAR(CurvatureSpec::neg_power(2).evaluate(3.0), -9.0, 1e-14);
    const auto bump = CurvatureSpec::compact_bump(1.0, 0.5, 2.0);
    EXPECT_EQ(bump.evaluate(0.5), -2.0);
    EXPECT_EQ(bump.evaluate(1.6), 0.0);
    EXPECT_LT(bump.evaluate(1.25), 0.0);
    EXPECT_GT(bump.evaluate(1.25), -2.0);
}

TEST(Curvature, RejectsInvalid)
{
    EXPECT_THROW(CurvatureSpec::constant(1.0), InvalidArgument);
    EXPECT_THROW(CurvatureSpec::constant(0.0), InvalidArgument);
    EXPECT_THROW(CurvatureSpec::neg_power_shifted(0.0), InvalidArgument);
    EXPECT_THROW(CurvatureSpec::neg_power(-1.0), InvalidArgument);
    EXPECT_THROW(CurvatureSpec::compact_bump(1.0, 0.0, 1.0), InvalidArgument);
    EXPECT_THROW(CurvatureSpec::tabulated({0.0, 1.0}, {0.0, 0.0}, 2.0), InvalidArgument);
    EXPECT_THROW(CurvatureSpec::tabulated({0.5, 1.0}, {-1.0, -1.0}, 2.0), InvalidArgument);
    EXPECT_THROW(CurvatureSpec::tabulated({0.0, 1.0}, {-1.0, 0.5}, 2.0), InvalidArgument);
}

TEST(Curvature, Alpha1Values)
{
    const DimensionParam n(2);
    EXPECT_DOUBLE_EQ(alpha1(CurvatureSpec::neg_power_shifted(3), n), 0.5);
    EXPECT_DOUBLE_EQ(alpha1(CurvatureSpec::constant(-6), n), -1.0);
    EXPECT_DOUBLE_EQ(alpha1(CurvatureSpec::neg_power(1), n), -1.25);
    EXPECT_TRUE(std::isinf(alpha1(CurvatureSpec::compact_bump(1, 1, 1), n)));
}

TEST(Curvature, EulerDerivativeMatchesDifferences)
{
    const std::vector<CurvatureSpec> ks{CurvatureSpec::neg_power_shifted(2.5), CurvatureSpec::neg_power(1.5),
                                        CurvatureSpec::compact_bump(1.0, 1.0, 3.0)};
    for (const auto& k : ks) {
        for (double r : {0.3, 1.1, 1.7, 2.4}) {
            const double h = 1e-5;
            const double fd = r * (k.evaluate(r + h) - k.evaluate(r - h)) / (2 * h);
            EXPECT_NEAR(k.euler_derivative(r), fd, 1e-6) << k.family_name() << " r=" << r;
        }
    }
}

TEST(Curvature, TabulatedInterpolatesAndExtends)
{
    const auto k = CurvatureSpec::tabulated({0.0, 1.0, 2.0, 3.0}, {-1.0, -0.5, -0.2, -0.1}, 2.0);
    EXPECT_NEAR(k.evaluate(1.0), -0.5, 1e-15);
    EXPECT_NEAR(k.evaluate(6.0), -0.1 * 9.0 / 36.0, 1e-15);
    const double mid = k.evaluate(1.5);
    EXPECT_LT(mid, -0.2);
    EXPECT_GT(mid, -0.5);
    EXPECT_FALSE(k.euler_derivative_is_exact());
    EXPECT_DOUBLE_EQ(k.decay_exponent(), 2.0);
}

TEST(Curvature, JsonRoundTrip)
{
    const std::vector<CurvatureSpec> ks{CurvatureSpec::constant(-6), CurvatureSpec::neg_power_shifted(3),
                                        CurvatureSpec::neg_power(1), CurvatureSpec::compact_bump(1, 0.5, 2),
                                        CurvatureSpec::tabulated({0, 1, 2}, {-1, -0.5, -0.25}, 2.0)};
    for (const auto& k : ks) {
        const auto back = CurvatureSpec::from_json(nlohmann::json::parse(k.to_json().dump()));
        EXPECT_EQ(back.family_name(), k.family_name());
        for (double r : {0.0, 0.7, 1.3, 2.5}) {
            EXPECT_EQ(back.evaluate(r), k.evaluate(r));
        }
    }
}

TEST(Curvature, JsonRejectsMalformed)
{
    EXPECT_THROW(CurvatureSpec::from_json(nlohmann::json::parse(R"({"family":"nope"})")), InvalidArgument);
    EXPECT_THROW(CurvatureSpec::from_json(nlohmann::json::parse(R"({"family":"constant","params":{}})")),
                 InvalidArgument);
    EXPECT_THROW(CurvatureSpec::from_json(
                     nlohmann::json::parse(R"({"family":"constant","params":{"c":-1},"decay_exponent":3})")),
                 InvalidArgument);
}

TEST(Curvature, NonpositiveProperty)
{
    const auto k = CurvatureSpec::compact_bump(0.5, 2.0, 1.0);
    for (int i = 0; i <= 200; ++i) {
        EXPECT_LE(k.evaluate(0.03 * i), 0.0);
    }
}
