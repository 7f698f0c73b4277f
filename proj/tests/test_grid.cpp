#include <cmath>

#include <gtest/gtest.h>

#include "qcurv/errors.hpp"
#include "qcurv/grid.hpp"

using namespace qcurv;

namespace {

GridPtr default_grid(int n = 2, int intervals = 4096, double r_max = 200.0)
{
    return build_grid(DimensionParam(n), r_max, intervals, auto_grading(intervals, r_max));
}

std::vector<double> sample(const RadialGrid& g, double (*f)(double))
{
    std::vector<double> v(g.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = f(g.node(i));
    }
    return v;
}

}  // namespace

TEST(Grid, NodesAndGrading)
{
    const auto g = default_grid();
    EXPECT_EQ(g->size(), 4097u);
    EXPECT_EQ(g->node(0), 0.0);
    EXPECT_NEAR(g->r_max(), 200.0, 1e-12);
    std::size_t inside = 0;
    for (double r : g->nodes()) {
        inside += r <= 1.0 ? 1 : 0;
    }
    EXPECT_NEAR(static_cast<double>(inside) / 4096.0, 1.0 / 3.0, 0.01);
    for (std::size_t i = 1; i < g->size(); ++i) {
        EXPECT_GT(g->node(i), g->node(i - 1));
    }
}

TEST(Grid, RejectsBadParameters)
{
    EXPECT_THROW(build_grid(DimensionParam(2), -1.0, 64, 1.0), InvalidArgument);
    EXPECT_THROW(build_grid(DimensionParam(2), 10.0, 8, 1.0), InvalidArgument);
    EXPECT_THROW(build_grid(DimensionParam(2), 10.0, 64, 0.5), InvalidArgument);
}

TEST(Grid, RefinementIsNested)
{
    const auto g = build_grid(DimensionParam(2), 50.0, 256, 1.01);
    const auto f = refine(*g);
    ASSERT_EQ(f->intervals(), 512);
    for (std::size_t i = 0; i < g->size(); ++i) {
        EXPECT_NEAR(f->node(2 * i), g->node(i), 1e-12 * (1.0 + g->node(i)));
    }
}

TEST(Grid, ProductRuleExactForCubics)
{
    const auto g = build_grid(DimensionParam(2), 3.0, 32, 1.05);
    auto cubic = [](double s) { return 1.0 - 2.0 * s + 0.5 * s * s * s; };
    std::vector<double> v(g->size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = cubic(g->node(i));
    }
    // int_0^3 (1 - 2 s + s^3/2) s^3 ds
    const double exact = std::pow(3.0, 4) / 4 - 2 * std::pow(3.0, 5) / 5 + 0.5 * std::pow(3.0, 7) / 7;
    EXPECT_NEAR(g->volume_rule().integrate(v), exact, 1e-11 * std::abs(exact));
    const auto fwd = g->volume_rule().cumulative_forward(v);
    const auto bwd = g->volume_rule().cumulative_backward(v);
    for (std::size_t i = 0; i < v.size(); ++i) {
        EXPECT_NEAR(fwd[i] + bwd[i], exact, 1e-11 * std::abs(exact));
    }
}

TEST(Grid, FourthOrderConvergence)
{
    auto f = [](double s) { return std::exp(-s * s) * std::cos(3.0 * s); };
    auto err = [&](int intervals) {
        const auto g = build_grid(DimensionParam(2), 6.0, intervals, 1.0);
        std::vector<double> v(g->size());
        for (std::size_t i = 0; i < v.size(); ++i) {
            v[i] = f(g->node(i));
        }
        const auto fine = build_grid(DimensionParam(2), 6.0, 8192, 1.0);
        std::vector<double> w(fine->size());
        for (std::size_t i = 0; i < w.size(); ++i) {
            w[i] = f(fine->node(i));
        }
        return std::abs(g->volume_rule().integrate(v) - fine->volume_rule().integrate(w));
    };
    const double e1 = err(64);
    const double e2 = err(128);
    EXPECT_GT(std::log2(e1 / e2), 3.5);
}

TEST(Grid, TailMoments)
{
    const PowerTail t({PowerTerm{2.0, 6.0}});
    EXPECT_NEAR(t.moment_beyond(10.0, 3.0), 2.0 * std::pow(10.0, -2.0) / 2.0, 1e-15);
    EXPECT_THROW((void)t.moment_beyond(10.0, 5.0), DivergentTail);
    // int_R^inf ln s s^{-3} ds = R^{-2} (ln R / 2 + 1/4)
    const PowerTail u({PowerTerm{1.0, 6.0}});
    const double R = 5.0;
    EXPECT_NEAR(u.log_moment_beyond(R, 3.0), std::pow(R, -2) * (std::log(R) / 2 + 0.25), 1e-15);
    EXPECT_EQ(PowerTail().leading_exponent(), std::numeric_limits<double>::infinity());
}

TEST(Grid, PowerTailAlgebra)
{
    const PowerTail a({PowerTerm{1.0, 2.0}, PowerTerm{3.0, 4.0}});
    const PowerTail b({PowerTerm{-1.0, 2.0}});
    const PowerTail c = a + b;
    ASSERT_EQ(c.terms().size(), 1u);
    EXPECT_EQ(c.leading_exponent(), 4.0);
    EXPECT_NEAR(a.scaled(2.0).value(2.0), 2.0 * (0.25 + 3.0 / 16.0), 1e-15);
}

namespace {

// (1 + r^2)^{-a} = sum_j binom(-a, j) r^{-2a-2j} for r > 1
PowerTail shifted_power_tail(double a, int terms)
{
    std::vector<PowerTerm> out;
    double c = 1.0;
    for (int j = 0; j < terms; ++j) {
        out.push_back({c, 2.0 * a + 2.0 * j});
        c *= -(a + j) / (j + 1.0);
    }
    return PowerTail(out);
}

}  // namespace

TEST(Grid, FullspaceIntegralWithTail)
{
    // int_{R^4} (1 + r^2)^{-5/2} dx = 4 pi^2 / 3
    const auto g = default_grid();
    const auto v = sample(*g, [](double r) { return std::pow(1.0 + r * r, -2.5); });
    const double exact = 4.0 * M_PI * M_PI / 3.0;
    EXPECT_NEAR(integrate_fullspace(v, *g, shifted_power_tail(2.5, 6)), exact, 1e-8);
    // a single fitted power law misses the r^{-7} correction
    EXPECT_NEAR(integrate_fullspace(v, *g, TailModel::power_law(5.0)), exact, 1e-6 * exact);
    EXPECT_THROW(integrate_fullspace(v, *g, TailModel::power_law(3.0)), DivergentTail);
}

TEST(Grid, LogMomentIntegral)
{
    // 2 pi^2 int r^3 ln r (1+r^2)^{-3} dr = pi^2 / 4, and the (1+r^2)^{-4} moment vanishes
    const auto g = default_grid();
    const auto v = sample(*g, [](double r) { return std::pow(1.0 + r * r, -3.0); });
    EXPECT_NEAR(integrate_fullspace_log_moment(v, *g, shifted_power_tail(3.0, 6)), M_PI * M_PI / 4.0, 1e-8);
    const auto v4 = sample(*g, [](double r) { return std::pow(1.0 + r * r, -4.0); });
    EXPECT_NEAR(integrate_fullspace_log_moment(v4, *g, shifted_power_tail(4.0, 6)), 0.0, 1e-9);
}

TEST(Grid, FitTailRecoversCoefficient)
{
    const auto g = default_grid();
    const auto v = sample(*g, [](double r) { return r > 0 ? -3.0 * std::pow(r, -5.0) : 0.0; });
    const PowerTail t = fit_tail(v, *g, TailModel::power_law(5.0));
    ASSERT_EQ(t.terms().size(), 1u);
    EXPECT_NEAR(t.terms()[0].coeff, -3.0, 1e-12);
    const std::vector<double> zero(g->size(), 0.0);
    EXPECT_TRUE(fit_tail(zero, *g, TailModel::power_law(5.0)).empty());
}
