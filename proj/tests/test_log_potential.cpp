#include <algorithm>
#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "qcurv/analytic_profile.hpp"
#include "qcurv/asymptotics.hpp"
#include "qcurv/errors.hpp"
#include "qcurv/log_potential.hpp"
#include "qcurv/manufactured.hpp"
#include "qcurv/radial_linear.hpp"

using namespace qcurv;

namespace {

double binom(int a, int b)
{
    double c = 1.0;
    for (int i = 1; i <= b; ++i) {
        c = c * (a - b + i) / i;
    }
    return c;
}

// Spherical mean of ln|x - y| from the Gegenbauer expansion; only finitely
// many cosine moments survive in even dimension.
double closed_form_mean(double r, double s, int n)
{
    const double big = std::max(r, s);
    const double rho = std::min(r, s) / big;
    double acc = std::log(big);
    for (int j = 1; j <= n - 1; ++j) {
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        acc -= std::pow(rho, 2 * j) / (2.0 * j) * sign * binom(2 * n - 2, n - 1 - j) / binom(2 * n - 2, n - 1);
    }
    return acc;
}

GridPtr grid(int n, int intervals, double r_max)
{
    return build_grid(DimensionParam(n), r_max, intervals, auto_grading(intervals, r_max));
}

RadialField bubble_density(const GridPtr& g)
{
    // 6 e^{4 u_b} = 96 (1+r^2)^{-4}
    return RadialField::sample(g, [](double r) { return 96.0 / std::pow(1.0 + r * r, 4); },
                               TailModel::power_law(8.0));
}

}  // namespace

TEST(AngularRule, WeightsNormalized)
{
    for (int n : {1, 2, 3, 4}) {
        const AngularRule rule{DimensionParam(n), 32};
        double total = 0.0;
        for (double w : rule.weights()) {
            total += w;
        }
        EXPECT_NEAR(total, 1.0, 1e-14);
        EXPECT_NEAR(rule.cosine_moment(0), 1.0, 1e-14);
    }
}

TEST(AngularRule, CosineMomentsVanishPastDegree)
{
    const AngularRule rule{DimensionParam(3)};
    EXPECT_NEAR(rule.cosine_moment(2), -binom(4, 1) / binom(4, 2), 1e-13);
    EXPECT_NEAR(rule.cosine_moment(4), binom(4, 0) / binom(4, 2), 1e-13);
    for (int k : {1, 3, 5, 6, 7}) {
        EXPECT_NEAR(rule.cosine_moment(k), 0.0, 1e-13);
    }
}

TEST(AngularRule, RejectsTooFewPoints)
{
    EXPECT_THROW(AngularRule(DimensionParam(2), 1), InvalidArgument);
}

TEST(LogKernelMean, Endpoints)
{
    const AngularRule rule{DimensionParam(2)};
    EXPECT_DOUBLE_EQ(log_kernel_mean(3.0, 0.0, rule), std::log(3.0));
    EXPECT_DOUBLE_EQ(log_kernel_mean(0.0, 2.5, rule), std::log(2.5));
    EXPECT_THROW((void)log_kernel_mean(0.0, 0.0, rule), InvalidArgument);
    EXPECT_THROW((void)log_kernel_mean(-1.0, 1.0, rule), InvalidArgument);
}

TEST(LogKernelMean, PlanarCase)
{
    // in R^2 the circle mean of ln|x - y| is ln max(r, s)
    const AngularRule rule{DimensionParam(1), 256};
    EXPECT_NEAR(log_kernel_mean(2.0, 1.0, rule), std::log(2.0), 1e-10);
}

TEST(LogKernelMean, Symmetric)
{
    const AngularRule rule{DimensionParam(2)};
    for (double r : {0.1, 0.7, 1.3, 5.0}) {
        for (double s : {0.2, 1.0, 4.0}) {
            EXPECT_DOUBLE_EQ(log_kernel_mean(r, s, rule), log_kernel_mean(s, r, rule));
        }
    }
}

TEST(LogKernelMean, MatchesClosedForm)
{
    for (int n : {2, 3, 4}) {
        const AngularRule rule{DimensionParam(n)};
        for (double rho : {0.1, 0.5, 0.8, 0.9}) {
            EXPECT_NEAR(log_kernel_mean(rho * 2.0, 2.0, rule), closed_form_mean(rho * 2.0, 2.0, n), 1e-9);
            EXPECT_NEAR(log_kernel_mean(3.0, rho * 3.0, rule), closed_form_mean(3.0, rho * 3.0, n), 1e-9);
        }
        EXPECT_LT(rule.diagonal_error_estimate(), 1e-4);
    }
}

TEST(LogKernelMean, FarField)
{
    const AngularRule rule{DimensionParam(2)};
    const double s = 1.0;
    for (double r : {10.0, 100.0, 1000.0}) {
        const double d = std::abs(log_kernel_mean(r, s, rule) - std::log(r));
        EXPECT_LE(d, (s / r) * (s / r));
    }
}

TEST(LogPotential, AgreesWithRadialInversion)
{
    const auto g = grid(2, 1024, 20.0);
    const AngularRule rule{DimensionParam(2)};
    for (const auto& p : random_bump_pairs(2, 5)) {
        const RadialField f = mean_zero_bump_pair(g, p);
        const RadialField u = solve_polyharmonic(f);
        const RadialField v = log_potential_radial(f, rule);
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        for (std::size_t i = 0; i < u.size(); ++i) {
            lo = std::min(lo, u[i] - v[i]);
            hi = std::max(hi, u[i] - v[i]);
        }
        EXPECT_LT(std::abs(0.5 * (lo + hi)), 1e-3);
        EXPECT_LT(0.5 * (hi - lo), 1e-4);
    }
}

TEST(LogPotential, BubbleDensityHasSlopeMinusTwo)
{
    const auto g = grid(2, 1024, 100.0);
    const AngularRule rule{DimensionParam(2)};
    const RadialField f = bubble_density(g);
    const RadialField v = log_potential_radial(f, rule);
    // int f dx = 2 gamma_2, so v ~ -2 ln r
    EXPECT_NEAR(v.asymptote().log_coeff, -2.0, 1e-6);
    const SlopeFit fit = fit_log_slope(g->nodes(), v.values(), FitWindow::last_decade(g->r_max()));
    EXPECT_NEAR(fit.slope, -2.0, 0.04);
}

TEST(LogPotential, NormalRepresentationDiffersByConstant)
{
    const auto g = grid(2, 1024, 100.0);
    const AngularRule rule{DimensionParam(2)};
    const RadialField f = bubble_density(g);
    const RadialField a = normal_representation(f, rule);
    const RadialField b = log_potential_radial(f, rule);
    const double c = a[0] - b[0];
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_NEAR(a[i] - b[i], c, 1e-10);
    }
}

TEST(LogPotential, NormalRepresentationRecoversBubble)
{
    const auto g = grid(2, 1024, 100.0);
    const AngularRule rule{DimensionParam(2)};
    const RadialField u = normal_representation(bubble_density(g), rule);
    const auto b = bubble_profile(DimensionParam(2));
    const double c = u[0] - b.value(0.0);
    double worst = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        worst = std::max(worst, std::abs(u[i] - b.value(g->node(i)) - c));
    }
    EXPECT_LT(worst, 1e-3);
}

TEST(LogPotential, ForwardOperatorRecoversDensity)
{
    const auto g = grid(2, 2048, 100.0);
    const AngularRule rule{DimensionParam(2)};
    const RadialField f = bubble_density(g);
    const RadialField back = forward_polyharmonic(log_potential_radial(f, rule));
    double worst = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (g->node(i) <= 10.0) {
            worst = std::max(worst, std::abs(back[i] - f[i]));
        }
    }
    EXPECT_LT(worst / f.sup_norm(), 1e-3);
}
