#include "qcurv/log_potential.hpp"

#include <cmath>

#include "qcurv/errors.hpp"
#include "qcurv/gauss_rules.hpp"
#include "qcurv/kernels.hpp"

namespace qcurv {

AngularRule::AngularRule(DimensionParam n, int points) : n_(n)
{
    if (points < 2) {
        throw InvalidArgument("angular rule needs at least 2 points");
    }
    // sin^{2n-2}(theta) d theta = (1 - t^2)^{n - 3/2} dt with t = cos(theta)
    const double e = n.value() - 1.5;
    GaussRule g = gauss_jacobi(points, e, e);
    double total = 0.0;
    for (double w : g.weights) {
        total += w;
    }
    cosines_ = std::move(g.nodes);
    weights_ = std::move(g.weights);
    for (double& w : weights_) {
        w /= total;
    }
    angles_.reserve(cosines_.size());
    for (double t : cosines_) {
        angles_.push_back(std::acos(t));
    }
}

double AngularRule::cosine_moment(int k) const
{
    double acc = 0.0;
    for (std::size_t j = 0; j < angles_.size(); ++j) {
        acc += weights_[j] * std::cos(k * angles_[j]);
    }
    return acc;
}

double AngularRule::diagonal_error_estimate() const
{
    const AngularRule coarse(n_, std::max(2, points() / 2));
    return std::abs(log_kernel_mean(1.0, 1.0, *this) - log_kernel_mean(1.0, 1.0, coarse));
}

double log_kernel_mean(double r, double s, const AngularRule& rule)
{
    if (r < 0.0 || s < 0.0) {
        throw InvalidArgument("log_kernel_mean needs nonnegative radii");
    }
    if (r == 0.0 && s == 0.0) {
        throw InvalidArgument("log_kernel_mean is undefined at r = s = 0");
    }
    return kernels::angular_log_mean(r, s, rule.cosines(), rule.weights());
}

namespace {

// int_R^inf L(r, s) tail(s) s^{2n-1} ds for r <= R, using
// L(r, s) = ln s - sum_k (r/s)^k E[cos k theta] / k for s > r.
double log_tail_integral(double r, const PowerTail& tail, double R, int n, const std::vector<double>& moments)
{
    if (tail.empty()) {
        return 0.0;
    }
    const double p = 2.0 * n - 1.0;
    double acc = tail.log_moment_beyond(R, p);
    double rk = 1.0;
    for (std::size_t k = 1; k < moments.size(); ++k) {
        rk *= r;
        if (moments[k] == 0.0) {
            continue;
        }
        acc -= rk * moments[k] / static_cast<double>(k) * tail.moment_beyond(R, p - static_cast<double>(k));
    }
    return acc;
}

}  // namespace

RadialField log_potential_radial(const RadialField& f, const AngularRule& rule)
{
    const RadialGrid& grid = f.grid();
    const int n = grid.n();
    if (rule.n() != n) {
        throw InvalidArgument("angular rule dimension does not match the grid");
    }
    const auto r = grid.nodes();
    std::vector<double> rows(r.size());
    const kernels::LogPotentialInputs in{r, &grid.volume_rule(), rule.cosines(), rule.weights(), f.values()};
    kernels::omp::log_potential_rows(in, rows);

    // Exact sphere means have vanishing cosine moments past 2n-2; keep a few
    // more so the rule's own moments are used consistently.
    std::vector<double> moments(static_cast<std::size_t>(2 * n + 3), 0.0);
    for (std::size_t k = 1; k < moments.size(); ++k) {
        const double m = rule.cosine_moment(static_cast<int>(k));
        moments[k] = std::abs(m) < 1e-14 ? 0.0 : m;
    }

    const double scale = -sphere_area(2 * n - 1) / gamma_n(DimensionParam(n));
    std::vector<double> v(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        v[i] = scale * (rows[i] + log_tail_integral(r[i], f.tail(), grid.r_max(), n, moments));
    }
    const double total = integrate_fullspace(f.values(), grid, f.tail());
    Asymptote a;
    a.log_coeff = -total / gamma_n(DimensionParam(n));
    return RadialField(f.grid_ptr(), std::move(v), {}, a);
}

RadialField normal_representation(const RadialField& f, const AngularRule& rule)
{
    RadialField v = log_potential_radial(f, rule);
    const double shift =
        integrate_fullspace_log_moment(f.values(), f.grid(), f.tail()) / gamma_n(DimensionParam(f.grid().n()));
    for (double& x : v.mutable_values()) {
        x += shift;
    }
    return v;
}

}  // namespace qcurv
