#include "qcurv/radial_linear.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qcurv/errors.hpp"

namespace qcurv {

namespace {

PowerTail abs_tail(const PowerTail& t)
{
    std::vector<PowerTerm> terms;
    for (const auto& term : t.terms()) {
        terms.push_back({std::abs(term.coeff), term.exponent});
    }
    return PowerTail(std::move(terms));
}

}  // namespace

RadialField psi_inverse_laplacian(const RadialField& f, bool zero_mean)
{
    const RadialGrid& grid = f.grid();
    const int n = grid.n();
    if (n < 2) {
        throw Unsupported("inverse Laplacian via Psi needs n >= 2");
    }
    const double dim = 2.0 * n;
    const double R = grid.r_max();
    const PowerTail& tail = f.tail();
    for (const auto& t : tail.terms()) {
        if (t.exponent == dim) {
            throw Unsupported("tail exponent equal to 2n produces a logarithmic term");
        }
    }

    const auto r = grid.nodes();
    const auto g = f.values();
    std::vector<double> outer = grid.linear_rule().cumulative_backward(g);
    const double outer_tail = tail.moment_beyond(R, 1.0);
    for (double& x : outer) {
        x += outer_tail;
    }

    std::vector<double> inner = grid.volume_rule().cumulative_forward(g);
    double inner_at_R = inner.back();
    if (zero_mean) {
        const double vol_tail = tail.moment_beyond(R, dim - 1.0);
        std::vector<double> back = grid.volume_rule().cumulative_backward(g);
        std::size_t peak = 0;
        for (std::size_t i = 0; i < inner.size(); ++i) {
            if (std::abs(inner[i]) > std::abs(inner[peak])) {
                peak = i;
            }
        }
        for (std::size_t i = peak + 1; i < inner.size(); ++i) {
            inner[i] = -(back[i] + vol_tail);
        }
        inner_at_R = -vol_tail;
    }

    const double scale = -1.0 / (dim - 2.0);
    std::vector<double> v(r.size());
    v[0] = scale * outer[0];
    for (std::size_t i = 1; i < r.size(); ++i) {
        v[i] = scale * (outer[i] + std::pow(r[i], 2.0 - dim) * inner[i]);
    }

    std::vector<PowerTerm> terms;
    double inner_shift = inner_at_R;
    for (const auto& t : tail.terms()) {
        const double s = t.exponent;
        terms.push_back({t.coeff / ((s - 2.0) * (s - dim)), s - 2.0});
        inner_shift -= t.coeff * std::pow(R, dim - s) / (dim - s);
    }
    if (!zero_mean) {
        terms.push_back({scale * inner_shift, dim - 2.0});
    }
    PowerTail vt(std::move(terms));
    Asymptote a;
    a.decay_exp = vt.leading_exponent();
    return RadialField(f.grid_ptr(), std::move(v), std::move(vt), a);
}

const RadialField& PolyharmonicSolution::laplacian_power(int j) const
{
    const int n = static_cast<int>(chain.size());
    if (j < 0 || j >= n) {
        throw InvalidArgument("Laplacian power outside 0..n-1");
    }
    return chain[static_cast<std::size_t>(n - 1 - j)];
}

namespace {

struct MeanCheck {
    double mean;
    double l1;
};

MeanCheck mean_and_l1(const RadialField& f)
{
    const RadialGrid& grid = f.grid();
    std::vector<double> absf(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        absf[i] = std::abs(f[i]);
    }
    return {integrate_fullspace(f.values(), grid, f.tail()), integrate_fullspace(absf, grid, abs_tail(f.tail()))};
}

}  // namespace

bool is_mean_zero(const RadialField& f, double tol_mean)
{
    const MeanCheck m = mean_and_l1(f);
    return std::abs(m.mean) <= tol_mean * m.l1;
}

PolyharmonicSolution solve_polyharmonic_chain(const RadialField& f, const PolyharmonicOptions& opts)
{
    const int n = f.grid().n();
    if (n < 2) {
        throw Unsupported("polyharmonic solve needs n >= 2");
    }
    const auto [mean, l1] = mean_and_l1(f);
    if (std::abs(mean) > opts.tol_mean * l1) {
        throw ZeroMeanViolation("right-hand side is not mean-zero: integral " + std::to_string(mean) +
                                " against L1 norm " + std::to_string(l1));
    }
    PolyharmonicSolution sol;
    sol.chain.reserve(static_cast<std::size_t>(n));
    sol.chain.push_back(psi_inverse_laplacian(f, true));
    for (int k = 1; k < n; ++k) {
        sol.chain.push_back(psi_inverse_laplacian(sol.chain.back(), false));
    }
    return sol;
}

RadialField solve_polyharmonic(const RadialField& f, const PolyharmonicOptions& opts)
{
    return solve_polyharmonic_chain(f, opts).u();
}

RadialField forward_laplacian_power(const RadialField& u, int k, const StencilOptions& opts)
{
    if (k < 0) {
        throw InvalidArgument("negative Laplacian power");
    }
    std::vector<double> v(u.values().begin(), u.values().end());
    for (int j = 0; j < k; ++j) {
        v = radial_laplacian(v, u.grid(), opts);
    }
    return RadialField(u.grid_ptr(), std::move(v));
}

RadialField forward_polyharmonic(const RadialField& u, const StencilOptions& opts)
{
    return forward_laplacian_power(u, u.grid().n(), opts);
}

bool ground_state_sign_check(const RadialField& f, double r0)
{
    const auto r = f.grid().nodes();
    double sign = 0.0;
    for (std::size_t i = 0; i < r.size() && sign == 0.0; ++i) {
        if (r[i] >= r0 && f[i] != 0.0) {
            sign = f[i] > 0.0 ? 1.0 : -1.0;
        }
    }
    if (sign == 0.0) {
        for (const auto& t : f.tail().terms()) {
            sign = t.coeff > 0.0 ? 1.0 : -1.0;
            break;
        }
    }
    if (sign == 0.0) {
        return true;
    }
    const RadialField v = psi_inverse_laplacian(f, is_mean_zero(f, PolyharmonicOptions{}.tol_mean));
    const double floor = 1e-12 * v.sup_norm();
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i] >= r0 && sign * v[i] < -floor) {
            return false;
        }
    }
    return true;
}

double h_beta(double beta, double r)
{
    return r < 1.0 ? 1.0 : std::pow(r, -beta);
}

double h_beta_bound(int n, double beta)
{
    const double dim = 2.0 * n;
    if (!(beta > 2.0 && beta < dim)) {
        throw InvalidArgument("h_beta bound needs 2 < beta < 2n");
    }
    const double a = 0.5 + 1.0 / (beta - 2.0);
    const double b = 1.0 / (beta - 2.0) + 1.0 / dim + 1.0 / (dim - beta);
    return std::max(a, b) / (dim - 2.0);
}

}  // namespace qcurv
