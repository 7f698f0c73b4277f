#include "qcurv/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "qcurv/errors.hpp"
#include "qcurv/gauss_rules.hpp"
#include "qcurv/kernels.hpp"

namespace qcurv {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

const GaussRule& interval_gauss_rule()
{
    // exact for cubic times s^p with p <= 15
    static const GaussRule rule = gauss_legendre(10);
    return rule;
}

}  // namespace

// ---------------------------------------------------------------- PowerTail

PowerTail::PowerTail(std::vector<PowerTerm> terms)
{
    for (const auto& t : terms) {
        if (t.coeff == 0.0) {
            continue;
        }
        auto same = std::find_if(terms_.begin(), terms_.end(),
                                 [&](const PowerTerm& o) { return o.exponent == t.exponent; });
        if (same != terms_.end()) {
            same->coeff += t.coeff;
        } else {
            terms_.push_back(t);
        }
    }
    std::erase_if(terms_, [](const PowerTerm& t) { return t.coeff == 0.0; });
    std::sort(terms_.begin(), terms_.end(),
              [](const PowerTerm& a, const PowerTerm& b) { return a.exponent < b.exponent; });
}

double PowerTail::value(double r) const
{
    double out = 0.0;
    for (const auto& t : terms_) {
        out += t.coeff * std::pow(r, -t.exponent);
    }
    return out;
}

double PowerTail::moment_beyond(double r, double p) const
{
    double out = 0.0;
    for (const auto& t : terms_) {
        const double q = t.exponent - p;
        if (!(q > 1.0)) {
            throw DivergentTail("tail r^{-" + std::to_string(t.exponent) +
                                "} is not integrable against s^" + std::to_string(p));
        }
        out += t.coeff * std::pow(r, 1.0 - q) / (q - 1.0);
    }
    return out;
}

double PowerTail::log_moment_beyond(double r, double p) const
{
    double out = 0.0;
    const double lr = std::log(r);
    for (const auto& t : terms_) {
        const double q = t.exponent - p;
        if (!(q > 1.0)) {
            throw DivergentTail("log-weighted tail r^{-" + std::to_string(t.exponent) +
                                "} is not integrable against s^" + std::to_string(p));
        }
        const double qm = q - 1.0;
        out += t.coeff * std::pow(r, -qm) * (lr / qm + 1.0 / (qm * qm));
    }
    return out;
}

double PowerTail::leading_exponent() const
{
    return terms_.empty() ? kInf : terms_.front().exponent;
}

PowerTail PowerTail::scaled(double a) const
{
    std::vector<PowerTerm> out = terms_;
    for (auto& t : out) {
        t.coeff *= a;
    }
    return PowerTail(std::move(out));
}

PowerTail operator+(const PowerTail& a, const PowerTail& b)
{
    std::vector<PowerTerm> all = a.terms_;
    all.insert(all.end(), b.terms_.begin(), b.terms_.end());
    return PowerTail(std::move(all));
}

// ------------------------------------------------------------- IntervalRule

IntervalRule::IntervalRule(std::span<const double> nodes, int power) : power_(power)
{
    const int n_int = static_cast<int>(nodes.size()) - 1;
    if (n_int < 3) {
        throw InvalidArgument("product quadrature needs at least 4 nodes");
    }
    const auto& gl = interval_gauss_rule();
    start_.resize(static_cast<std::size_t>(n_int));
    weights_.resize(static_cast<std::size_t>(n_int));
    node_weights_.assign(nodes.size(), 0.0);

    for (int k = 0; k < n_int; ++k) {
        const double a = nodes[static_cast<std::size_t>(k)];
        const double b = nodes[static_cast<std::size_t>(k + 1)];
        const double mid = 0.5 * (a + b);
        const double half = 0.5 * (b - a);
        for (int v = 0; v < 3; ++v) {
            const int s = std::clamp(k - 2 + v, 0, n_int - 3);
            start_[static_cast<std::size_t>(k)][static_cast<std::size_t>(v)] = s;
            std::array<double, 4> p{};
            for (int j = 0; j < 4; ++j) {
                p[static_cast<std::size_t>(j)] = nodes[static_cast<std::size_t>(s + j)];
            }
            std::array<double, 4> w{};
            for (std::size_t q = 0; q < gl.nodes.size(); ++q) {
                const double x = mid + half * gl.nodes[q];
                const double jac = half * gl.weights[q] * std::pow(x, power_);
                for (std::size_t j = 0; j < 4; ++j) {
                    double l = 1.0;
                    for (std::size_t m = 0; m < 4; ++m) {
                        if (m != j) {
                            l *= (x - p[m]) / (p[j] - p[m]);
                        }
                    }
                    w[j] += jac * l;
                }
            }
            weights_[static_cast<std::size_t>(k)][static_cast<std::size_t>(v)] = w;
        }
        const auto& wc = weights_[static_cast<std::size_t>(k)][Centered];
        const int sc = start_[static_cast<std::size_t>(k)][Centered];
        for (int j = 0; j < 4; ++j) {
            node_weights_[static_cast<std::size_t>(sc + j)] += wc[static_cast<std::size_t>(j)];
        }
    }
}

double IntervalRule::interval_integral(int k, std::span<const double> g, Variant v) const
{
    const auto& w = weights_[static_cast<std::size_t>(k)][v];
    const auto s = static_cast<std::size_t>(start_[static_cast<std::size_t>(k)][v]);
    return w[0] * g[s] + w[1] * g[s + 1] + w[2] * g[s + 2] + w[3] * g[s + 3];
}

std::vector<double> IntervalRule::cumulative_forward(std::span<const double> g) const
{
    const int n_int = intervals();
    std::vector<double> out(static_cast<std::size_t>(n_int) + 1, 0.0);
    for (int k = 0; k < n_int; ++k) {
        out[static_cast<std::size_t>(k) + 1] = out[static_cast<std::size_t>(k)] + interval_integral(k, g);
    }
    return out;
}

std::vector<double> IntervalRule::cumulative_backward(std::span<const double> g) const
{
    const int n_int = intervals();
    std::vector<double> out(static_cast<std::size_t>(n_int) + 1, 0.0);
    for (int k = n_int - 1; k >= 0; --k) {
        out[static_cast<std::size_t>(k)] = out[static_cast<std::size_t>(k) + 1] + interval_integral(k, g);
    }
    return out;
}

double IntervalRule::integrate(std::span<const double> g) const
{
    return kernels::omp::dot(node_weights_, g);
}

// --------------------------------------------------------------- RadialGrid

namespace {

std::vector<double> make_nodes(double r_max, int intervals, double grading)
{
    std::vector<double> r(static_cast<std::size_t>(intervals) + 1);
    if (grading == 1.0) {
        for (int i = 0; i <= intervals; ++i) {
            r[static_cast<std::size_t>(i)] = r_max * static_cast<double>(i) / static_cast<double>(intervals);
        }
    } else {
        const double lg = std::log(grading);
        const double den = std::expm1(static_cast<double>(intervals) * lg);
        for (int i = 0; i <= intervals; ++i) {
            r[static_cast<std::size_t>(i)] = r_max * std::expm1(static_cast<double>(i) * lg) / den;
        }
    }
    r.front() = 0.0;
    r.back() = r_max;
    for (std::size_t i = 1; i < r.size(); ++i) {
        if (!(r[i] > r[i - 1])) {
            throw InvalidArgument("grid grading too strong: nodes are not strictly increasing");
        }
    }
    return r;
}

}  // namespace

RadialGrid::RadialGrid(DimensionParam n, double r_max, int intervals, double grading)
    : n_(n),
      grading_(grading),
      nodes_((r_max > 0.0 && std::isfinite(r_max) && intervals >= 16 && grading >= 1.0)
                 ? make_nodes(r_max, intervals, grading)
                 : throw InvalidArgument("grid requires r_max > 0, N >= 16, grading >= 1")),
      linear_rule_(nodes_, 1),
      volume_rule_(nodes_, 2 * n.value() - 1)
{
}

std::size_t RadialGrid::tail_window_begin(double fraction) const
{
    const std::size_t count = std::max<std::size_t>(
        3, static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(nodes_.size()))));
    return nodes_.size() - std::min(count, nodes_.size());
}

GridPtr build_grid(DimensionParam n, double r_max, int intervals, double grading)
{
    return std::make_shared<const RadialGrid>(n, r_max, intervals, grading);
}

double auto_grading(int intervals, double r_max, double fraction)
{
    if (intervals < 16 || !(r_max > 0.0)) {
        throw InvalidArgument("auto_grading requires N >= 16 and r_max > 0");
    }
    const double k = fraction * static_cast<double>(intervals);
    const double n_int = static_cast<double>(intervals);
    if (r_max * fraction <= 1.0) {
        return 1.0;
    }
    // r(k) = r_max expm1(kL)/expm1(NL) is decreasing in L; find r(k) = 1
    auto at_k = [&](double l) { return r_max * std::expm1(k * l) / std::expm1(n_int * l) - 1.0; };
    double lo = 1e-12;
    double hi = 1.0;
    while (at_k(hi) > 0.0) {
        hi *= 2.0;
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (at_k(mid) > 0.0 ? lo : hi) = mid;
    }
    return std::exp(0.5 * (lo + hi));
}

GridPtr refine(const RadialGrid& grid)
{
    return build_grid(grid.order(), grid.r_max(), 2 * grid.intervals(), std::sqrt(grid.grading()));
}

// --------------------------------------------------------------- tails etc.

PowerTail fit_tail(std::span<const double> values, const RadialGrid& grid, const TailModel& model)
{
    if (model.kind == TailModel::Kind::None) {
        return {};
    }
    const auto r = grid.nodes();
    const std::size_t begin = grid.tail_window_begin();
    const std::size_t end = r.size();
    const double last = values[end - 1];

    bool all_zero = true;
    bool same_sign = true;
    const double sign = last > 0.0 ? 1.0 : -1.0;
    for (std::size_t i = begin; i < end; ++i) {
        all_zero = all_zero && values[i] == 0.0;
        same_sign = same_sign && values[i] * sign > 0.0;
    }
    if (all_zero) {
        return {};
    }
    double coeff = 0.0;
    if (same_sign) {
        double acc = 0.0;
        for (std::size_t i = begin; i < end; ++i) {
            acc += std::log(std::abs(values[i])) + model.exponent * std::log(r[i]);
        }
        coeff = sign * std::exp(acc / static_cast<double>(end - begin));
    } else {
        coeff = last * std::pow(r[end - 1], model.exponent);
    }
    return PowerTail({PowerTerm{coeff, model.exponent}});
}

double integrate_fullspace(std::span<const double> values, const RadialGrid& grid, const PowerTail& tail)
{
    const int dim = 2 * grid.n();
    const double on_grid = grid.volume_rule().integrate(values);
    const double beyond = tail.moment_beyond(grid.r_max(), static_cast<double>(dim - 1));
    return sphere_area(dim - 1) * (on_grid + beyond);
}

double integrate_fullspace(std::span<const double> values, const RadialGrid& grid, const TailModel& tail)
{
    if (tail.kind == TailModel::Kind::PowerLaw && !(tail.exponent > 2.0 * grid.n())) {
        throw DivergentTail("power-law tail exponent " + std::to_string(tail.exponent) +
                            " <= 2n: full-space integral diverges");
    }
    return integrate_fullspace(values, grid, fit_tail(values, grid, tail));
}

double integrate_fullspace(const std::function<double(double)>& f, const RadialGrid& grid,
                           const TailModel& tail)
{
    std::vector<double> v(grid.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = f(grid.node(i));
    }
    return integrate_fullspace(std::span<const double>(v), grid, tail);
}

double integrate_fullspace_log_moment(std::span<const double> values, const RadialGrid& grid,
                                      const PowerTail& tail)
{
    const auto r = grid.nodes();
    std::vector<double> weighted(values.size());
    weighted[0] = 0.0;  // s^{2n-1} ln s -> 0
    for (std::size_t i = 1; i < values.size(); ++i) {
        weighted[i] = values[i] * std::log(r[i]);
    }
    const int dim = 2 * grid.n();
    const double on_grid = grid.volume_rule().integrate(weighted);
    const double beyond = tail.log_moment_beyond(grid.r_max(), static_cast<double>(dim - 1));
    return sphere_area(dim - 1) * (on_grid + beyond);
}

}  // namespace qcurv
