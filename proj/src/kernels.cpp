#include "qcurv/kernels.hpp"

#include <algorithm>
#include <vector>

#include <omp.h>

#include "qcurv/grid.hpp"

namespace qcurv::kernels {

namespace {

// Row i of the log-potential integral. Shared by both variants so their
// outputs are bitwise identical.
double log_potential_row(const LogPotentialInputs& in, std::size_t i, std::vector<double>& g)
{
    const auto nodes = in.nodes;
    const auto f = in.density;
    const std::size_t size = nodes.size();
    const double r = nodes[i];
    for (std::size_t k = 0; k < size; ++k) {
        g[k] = (f[k] == 0.0) ? 0.0 : f[k] * angular_log_mean(r, nodes[k], in.angle_cosines, in.angle_weights);
    }
    const IntervalRule& rule = *in.volume_rule;
    const auto w = rule.node_weights();
    double acc = 0.0;
    for (std::size_t k = 0; k < size; ++k) {
        acc += w[k] * g[k];
    }
    // L(r_i, .) has a derivative kink at s = r_i: keep the two adjacent
    // interval stencils on one side of it.
    const int ii = static_cast<int>(i);
    const std::span<const double> gs(g);
    if (ii >= 1) {
        acc += rule.interval_integral(ii - 1, gs, IntervalRule::LeftLeaning) -
               rule.interval_integral(ii - 1, gs, IntervalRule::Centered);
    }
    if (ii < rule.intervals()) {
        acc += rule.interval_integral(ii, gs, IntervalRule::RightLeaning) -
               rule.interval_integral(ii, gs, IntervalRule::Centered);
    }
    return acc;
}

}  // namespace

namespace serial {

double dot(std::span<const double> a, std::span<const double> b)
{
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += a[i] * b[i];
    }
    return acc;
}

double abs_dot(std::span<const double> w, std::span<const double> f)
{
    double acc = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        acc += w[i] * std::abs(f[i]);
    }
    return acc;
}

void scaled_exp(std::span<const double> coeff, std::span<const double> phase, double shift,
                std::span<double> out)
{
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = coeff[i] * std::exp(phase[i] + shift);
    }
}

void log_potential_rows(const LogPotentialInputs& in, std::span<double> out)
{
    std::vector<double> g(in.nodes.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = log_potential_row(in, i, g);
    }
}

}  // namespace serial

namespace omp {

namespace {

template <class Term>
double blocked_sum(std::size_t n, Term term)
{
    const std::size_t blocks = (n + kReductionBlock - 1) / kReductionBlock;
    std::vector<double> partial(blocks, 0.0);
    const auto nb = static_cast<std::ptrdiff_t>(blocks);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t b = 0; b < nb; ++b) {
        const std::size_t lo = static_cast<std::size_t>(b) * kReductionBlock;
        const std::size_t hi = std::min(n, lo + kReductionBlock);
        double acc = 0.0;
        for (std::size_t i = lo; i < hi; ++i) {
            acc += term(i);
        }
        partial[static_cast<std::size_t>(b)] = acc;
    }
    double total = 0.0;
    for (double p : partial) {
        total += p;
    }
    return total;
}

}  // namespace

double dot(std::span<const double> a, std::span<const double> b)
{
    return blocked_sum(a.size(), [&](std::size_t i) { return a[i] * b[i]; });
}

double abs_dot(std::span<const double> w, std::span<const double> f)
{
    return blocked_sum(w.size(), [&](std::size_t i) { return w[i] * std::abs(f[i]); });
}

void scaled_exp(std::span<const double> coeff, std::span<const double> phase, double shift,
                std::span<double> out)
{
    const auto n = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        const auto k = static_cast<std::size_t>(i);
        out[k] = coeff[k] * std::exp(phase[k] + shift);
    }
}

void log_potential_rows(const LogPotentialInputs& in, std::span<double> out)
{
    const auto n = static_cast<std::ptrdiff_t>(out.size());
#pragma omp parallel
    {
        std::vector<double> g(in.nodes.size());
#pragma omp for schedule(dynamic, 16)
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            out[static_cast<std::size_t>(i)] = log_potential_row(in, static_cast<std::size_t>(i), g);
        }
    }
}

}  // namespace omp

}  // namespace qcurv::kernels
