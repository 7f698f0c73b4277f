#include "qcurv/finite_difference.hpp"

#include <algorithm>
#include <cmath>

#include "qcurv/errors.hpp"
#include "qcurv/grid.hpp"

namespace qcurv {

std::vector<std::vector<double>> fornberg_weights(double x0, std::span<const double> points, int max_order)
{
    const int n = static_cast<int>(points.size()) - 1;
    const int mo = max_order;
    std::vector<std::vector<double>> c(static_cast<std::size_t>(mo + 1),
                                       std::vector<double>(points.size(), 0.0));
    double c1 = 1.0;
    double c4 = points[0] - x0;
    c[0][0] = 1.0;
    for (int i = 1; i <= n; ++i) {
        const int mn = std::min(i, mo);
        double c2 = 1.0;
        const double c5 = c4;
        c4 = points[static_cast<std::size_t>(i)] - x0;
        for (int j = 0; j < i; ++j) {
            const double c3 = points[static_cast<std::size_t>(i)] - points[static_cast<std::size_t>(j)];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k) {
                    auto& ck = c[static_cast<std::size_t>(k)];
                    const auto& ckm = c[static_cast<std::size_t>(k - 1)];
                    ck[static_cast<std::size_t>(i)] =
                        c1 * (k * ckm[static_cast<std::size_t>(i - 1)] - c5 * ck[static_cast<std::size_t>(i - 1)]) / c2;
                }
                c[0][static_cast<std::size_t>(i)] = -c1 * c5 * c[0][static_cast<std::size_t>(i - 1)] / c2;
            }
            for (int k = mn; k >= 1; --k) {
                auto& ck = c[static_cast<std::size_t>(k)];
                const auto& ckm = c[static_cast<std::size_t>(k - 1)];
                ck[static_cast<std::size_t>(j)] =
                    (c4 * ck[static_cast<std::size_t>(j)] - k * ckm[static_cast<std::size_t>(j)]) / c3;
            }
            c[0][static_cast<std::size_t>(j)] = c4 * c[0][static_cast<std::size_t>(j)] / c3;
        }
        c1 = c2;
    }
    return c;
}

namespace {

struct Stencil {
    std::vector<double> positions;
    std::vector<std::size_t> sources;
    bool reflected = false;
    long stride = 1;
};

Stencil stencil_at(std::size_t i, std::span<const double> r, const StencilOptions& opts)
{
    const long last = static_cast<long>(r.size()) - 1;
    const long hw = opts.half_width;
    const double h = (static_cast<long>(i) < last) ? r[i + 1] - r[i] : r[i] - r[i - 1];
    long stride = std::max(1L, static_cast<long>(std::ceil(opts.min_spacing / h)));
    stride = std::min(stride, std::max(1L, last / (2 * hw)));
    long first = static_cast<long>(i) - hw * stride;
    const long top = first + 2 * hw * stride;
    if (top > last) {
        first -= (top - last + stride - 1) / stride * stride;
    }
    Stencil s;
    s.stride = stride;
    for (long j = 0; j <= 2 * hw; ++j) {
        const long idx = first + j * stride;
        const auto src = static_cast<std::size_t>(std::abs(idx));
        s.sources.push_back(src);
        s.positions.push_back(idx < 0 ? -r[src] : r[src]);
    }
    s.reflected = first < 0;
    return s;
}

// Near the origin v is even, v(r) = V(r^2). Differencing V in t = r^2 avoids
// dividing an O(h^k) derivative error by a tiny r.
struct EvenWeights {
    std::vector<std::size_t> sources;
    std::vector<std::vector<double>> c;  // d/dt weights of order 0..2
};

EvenWeights even_weights(double r0, const Stencil& s, std::span<const double> r, int half_width)
{
    // nodes 0, k, 2k, ... on one side; mirrored points would duplicate t values
    EvenWeights e;
    std::vector<double> t;
    for (long j = 0; j <= half_width + 1; ++j) {
        const auto src = static_cast<std::size_t>(j * s.stride);
        e.sources.push_back(src);
        t.push_back(r[src] * r[src]);
    }
    e.c = fornberg_weights(r0 * r0, t, 2);
    return e;
}

}  // namespace

std::vector<double> radial_derivative(std::span<const double> values, const RadialGrid& grid,
                                      const StencilOptions& opts)
{
    const auto r = grid.nodes();
    if (r.size() < static_cast<std::size_t>(2 * opts.half_width + 1)) {
        throw InvalidArgument("grid too small for the finite-difference stencil");
    }
    std::vector<double> out(r.size(), 0.0);
    for (std::size_t i = 1; i < r.size(); ++i) {
        const Stencil s = stencil_at(i, r, opts);
        if (s.reflected) {
            // v' = 2 r V'
            const EvenWeights e = even_weights(r[i], s, r, opts.half_width);
            double d1 = 0.0;
            for (std::size_t j = 0; j < e.sources.size(); ++j) {
                d1 += e.c[1][j] * values[e.sources[j]];
            }
            out[i] = 2.0 * r[i] * d1;
            continue;
        }
        const auto c = fornberg_weights(r[i], s.positions, 1);
        double acc = 0.0;
        for (std::size_t j = 0; j < s.sources.size(); ++j) {
            acc += c[1][j] * values[s.sources[j]];
        }
        out[i] = acc;
    }
    return out;
}

std::vector<double> radial_laplacian(std::span<const double> values, const RadialGrid& grid,
                                     const StencilOptions& opts)
{
    const auto r = grid.nodes();
    if (r.size() < static_cast<std::size_t>(2 * opts.half_width + 1)) {
        throw InvalidArgument("grid too small for the finite-difference stencil");
    }
    const double dim = 2.0 * grid.n();
    std::vector<double> out(r.size(), 0.0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        const Stencil s = stencil_at(i, r, opts);
        if (s.reflected) {
            // Delta v = 4 t V'' + 2 dim V'
            const EvenWeights e = even_weights(r[i], s, r, opts.half_width);
            double d1 = 0.0;
            double d2 = 0.0;
            for (std::size_t j = 0; j < e.sources.size(); ++j) {
                d1 += e.c[1][j] * values[e.sources[j]];
                d2 += e.c[2][j] * values[e.sources[j]];
            }
            out[i] = 4.0 * r[i] * r[i] * d2 + 2.0 * dim * d1;
            continue;
        }
        const auto c = fornberg_weights(r[i], s.positions, 2);
        double d1 = 0.0;
        double d2 = 0.0;
        for (std::size_t j = 0; j < s.sources.size(); ++j) {
            d1 += c[1][j] * values[s.sources[j]];
            d2 += c[2][j] * values[s.sources[j]];
        }
        out[i] = (i == 0) ? dim * d2 : d2 + (dim - 1.0) * d1 / r[i];
    }
    return out;
}

}  // namespace qcurv
