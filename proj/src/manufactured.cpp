#include "qcurv/manufactured.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "qcurv/errors.hpp"

namespace qcurv {

double smooth_bump(double r, double centre, double half_width)
{
    const double z = (r - centre) / half_width;
    if (std::abs(z) >= 1.0) {
        return 0.0;
    }
    return std::exp(1.0 - 1.0 / (1.0 - z * z));
}

RadialField mean_zero_bump_pair(const GridPtr& grid, const BumpPair& pair)
{
    if (!(pair.inner_width > 0.0 && pair.outer_width > 0.0 && pair.outer_centre > pair.outer_width)) {
        throw InvalidArgument("bump pair needs positive widths and an outer bump away from the origin");
    }
    if (pair.outer_centre + pair.outer_width > grid->r_max() || pair.inner_width > grid->r_max()) {
        throw InvalidArgument("bump pair support exceeds the grid");
    }
    const auto r = grid->nodes();
    std::vector<double> inner(r.size());
    std::vector<double> outer(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        inner[i] = smooth_bump(r[i], 0.0, pair.inner_width);
        outer[i] = smooth_bump(r[i], pair.outer_centre, pair.outer_width);
    }
    const double a = grid->volume_rule().integrate(inner) / grid->volume_rule().integrate(outer);
    std::vector<double> f(r.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        f[i] = inner[i] - a * outer[i];
    }
    return RadialField(grid, std::move(f), {}, {0.0, 0.0, std::numeric_limits<double>::infinity()});
}

std::vector<BumpPair> random_bump_pairs(int count, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> inner(0.8, 1.5);
    std::uniform_real_distribution<double> centre(2.0, 4.0);
    std::uniform_real_distribution<double> width(0.5, 1.0);
    std::vector<BumpPair> out;
    for (int i = 0; i < count; ++i) {
        BumpPair p;
        p.inner_width = inner(rng);
        p.outer_centre = centre(rng);
        p.outer_width = width(rng);
        out.push_back(p);
    }
    return out;
}

}  // namespace qcurv
