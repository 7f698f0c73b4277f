#include "qcurv/radial_field.hpp"

#include <algorithm>
#include <cmath>

#include "qcurv/errors.hpp"

namespace qcurv {

RadialField::RadialField(GridPtr grid, std::vector<double> values, PowerTail tail, Asymptote asymptote)
    : grid_(std::move(grid)), values_(std::move(values)), tail_(std::move(tail)), asymptote_(asymptote)
{
    if (!grid_) {
        throw InvalidArgument("radial field needs a grid");
    }
    if (values_.size() != grid_->size()) {
        throw InvalidArgument("radial field size does not match its grid");
    }
    for (double v : values_) {
        if (!std::isfinite(v)) {
            throw InvalidArgument("radial field values must be finite");
        }
    }
}

RadialField RadialField::zeros(GridPtr grid)
{
    const std::size_t n = grid->size();
    Asymptote a;
    a.decay_exp = std::numeric_limits<double>::infinity();
    return RadialField(std::move(grid), std::vector<double>(n, 0.0), {}, a);
}

RadialField RadialField::sample(GridPtr grid, const std::function<double(double)>& f, const TailModel& tail)
{
    std::vector<double> v(grid->size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = f(grid->node(i));
    }
    PowerTail fitted = fit_tail(v, *grid, tail);
    Asymptote a;
    if (tail.kind == TailModel::Kind::PowerLaw) {
        a.decay_exp = tail.exponent;
    }
    return RadialField(std::move(grid), std::move(v), std::move(fitted), a);
}

double RadialField::sup_norm() const
{
    double m = 0.0;
    for (double v : values_) {
        m = std::max(m, std::abs(v));
    }
    return m;
}

RadialField linear_combination(double a, const RadialField& x, double b, const RadialField& y)
{
    if (x.size() != y.size() || x.grid().r_max() != y.grid().r_max()) {
        throw InvalidArgument("linear_combination of fields on different grids");
    }
    std::vector<double> v(x.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        v[i] = a * x[i] + b * y[i];
    }
    PowerTail tail = x.tail().scaled(a) + y.tail().scaled(b);
    Asymptote asym;
    asym.log_coeff = a * x.asymptote().log_coeff + b * y.asymptote().log_coeff;
    asym.const_term = a * x.asymptote().const_term + b * y.asymptote().const_term;
    asym.decay_exp = std::fmin(x.asymptote().decay_exp, y.asymptote().decay_exp);
    return RadialField(x.grid_ptr(), std::move(v), std::move(tail), asym);
}

}  // namespace qcurv
