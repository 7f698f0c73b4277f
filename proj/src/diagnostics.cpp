#include "qcurv/diagnostics.hpp"

#include <cmath>
#include <limits>

#include "qcurv/errors.hpp"

namespace qcurv {

Certificate Certificate::evaluate(std::string name, double measured, double predicted, double tolerance,
                                  double scale)
{
    Certificate c;
    c.name = std::move(name);
    c.measured = measured;
    c.predicted = predicted;
    c.tolerance = tolerance;
    const double diff = std::abs(measured - predicted);
    c.rel_error = std::abs(predicted) > 1e-6 * scale ? diff / std::abs(predicted) : diff / scale;
    c.pass = std::isfinite(c.rel_error) && c.rel_error <= tolerance;
    return c;
}

Certificate Certificate::indeterminate(std::string name, double tolerance, std::string reason)
{
    Certificate c;
    c.name = std::move(name);
    c.measured = std::numeric_limits<double>::quiet_NaN();
    c.predicted = std::numeric_limits<double>::quiet_NaN();
    c.rel_error = std::numeric_limits<double>::quiet_NaN();
    c.tolerance = tolerance;
    c.pass = false;
    c.note = std::move(reason);
    return c;
}

namespace {

nlohmann::json number_or_null(double x)
{
    return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(nullptr);
}

double remainder_exponent(const RadialField& f)
{
    const double d = f.asymptote().decay_exp;
    return (std::isfinite(d) && d > 0.0) ? d : 2.0;
}

}  // namespace

nlohmann::json to_json(const Certificate& c)
{
    nlohmann::json j;
    j["name"] = c.name;
    j["measured"] = number_or_null(c.measured);
    j["predicted"] = number_or_null(c.predicted);
    j["rel_error"] = number_or_null(c.rel_error);
    j["tolerance"] = c.tolerance;
    j["pass"] = c.pass;
    if (!c.note.empty()) {
        j["note"] = c.note;
    }
    return j;
}

SampledCurvature sample_curvature(const CurvatureSpec& k, const RadialGrid& grid)
{
    SampledCurvature s;
    const auto r = grid.nodes();
    s.values.resize(r.size());
    s.euler.resize(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        s.values[i] = k.evaluate(r[i]);
        s.euler[i] = k.euler_derivative(r[i]);
    }
    s.mu = k.decay_exponent();
    return s;
}

SampledCurvature constant_curvature(double c, const RadialGrid& grid)
{
    SampledCurvature s;
    s.values.assign(grid.size(), c);
    s.euler.assign(grid.size(), 0.0);
    s.mu = 0.0;
    return s;
}

namespace {

TailModel density_tail(double mu, int n, double slope)
{
    if (std::isinf(mu)) {
        return TailModel::none();
    }
    return TailModel::power_law(mu - 2.0 * n * slope);
}

std::vector<double> weighted_exp(std::span<const double> coeff, const RadialField& u)
{
    const double two_n = 2.0 * u.grid().n();
    std::vector<double> out(u.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = coeff[i] == 0.0 ? 0.0 : coeff[i] * std::exp(two_n * u[i]);
    }
    return out;
}

double fitted_slope(const RadialField& u)
{
    return fit_log_slope(u.grid().nodes(), u.values(), FitWindow::last_decade(u.grid().r_max()),
                         remainder_exponent(u))
        .slope;
}

}  // namespace

CurvatureDensity curvature_density(const SampledCurvature& k, const RadialField& u, double log_slope)
{
    return {weighted_exp(k.values, u), density_tail(k.mu, u.grid().n(), log_slope)};
}

double total_curvature(const SampledCurvature& k, const RadialField& u, std::optional<double> log_slope)
{
    const double slope = log_slope ? *log_slope : fitted_slope(u);
    const CurvatureDensity d = curvature_density(k, u, slope);
    return integrate_fullspace(d.values, u.grid(), d.tail);
}

Certificate slope_certificate(const RadialField& u, double lambda_u, double tolerance)
{
    const double g = gamma_n(u.grid().order());
    const SlopeFit fit = fit_log_slope(u.grid().nodes(), u.values(), FitWindow::last_decade(u.grid().r_max()),
                                       remainder_exponent(u));
    return Certificate::evaluate("slope", fit.slope, -lambda_u / g, tolerance);
}

Certificate expansion_certificate(const RadialField& u, const SampledCurvature& k, double lambda_u,
                                  double alpha1_value, double tolerance)
{
    const RadialGrid& grid = u.grid();
    const double g = gamma_n(grid.order());
    if (!(lambda_u > -alpha1_value * g)) {
        return Certificate::indeterminate("expansion_const", tolerance,
                                          "total curvature does not exceed -alpha1 gamma_n");
    }
    const auto r = grid.nodes();
    const double slope = -lambda_u / g;
    std::vector<double> shifted(u.size());
    for (std::size_t i = 0; i < shifted.size(); ++i) {
        shifted[i] = r[i] > 0.0 ? u[i] - slope * std::log(r[i]) : 0.0;
    }
    const double measured =
        fit_limit(r, shifted, FitWindow::last_decade(grid.r_max()), remainder_exponent(u)).coeffs[0];
    const CurvatureDensity d = curvature_density(k, u, slope);
    const PowerTail tail = fit_tail(d.values, grid, d.tail);
    const double predicted = u[0] + integrate_fullspace_log_moment(d.values, grid, tail) / g;
    return Certificate::evaluate("expansion_const", measured, predicted, tolerance);
}

Certificate dk_certificate(const LaplacianChain& chain, int k, double alpha, double tolerance,
                           const StencilOptions& fd)
{
    if (chain.empty()) {
        throw InvalidArgument("empty Laplacian chain");
    }
    const RadialGrid& grid = chain.front().grid();
    const int n = grid.n();
    const std::string name = "dk_" + std::to_string(k);
    if (k < 1 || k > 2 * n - 1) {
        throw InvalidArgument("D_k certificate needs 1 <= k <= 2n-1");
    }
    const auto j = static_cast<std::size_t>(k / 2);
    if (j >= chain.size()) {
        throw InvalidArgument("Laplacian chain too short for D_k");
    }
    const RadialField& base = chain[j];
    std::vector<double> d;
    double trim = 0.0;
    if (k % 2 == 0) {
        d.assign(base.values().begin(), base.values().end());
    } else {
        d = radial_derivative(base.values(), grid, fd);
        trim = 0.02;
    }
    const auto r = grid.nodes();
    for (std::size_t i = 0; i < d.size(); ++i) {
        d[i] *= std::pow(r[i], k);
    }
    const LinearFit fit =
        fit_limit(r, d, FitWindow::last_decade(grid.r_max(), trim), remainder_exponent(chain.front()));
    return Certificate::evaluate(name, fit.coeffs[0], a_k(grid.order(), k) * alpha, tolerance);
}

Certificate pohozaev_certificate(const SampledCurvature& k, const RadialField& u, double lambda_u,
                                 double tolerance, std::optional<double> log_slope)
{
    const RadialGrid& grid = u.grid();
    const int n = grid.n();
    const double g = gamma_n(grid.order());
    const double slope = log_slope ? *log_slope : fitted_slope(u);
    const std::vector<double> dens = weighted_exp(k.euler, u);
    const double measured = integrate_fullspace(dens, grid, density_tail(k.mu, n, slope));
    const double predicted = (n * lambda_u / g) * (lambda_u - 2.0 * g);
    return Certificate::evaluate("pohozaev", measured, predicted, tolerance, g * g);
}

double pohozaev_predicted_lambda(double p, DimensionParam n)
{
    return total_sphere_curvature(n) * (1.0 + p / (2.0 * n.value()));
}

Certificate forward_residual_certificate(const RadialField& forward, const SampledCurvature& k,
                                         const RadialField& u, double r_cut, double tolerance, double floor)
{
    const int n = u.grid().n();
    const auto r = u.grid().nodes();
    const std::vector<double> rhs = weighted_exp(k.values, u);
    double peak = 0.0;
    for (std::size_t i = 0; i < rhs.size(); ++i) {
        if (r[i] <= r_cut) {
            peak = std::max(peak, std::abs(rhs[i]));
        }
    }
    if (peak == 0.0) {
        return Certificate::indeterminate("forward_residual", tolerance, "right-hand side vanishes on the window");
    }
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    double worst = 0.0;
    for (std::size_t i = 0; i < rhs.size(); ++i) {
        if (r[i] <= r_cut && std::abs(rhs[i]) >= floor * peak) {
            worst = std::max(worst, std::abs(sign * forward[i] - rhs[i]));
        }
    }
    return Certificate::evaluate("forward_residual", worst / peak, 0.0, tolerance);
}

}  // namespace qcurv
