#include "qcurv/asymptotics.hpp"

#include <cmath>
#include <limits>

#include <Eigen/Dense>

#include "qcurv/errors.hpp"

namespace qcurv {

LinearFit weighted_fit(std::span<const double> r, std::span<const double> y,
                       const std::vector<std::function<double(double)>>& basis, const FitWindow& window,
                       double weight_power)
{
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (r[i] >= window.lo && r[i] <= window.hi && r[i] > 0.0) {
            idx.push_back(i);
        }
    }
    const auto m = static_cast<Eigen::Index>(idx.size());
    const auto k = static_cast<Eigen::Index>(basis.size());
    if (m < k + 1) {
        throw InvalidArgument("fit window holds too few nodes");
    }
    Eigen::MatrixXd a(m, k);
    Eigen::VectorXd b(m);
    for (Eigen::Index i = 0; i < m; ++i) {
        const double x = r[idx[static_cast<std::size_t>(i)]];
        const double sw = std::pow(x, 0.5 * weight_power);
        for (Eigen::Index j = 0; j < k; ++j) {
            a(i, j) = sw * basis[static_cast<std::size_t>(j)](x);
        }
        b(i) = sw * y[idx[static_cast<std::size_t>(i)]];
    }
    // Column scaling keeps the normal problem well conditioned.
    Eigen::VectorXd colscale = a.colwise().norm().transpose();
    for (Eigen::Index j = 0; j < k; ++j) {
        if (colscale(j) == 0.0) {
            colscale(j) = 1.0;
        }
        a.col(j) /= colscale(j);
    }
    const Eigen::VectorXd c = a.colPivHouseholderQr().solve(b);
    const Eigen::VectorXd res = a * c - b;
    double wsum = 0.0;
    for (std::size_t i : idx) {
        wsum += std::pow(r[i], weight_power);
    }
    LinearFit fit;
    fit.count = idx.size();
    fit.rms = std::sqrt(res.squaredNorm() / wsum);
    fit.coeffs.resize(static_cast<std::size_t>(k));
    for (Eigen::Index j = 0; j < k; ++j) {
        fit.coeffs[static_cast<std::size_t>(j)] = c(j) / colscale(j);
    }
    return fit;
}

SlopeFit fit_log_slope(std::span<const double> r, std::span<const double> y, const FitWindow& window, double delta)
{
    const LinearFit f = weighted_fit(
        r, y, {[](double x) { return std::log(x); }, [](double) { return 1.0; },
               [delta](double x) { return std::pow(x, -delta); },
               [delta](double x) { return std::pow(x, -delta - 1.0); }},
        window);
    return {f.coeffs[0], f.coeffs[1], f.rms};
}

LinearFit fit_limit(std::span<const double> r, std::span<const double> y, const FitWindow& window, double delta)
{
    return weighted_fit(r, y,
                        {[](double) { return 1.0; }, [delta](double x) { return std::pow(x, -delta); },
                         [delta](double x) { return std::pow(x, -delta - 1.0); }},
                        window);
}

namespace {

struct Trial {
    double rel_rms;
    double coeff;
};

Trial decay_trial(std::span<const double> r, std::span<const double> y, const FitWindow& window, double sigma,
                  double remainder)
{
    std::vector<std::function<double(double)>> basis{[sigma](double x) { return std::pow(x, -sigma); }};
    if (remainder > 0.0 && std::abs(remainder - sigma) > 1e-3) {
        basis.push_back([remainder](double x) { return std::pow(x, -remainder); });
    }
    // Scale by r^sigma so every part of the window counts equally.
    std::vector<double> ys(y.begin(), y.end());
    std::vector<std::function<double(double)>> scaled;
    for (auto& phi : basis) {
        scaled.push_back([phi, sigma](double x) { return phi(x) * std::pow(x, sigma); });
    }
    for (std::size_t i = 0; i < ys.size(); ++i) {
        ys[i] = r[i] > 0.0 ? ys[i] * std::pow(r[i], sigma) : 0.0;
    }
    const LinearFit f = weighted_fit(r, ys, scaled, window, 0.0);
    const double c = f.coeffs[0];
    return {std::abs(c) > 0.0 ? f.rms / std::abs(c) : std::numeric_limits<double>::infinity(), c};
}

}  // namespace

DecayFit fit_decay_exponent(std::span<const double> r, std::span<const double> y, const FitWindow& window,
                            double remainder)
{
    if (remainder <= 0.0) {
        std::vector<double> ly(y.size(), 0.0);
        for (std::size_t i = 0; i < y.size(); ++i) {
            if (r[i] >= window.lo && r[i] <= window.hi) {
                if (y[i] == 0.0) {
                    throw InvalidArgument("decay fit needs a field without zeros on the window");
                }
                ly[i] = std::log(std::abs(y[i]));
            }
        }
        const LinearFit f = weighted_fit(
            r, ly, {[](double) { return 1.0; }, [](double x) { return std::log(x); }}, window, 0.0);
        return {-f.coeffs[1], std::exp(f.coeffs[0]), f.rms};
    }
    // Scan, then golden-section refinement around the best sample.
    const double lo = 0.05;
    const double hi = remainder + 4.0;
    const int samples = 200;
    double best = lo;
    double best_val = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= samples; ++i) {
        const double s = lo + (hi - lo) * i / samples;
        const double v = decay_trial(r, y, window, s, remainder).rel_rms;
        if (v < best_val) {
            best_val = v;
            best = s;
        }
    }
    const double step = (hi - lo) / samples;
    double a = std::max(lo, best - step);
    double b = std::min(hi, best + step);
    const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - phi * (b - a);
    double x2 = a + phi * (b - a);
    double f1 = decay_trial(r, y, window, x1, remainder).rel_rms;
    double f2 = decay_trial(r, y, window, x2, remainder).rel_rms;
    for (int it = 0; it < 80 && b - a > 1e-10; ++it) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - phi * (b - a);
            f1 = decay_trial(r, y, window, x1, remainder).rel_rms;
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + phi * (b - a);
            f2 = decay_trial(r, y, window, x2, remainder).rel_rms;
        }
    }
    const double s = 0.5 * (a + b);
    const Trial t = decay_trial(r, y, window, s, remainder);
    return {s, t.coeff, t.rel_rms};
}

}  // namespace qcurv
