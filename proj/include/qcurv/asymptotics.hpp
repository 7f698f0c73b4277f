#pragma once

// Weighted least-squares fits of far-field behaviour on a window of nodes.

#include <functional>
#include <span>
#include <vector>

namespace qcurv {

/// Nodes with lo <= r <= hi take part in a fit.
struct FitWindow {
    double lo = 0.0;
    double hi = 0.0;

    /// [r_max/10, r_max * (1 - trim)]
    static FitWindow last_decade(double r_max, double trim = 0.0) { return {0.1 * r_max, r_max * (1.0 - trim)}; }
};

struct LinearFit {
    std::vector<double> coeffs;
    double rms = 0.0;  ///< weighted rms residual
    std::size_t count = 0;
};

/// min sum_i r_i^weight_power (y_i - sum_k c_k phi_k(r_i))^2 over the window.
LinearFit weighted_fit(std::span<const double> r, std::span<const double> y,
                       const std::vector<std::function<double(double)>>& basis, const FitWindow& window,
                       double weight_power = 2.0);

struct SlopeFit {
    double slope = 0.0;
    double intercept = 0.0;
    double rms = 0.0;
};

/// y ~ slope ln r + intercept + c1 r^{-delta} + c2 r^{-delta-1}
SlopeFit fit_log_slope(std::span<const double> r, std::span<const double> y, const FitWindow& window,
                       double delta = 2.0);

/// y ~ limit + c1 r^{-delta} + c2 r^{-delta-1}; returns {limit, rms}.
LinearFit fit_limit(std::span<const double> r, std::span<const double> y, const FitWindow& window,
                    double delta = 2.0);

struct DecayFit {
    double exponent = 0.0;
    double coeff = 0.0;
    double rms = 0.0;
};

/// y ~ c r^{-sigma} + b r^{-remainder}, minimizing the relative residual over sigma.
/// Without a remainder exponent (<= 0) a plain log-log fit is used.
DecayFit fit_decay_exponent(std::span<const double> r, std::span<const double> y, const FitWindow& window,
                            double remainder = 0.0);

}  // namespace qcurv
