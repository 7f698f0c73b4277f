#pragma once

// Closed-form radial profiles used as exact references: functions of
// t = lambda^2 r^2 built from ln(1+t) and inverse powers of (1+t), which are
// closed under the radial Laplacian of R^{2n}, and even polynomials on [0,1].

#include <vector>

#include "qcurv/constants.hpp"

namespace qcurv {

/// g(r) = constant + log_coeff ln(1+t) + sum_{k>=1} inv_powers[k-1] (1+t)^{-k},  t = lambda^2 r^2.
class ShiftedLogSeries {
public:
    ShiftedLogSeries(DimensionParam n, double lambda, double constant, double log_coeff,
                     std::vector<double> inv_powers = {});

    [[nodiscard]] double value(double r) const;
    [[nodiscard]] double radial_derivative(double r) const;
    [[nodiscard]] ShiftedLogSeries laplacian() const;
    [[nodiscard]] ShiftedLogSeries laplacian_power(int k) const;
    [[nodiscard]] ShiftedLogSeries scaled(double a) const;

    [[nodiscard]] double lambda() const noexcept { return lambda_; }
    [[nodiscard]] double constant() const noexcept { return constant_; }
    [[nodiscard]] double log_coeff() const noexcept { return log_coeff_; }
    [[nodiscard]] const std::vector<double>& inv_powers() const noexcept { return inv_powers_; }

    /// Exponent sigma of the leading decay c r^{-sigma} of the non-constant part
    /// when there is no log term; +inf for a constant.
    [[nodiscard]] double decay_exponent() const;

private:
    DimensionParam n_;
    double lambda_;
    double constant_;
    double log_coeff_;
    std::vector<double> inv_powers_;
};

/// ln(2 lambda / (1 + lambda^2 r^2)), solving (-Delta)^n u = (2n-1)! e^{2nu}.
ShiftedLogSeries bubble_profile(DimensionParam n, double lambda = 1.0);

/// p(r) = sum_j coeffs[j] r^{2j}
class EvenPolynomial {
public:
    EvenPolynomial(DimensionParam n, std::vector<double> coeffs);

    [[nodiscard]] double value(double r) const;
    [[nodiscard]] double radial_derivative(double r) const;
    [[nodiscard]] EvenPolynomial laplacian() const;
    [[nodiscard]] const std::vector<double>& coeffs() const noexcept { return coeffs_; }

private:
    DimensionParam n_;
    std::vector<double> coeffs_;
};

/// Even polynomial of degree 4n agreeing with ln r to order 2n at r = 1.
EvenPolynomial log_blend_polynomial(DimensionParam n);

}  // namespace qcurv
