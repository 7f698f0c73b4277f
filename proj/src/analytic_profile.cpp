#include "qcurv/analytic_profile.hpp"

#include <cmath>
#include <limits>

#include <Eigen/Dense>

#include "qcurv/errors.hpp"

namespace qcurv {

ShiftedLogSeries::ShiftedLogSeries(DimensionParam n, double lambda, double constant, double log_coeff,
                                   std::vector<double> inv_powers)
    : n_(n), lambda_(lambda), constant_(constant), log_coeff_(log_coeff), inv_powers_(std::move(inv_powers))
{
    if (!(lambda > 0.0)) {
        throw InvalidArgument("profile scale lambda must be positive");
    }
}

double ShiftedLogSeries::value(double r) const
{
    const double t = lambda_ * lambda_ * r * r;
    const double p = 1.0 + t;
    double acc = constant_ + log_coeff_ * std::log1p(t);
    double pk = 1.0;
    for (double c : inv_powers_) {
        pk /= p;
        acc += c * pk;
    }
    return acc;
}

double ShiftedLogSeries::radial_derivative(double r) const
{
    const double l2 = lambda_ * lambda_;
    const double p = 1.0 + l2 * r * r;
    // dg/dt, then chain rule dt/dr = 2 lambda^2 r
    double dg = log_coeff_ / p;
    double pk = 1.0 / p;
    for (std::size_t k = 1; k <= inv_powers_.size(); ++k) {
        pk /= p;
        dg -= static_cast<double>(k) * inv_powers_[k - 1] * pk;
    }
    return 2.0 * l2 * r * dg;
}

ShiftedLogSeries ShiftedLogSeries::laplacian() const
{
    const double n = n_.value();
    const double l2 = lambda_ * lambda_;
    std::vector<double> out(inv_powers_.size() + 2, 0.0);
    auto add = [&](std::size_t k, double c) { out[k - 1] += l2 * c; };
    add(1, (4.0 * n - 4.0) * log_coeff_);
    add(2, 4.0 * log_coeff_);
    for (std::size_t k = 1; k <= inv_powers_.size(); ++k) {
        const double c = inv_powers_[k - 1];
        const double kk = static_cast<double>(k);
        add(k + 1, c * (4.0 * kk * (kk + 1.0) - 4.0 * n * kk));
        add(k + 2, -c * 4.0 * kk * (kk + 1.0));
    }
    while (!out.empty() && out.back() == 0.0) {
        out.pop_back();
    }
    return {n_, lambda_, 0.0, 0.0, std::move(out)};
}

ShiftedLogSeries ShiftedLogSeries::laplacian_power(int k) const
{
    if (k < 0) {
        throw InvalidArgument("negative Laplacian power");
    }
    ShiftedLogSeries g = *this;
    for (int j = 0; j < k; ++j) {
        g = g.laplacian();
    }
    return g;
}

ShiftedLogSeries ShiftedLogSeries::scaled(double a) const
{
    std::vector<double> c = inv_powers_;
    for (double& x : c) {
        x *= a;
    }
    return {n_, lambda_, a * constant_, a * log_coeff_, std::move(c)};
}

double ShiftedLogSeries::decay_exponent() const
{
    if (log_coeff_ != 0.0) {
        throw InvalidArgument("profile with a log term does not decay");
    }
    for (std::size_t k = 1; k <= inv_powers_.size(); ++k) {
        if (inv_powers_[k - 1] != 0.0) {
            return 2.0 * static_cast<double>(k);
        }
    }
    return std::numeric_limits<double>::infinity();
}

ShiftedLogSeries bubble_profile(DimensionParam n, double lambda)
{
    return {n, lambda, std::log(2.0 * lambda), -1.0};
}

EvenPolynomial::EvenPolynomial(DimensionParam n, std::vector<double> coeffs) : n_(n), coeffs_(std::move(coeffs)) {}

double EvenPolynomial::value(double r) const
{
    const double x = r * r;
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

double EvenPolynomial::radial_derivative(double r) const
{
    const double x = r * r;
    double acc = 0.0;
    for (std::size_t j = coeffs_.size(); j-- > 1;) {
        acc = acc * x + 2.0 * static_cast<double>(j) * coeffs_[j];
    }
    return acc * r;
}

EvenPolynomial EvenPolynomial::laplacian() const
{
    // Delta r^{2j} = 2j (2j + 2n - 2) r^{2j-2}
    const double n = n_.value();
    std::vector<double> out(coeffs_.size() > 1 ? coeffs_.size() - 1 : 1, 0.0);
    for (std::size_t j = 1; j < coeffs_.size(); ++j) {
        const double jj = static_cast<double>(j);
        out[j - 1] = 2.0 * jj * (2.0 * jj + 2.0 * n - 2.0) * coeffs_[j];
    }
    return {n_, std::move(out)};
}

EvenPolynomial log_blend_polynomial(DimensionParam n)
{
    const int m = 2 * n.value();
    const int size = m + 1;
    Eigen::MatrixXd a(size, size);
    Eigen::VectorXd b(size);
    for (int order = 0; order < size; ++order) {
        // order-th derivative of r^{2j} at r = 1 is the falling factorial (2j)_order
        for (int j = 0; j < size; ++j) {
            double f = 1.0;
            for (int q = 0; q < order; ++q) {
                f *= static_cast<double>(2 * j - q);
            }
            a(order, j) = f;
        }
        // order-th derivative of ln r at r = 1
        b(order) = order == 0 ? 0.0 : ((order % 2 == 1) ? 1.0 : -1.0) * factorial(order - 1);
    }
    const Eigen::VectorXd c = a.fullPivLu().solve(b);
    return {n, std::vector<double>(c.data(), c.data() + c.size())};
}

}  // namespace qcurv
