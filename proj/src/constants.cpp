#include "qcurv/constants.hpp"

#include <cmath>
#include <string>

#include "qcurv/errors.hpp"

namespace qcurv {

DimensionParam::DimensionParam(int n) : n_(n)
{
    if (n < 1 || n > kMaxOrder) {
        throw InvalidArgument("order n must lie in [1, " + std::to_string(kMaxOrder) +
                              "], got " + std::to_string(n));
    }
}

double factorial(int k)
{
    if (k < 0) {
        throw InvalidArgument("factorial of negative integer");
    }
    double out = 1.0;
    for (int i = 2; i <= k; ++i) {
        out *= static_cast<double>(i);
    }
    return out;
}

double sphere_area(int m)
{
    if (m < 1) {
        throw InvalidArgument("sphere_area requires m >= 1, got " + std::to_string(m));
    }
    const double half = 0.5 * static_cast<double>(m + 1);
    const double log_area = std::log(static_cast<double>(m + 1)) + half * std::log(kPi) -
                            std::lgamma(0.5 * static_cast<double>(m + 3));
    return std::exp(log_area);
}

double gamma_n(DimensionParam n)
{
    const int k = n.value();
    return std::ldexp(1.0, 2 * k - 1) * factorial(k - 1) * std::pow(kPi, k);
}

double total_sphere_curvature(DimensionParam n)
{
    return 2.0 * gamma_n(n);
}

double a_k(DimensionParam n, int k)
{
    const int order = n.value();
    if (k < 1 || k > 2 * order - 1) {
        throw InvalidArgument("a_k requires 1 <= k <= 2n-1, got k=" + std::to_string(k));
    }
    const int half_lower = (k - 1) / 2;
    const int half = k / 2;
    const double sign = (half_lower % 2 == 0) ? 1.0 : -1.0;
    return sign * std::ldexp(1.0, k - 1) * factorial(half_lower) * factorial(order - 1) /
           factorial(order - 1 - half);
}

}  // namespace qcurv
