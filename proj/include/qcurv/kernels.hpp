#pragma once

// Data-parallel inner loops. Every kernel has a plain serial reference in
// kernels::serial and an OpenMP version in kernels::omp. The OpenMP reductions
// sum fixed-size blocks and combine the partials in block order, so their
// result does not depend on the thread count.

#include <cmath>
#include <cstddef>
#include <span>

namespace qcurv {
class IntervalRule;
}

namespace qcurv::kernels {

inline constexpr std::size_t kReductionBlock = 1024;

/// Inputs of the on-grid part of the radial log-potential double integral.
struct LogPotentialInputs {
    std::span<const double> nodes;           ///< r_0 = 0 < ... < r_N
    const IntervalRule* volume_rule;         ///< product rule for s^{2n-1} ds
    std::span<const double> angle_cosines;   ///< t_j = cos(theta_j)
    std::span<const double> angle_weights;   ///< normalized, sum to 1
    std::span<const double> density;         ///< f(s_k)
};

/// sum_j w_j (1/2) ln(r^2 + s^2 - 2 r s t_j); 0 at r = s = 0.
inline double angular_log_mean(double r, double s, std::span<const double> t, std::span<const double> w)
{
    if (r == 0.0 && s == 0.0) {
        return 0.0;
    }
    if (r == 0.0 || s == 0.0) {
        return std::log(r + s);
    }
    const double cross = 2.0 * r * s;
    double acc = 0.0;
    for (std::size_t j = 0; j < t.size(); ++j) {
        // 1 - t_j >= 0; written this way to keep r = s accurate
        const double d = (r - s) * (r - s) + cross * (1.0 - t[j]);
        acc += w[j] * std::log(d);
    }
    return 0.5 * acc;
}

namespace serial {
double dot(std::span<const double> a, std::span<const double> b);
double abs_dot(std::span<const double> w, std::span<const double> f);
/// out_i = coeff_i * exp(phase_i + shift)
void scaled_exp(std::span<const double> coeff, std::span<const double> phase, double shift,
                std::span<double> out);
/// out_i = int_0^{r_max} L(r_i, s) f(s) s^{2n-1} ds with kink-aware stencils at s = r_i.
void log_potential_rows(const LogPotentialInputs& in, std::span<double> out);
}  // namespace serial

namespace omp {
double dot(std::span<const double> a, std::span<const double> b);
double abs_dot(std::span<const double> w, std::span<const double> f);
void scaled_exp(std::span<const double> coeff, std::span<const double> phase, double shift,
                std::span<double> out);
void log_potential_rows(const LogPotentialInputs& in, std::span<double> out);
}  // namespace omp

}  // namespace qcurv::kernels
