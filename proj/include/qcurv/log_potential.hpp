#pragma once

// Logarithmic-kernel representations of radial data on R^{2n}, evaluated by
// averaging ln|x - y| over spheres with a Gauss-Jacobi angular rule. Used as
// an independent check on the radial inversion path.

#include <vector>

#include "qcurv/constants.hpp"
#include "qcurv/radial_field.hpp"

namespace qcurv {

/// Nodes and weights for averaging over the angle between x and y on S^{2n-1}:
/// the measure sin^{2n-2}(theta) d theta, normalized to total weight 1.
class AngularRule {
public:
    explicit AngularRule(DimensionParam n, int points = 64);

    [[nodiscard]] int n() const noexcept { return n_.value(); }
    [[nodiscard]] int points() const noexcept { return static_cast<int>(cosines_.size()); }
    [[nodiscard]] const std::vector<double>& angles() const noexcept { return angles_; }
    [[nodiscard]] const std::vector<double>& cosines() const noexcept { return cosines_; }
    [[nodiscard]] const std::vector<double>& weights() const noexcept { return weights_; }

    /// Mean of cos(k theta) under the rule.
    [[nodiscard]] double cosine_moment(int k) const;

    /// |mean at r = s = 1 with this rule - mean with half the points|; the
    /// rule is least accurate on the diagonal.
    [[nodiscard]] double diagonal_error_estimate() const;

private:
    DimensionParam n_;
    std::vector<double> angles_;
    std::vector<double> cosines_;
    std::vector<double> weights_;
};

/// Mean of ln|x - y| over |y| = s for |x| = r. Requires (r, s) != (0, 0).
double log_kernel_mean(double r, double s, const AngularRule& rule);

/// v(r) = -(1/gamma_n) int ln|x - y| f(y) dy, with the power-law tail of f
/// integrated analytically past r_max.
RadialField log_potential_radial(const RadialField& f, const AngularRule& rule);

/// u(r) = (1/gamma_n) int ln(|y| / |x - y|) f(y) dy.
RadialField normal_representation(const RadialField& f, const AngularRule& rule);

}  // namespace qcurv
