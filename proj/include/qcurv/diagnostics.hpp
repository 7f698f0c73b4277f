#pragma once

// Certificates: identities a normal solution of (-Delta)^n u = K e^{2nu} must
// satisfy, evaluated on computed or analytic fields.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcurv/asymptotics.hpp"
#include "qcurv/curvature.hpp"
#include "qcurv/finite_difference.hpp"
#include "qcurv/radial_field.hpp"

namespace qcurv {

struct Certificate {
    std::string name;
    double measured = 0.0;
    double predicted = 0.0;
    double rel_error = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string note;

    /// Relative error against `predicted`; when |predicted| <= 1e-6 scale the
    /// error is measured absolutely in units of `scale`.
    static Certificate evaluate(std::string name, double measured, double predicted, double tolerance,
                                double scale = 1.0);
    /// A certificate that could not be evaluated; never passes.
    static Certificate indeterminate(std::string name, double tolerance, std::string reason);
};

nlohmann::json to_json(const Certificate& c);

/// K and x . grad K sampled on a grid, with the far-field decay |K| ~ r^{-mu}.
/// Not restricted to K <= 0, so the positive-curvature bubble can be certified.
struct SampledCurvature {
    std::vector<double> values;
    std::vector<double> euler;
    double mu = 0.0;  ///< +inf for compact support
};

SampledCurvature sample_curvature(const CurvatureSpec& k, const RadialGrid& grid);
SampledCurvature constant_curvature(double c, const RadialGrid& grid);

/// Integrand K e^{2nu} and (x . grad K) e^{2nu} with their tail models for u ~ slope ln r.
struct CurvatureDensity {
    std::vector<double> values;
    TailModel tail;
};
CurvatureDensity curvature_density(const SampledCurvature& k, const RadialField& u, double log_slope);

/// Lambda_u = int K e^{2nu} dx. The tail exponent is mu - 2n * slope, where
/// the slope is fitted on the last decade unless given.
double total_curvature(const SampledCurvature& k, const RadialField& u,
                       std::optional<double> log_slope = std::nullopt);

/// Least-squares slope of u against ln r on the last decade; predicted -Lambda_u / gamma_n.
Certificate slope_certificate(const RadialField& u, double lambda_u, double tolerance = 0.01);

/// Far-field constant of u + (Lambda_u/gamma_n) ln r against u(0) + (1/gamma_n) int ln|y| K e^{2nu} dy.
/// Skipped unless Lambda_u > -alpha1 gamma_n.
Certificate expansion_certificate(const RadialField& u, const SampledCurvature& k, double lambda_u,
                                  double alpha1_value, double tolerance = 0.01);

/// Laplacian powers Delta^j u, j = 0..n-1, all on the same grid.
using LaplacianChain = std::vector<RadialField>;

/// D_k u = Delta^{k/2} u (k even) or d/dr Delta^{(k-1)/2} u (k odd); certifies r^k D_k u -> A_k alpha.
Certificate dk_certificate(const LaplacianChain& chain, int k, double alpha, double tolerance = 0.02,
                           const StencilOptions& fd = {});

/// int (x . grad K) e^{2nu} dx against (n Lambda_u / gamma_n)(Lambda_u - 2 gamma_n).
/// The scale for a vanishing prediction is gamma_n^2.
Certificate pohozaev_certificate(const SampledCurvature& k, const RadialField& u, double lambda_u,
                                 double tolerance = 0.01, std::optional<double> log_slope = std::nullopt);

/// Lambda for K = -r^p read off the Pohozaev identity: Lambda(S^{2n}) (1 + p/(2n)).
double pohozaev_predicted_lambda(double p, DimensionParam n);

/// sup |(-Delta)^n u - K e^{2nu}| / sup |K e^{2nu}| over nodes r <= r_cut where
/// |K e^{2nu}| >= floor * max. `forward` is Delta^n u.
Certificate forward_residual_certificate(const RadialField& forward, const SampledCurvature& k,
                                         const RadialField& u, double r_cut, double tolerance,
                                         double floor = 1e-8);

}  // namespace qcurv
