#pragma once

// Damped Picard iteration for radial normal solutions of
// (-Delta)^n u = K e^{2nu} with K <= 0 and prescribed log-slope alpha:
// u = w + alpha u0 + c_w/(2n), where c_w fixes the total curvature to -alpha gamma_n.

#include <cstdint>
#include <string>
#include <vector>

#include "qcurv/curvature.hpp"
#include "qcurv/diagnostics.hpp"
#include "qcurv/radial_linear.hpp"

namespace qcurv {

enum class U0Mode { AnalyticBubble, CompactBlend };
enum class InitMode { Zero, RandomBump };

std::string to_string(U0Mode m);
U0Mode u0_mode_from_string(const std::string& s);

struct CertificateTolerances {
    double slope = 0.01;
    double expansion = 0.01;
    double dk = 0.02;
    double pohozaev = 0.01;
    double lambda = 1e-8;
    double forward_residual = 1e-3;
};

struct SolveConfig {
    int n = 2;
    double alpha = 0.25;
    double damping = 0.5;
    int max_iter = 500;
    double tol_fixed_point = 1e-9;
    int intervals = 4096;
    double r_max = 200.0;
    double grading = 0.0;  ///< <= 0 selects auto_grading
    U0Mode u0_mode = U0Mode::AnalyticBubble;
    InitMode init = InitMode::Zero;
    std::uint64_t seed = 1;
    double init_amplitude = 0.1;
    double tol_mean = 1e-8;
    CertificateTolerances tolerances;

    /// Throws InvalidArgument on out-of-range fields.
    void validate() const;
};

GridPtr build_solve_grid(const SolveConfig& config);

struct U0Profile {
    RadialField u0;
    RadialField rhs0;          ///< (-Delta)^n u0, total -gamma_n
    LaplacianChain laplacians;  ///< Delta^j u0, j = 0..n-1
};

U0Profile u0_profile(U0Mode mode, const GridPtr& grid);

struct IterationState {
    RadialField w;
    double c_w = 0.0;
    int iter = 0;
    double theta = 0.5;
    std::vector<double> residual_history;
};

/// ln(alpha gamma_n) - ln int -K e^{2n alpha u0 + 2n w} dx.
/// Throws AdmissibilityError when the integral diverges and DegenerateCurvature when it vanishes.
double normalization_constant(const SampledCurvature& k, const RadialField& w, const U0Profile& u0, double alpha);

/// F = (-1)^n [K e^{2n alpha u0 + 2n w + c_w} - alpha rhs0] with its tail.
RadialField fixed_point_rhs(const SampledCurvature& k, const RadialField& w, const U0Profile& u0, double alpha,
                            double c_w);

/// One damped update; the damping is halved when the residual grows.
IterationState picard_step(const IterationState& state, const SampledCurvature& k, const U0Profile& u0,
                           const SolveConfig& config);

struct SolutionReport {
    SolveConfig config;
    std::string curvature_family;
    double alpha1 = 0.0;
    RadialField u;
    RadialField w;
    LaplacianChain laplacians;  ///< Delta^j u, j = 0..n-1
    double lambda_u = 0.0;
    double c_w = 0.0;
    double ell = 0.0;          ///< fitted limit of u - alpha ln r
    double ell_from_cw = 0.0;  ///< c_w / (2n)
    bool converged = false;
    int iterations = 0;
    double final_damping = 0.0;
    std::vector<double> residual_history;
    std::vector<Certificate> certificates;

    [[nodiscard]] bool all_pass() const;
};

/// Checks 0 < alpha < alpha1(K); throws AdmissibilityError naming the failed condition.
void check_admissible(const CurvatureSpec& k, DimensionParam n, double alpha);

SolutionReport solve(const CurvatureSpec& k, const SolveConfig& config);

}  // namespace qcurv
