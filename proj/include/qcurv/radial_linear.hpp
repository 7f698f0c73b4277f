#pragma once

// Radial inverse of the Laplacian and of Delta^n on R^{2n} for fields that
// decay at infinity, plus the forward finite-difference operator.

#include <vector>

#include "qcurv/finite_difference.hpp"
#include "qcurv/radial_field.hpp"

namespace qcurv {

/// v with Delta v = f and v -> 0:
///   v(r) = -(1/(2n-2)) [ int_r^inf s f ds + r^{2-2n} int_0^r s^{2n-1} f ds ].
/// With zero_mean the caller asserts int f dx = 0; the inner integral is then
/// evaluated as -int_r^inf in the far field and the r^{2-2n} tail term vanishes.
RadialField psi_inverse_laplacian(const RadialField& f, bool zero_mean = false);

struct PolyharmonicOptions {
    /// Allowed |int f dx| relative to the L1 norm of f.
    double tol_mean = 1e-8;
};

struct PolyharmonicSolution {
    /// chain[k] = Delta^{n-1-k} u, k = 0..n-1; chain.back() is u.
    std::vector<RadialField> chain;

    [[nodiscard]] const RadialField& u() const { return chain.back(); }
    /// Delta^j u for 0 <= j < n.
    [[nodiscard]] const RadialField& laplacian_power(int j) const;
};

/// |int f dx| <= tol_mean * int |f| dx, tails included.
bool is_mean_zero(const RadialField& f, double tol_mean);

/// Delta^n u = f with u -> 0 for mean-zero f, by n-fold Psi.
PolyharmonicSolution solve_polyharmonic_chain(const RadialField& f, const PolyharmonicOptions& opts = {});
RadialField solve_polyharmonic(const RadialField& f, const PolyharmonicOptions& opts = {});

/// Delta^n u by repeated finite-difference Laplacians.
RadialField forward_polyharmonic(const RadialField& u, const StencilOptions& opts = {});
/// Delta^k u, k >= 0.
RadialField forward_laplacian_power(const RadialField& u, int k, const StencilOptions& opts = {});

/// True when Psi(f) shares the sign f takes on [r0, inf) at every node r >= r0.
/// A field vanishing on [r0, inf) passes.
bool ground_state_sign_check(const RadialField& f, double r0);

/// 1 on [0, 1), r^{-beta} on [1, inf).
double h_beta(double beta, double r);

/// Constant C with |Psi(h_beta)| <= C h_{beta-2}, for 2 < beta < 2n.
double h_beta_bound(int n, double beta);

}  // namespace qcurv
