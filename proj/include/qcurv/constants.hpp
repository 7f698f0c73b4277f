#pragma once

// Closed-form geometric constants for R^{2n}.

namespace qcurv {

inline constexpr double kPi = 3.14159265358979323846;

/// Largest equation order accepted at the API boundary.
inline constexpr int kMaxOrder = 8;

/// Equation order n of (-Delta)^n u = K e^{2nu}; the ambient dimension is 2n.
class DimensionParam {
public:
    explicit DimensionParam(int n);

    [[nodiscard]] int value() const noexcept { return n_; }
    [[nodiscard]] int dimension() const noexcept { return 2 * n_; }

    friend bool operator==(DimensionParam, DimensionParam) = default;

private:
    int n_;
};

/// k! as a double; exact for k <= 18.
double factorial(int k);

/// Surface area of the unit sphere S^m in R^{m+1}.
double sphere_area(int m);

/// gamma_n = 2^{2n-1} (n-1)! pi^n, the log-slope normalization.
double gamma_n(DimensionParam n);

/// Total Q-curvature of the round sphere S^{2n}, equal to 2 gamma_n.
double total_sphere_curvature(DimensionParam n);

/// Far-field limit coefficient A_k with D_k(ln r) = A_k r^{-k}, 1 <= k <= 2n-1.
double a_k(DimensionParam n, int k);

}  // namespace qcurv
