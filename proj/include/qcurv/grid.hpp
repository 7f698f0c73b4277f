#pragma once

// Graded radial grid on [0, r_max] with 4th-order product quadrature for
// measures s^p ds, and power-law tail models for the integral past r_max.

#include <array>
#include <functional>
#include <memory>
#include <span>
#include <vector>

#include "qcurv/constants.hpp"

namespace qcurv {

/// c * r^{-exponent}
struct PowerTerm {
    double coeff = 0.0;
    double exponent = 0.0;
};

/// Sum of power laws describing a field for r >= r_max.
class PowerTail {
public:
    PowerTail() = default;
    explicit PowerTail(std::vector<PowerTerm> terms);

    [[nodiscard]] const std::vector<PowerTerm>& terms() const noexcept { return terms_; }
    [[nodiscard]] bool empty() const noexcept { return terms_.empty(); }

    [[nodiscard]] double value(double r) const;
    /// int_R^inf s^p tail(s) ds. Throws DivergentTail when a nonzero term has exponent <= p + 1.
    [[nodiscard]] double moment_beyond(double r, double p) const;
    /// int_R^inf ln(s) s^p tail(s) ds.
    [[nodiscard]] double log_moment_beyond(double r, double p) const;
    /// Smallest exponent carrying a nonzero coefficient; +inf for an empty tail.
    [[nodiscard]] double leading_exponent() const;

    [[nodiscard]] PowerTail scaled(double a) const;
    friend PowerTail operator+(const PowerTail& a, const PowerTail& b);

private:
    std::vector<PowerTerm> terms_;
};

/// How to extrapolate sampled data beyond r_max.
struct TailModel {
    enum class Kind { None, PowerLaw };
    Kind kind = Kind::None;
    double exponent = 0.0;  ///< sigma in f ~ c r^{-sigma}

    static TailModel none() { return {}; }
    static TailModel power_law(double sigma) { return {Kind::PowerLaw, sigma}; }
};

class RadialGrid;

/// Per-interval product quadrature weights for int g(s) s^p ds, using the cubic
/// interpolant of g through four neighbouring nodes and exact integration of s^p.
class IntervalRule {
public:
    /// Stencil placement relative to interval k = [r_k, r_{k+1}].
    enum Variant : int { LeftLeaning = 0, Centered = 1, RightLeaning = 2 };

    IntervalRule(std::span<const double> nodes, int power);

    [[nodiscard]] int power() const noexcept { return power_; }
    [[nodiscard]] int intervals() const noexcept { return static_cast<int>(start_.size()); }
    [[nodiscard]] int start(int k, Variant v) const { return start_[static_cast<std::size_t>(k)][v]; }
    [[nodiscard]] const std::array<double, 4>& weights(int k, Variant v) const
    {
        return weights_[static_cast<std::size_t>(k)][v];
    }

    /// Node weights of the composite rule (centered stencils).
    [[nodiscard]] std::span<const double> node_weights() const noexcept { return node_weights_; }

    [[nodiscard]] double interval_integral(int k, std::span<const double> g, Variant v = Centered) const;
    /// out[i] = int_0^{r_i} g s^p ds
    [[nodiscard]] std::vector<double> cumulative_forward(std::span<const double> g) const;
    /// out[i] = int_{r_i}^{r_max} g s^p ds
    [[nodiscard]] std::vector<double> cumulative_backward(std::span<const double> g) const;
    [[nodiscard]] double integrate(std::span<const double> g) const;

private:
    int power_;
    std::vector<std::array<int, 3>> start_;
    std::vector<std::array<std::array<double, 4>, 3>> weights_;
    std::vector<double> node_weights_;
};

class RadialGrid {
public:
    RadialGrid(DimensionParam n, double r_max, int intervals, double grading);

    [[nodiscard]] DimensionParam order() const noexcept { return n_; }
    [[nodiscard]] int n() const noexcept { return n_.value(); }
    [[nodiscard]] double r_max() const noexcept { return nodes_.back(); }
    [[nodiscard]] int intervals() const noexcept { return static_cast<int>(nodes_.size()) - 1; }
    [[nodiscard]] std::size_t size() const noexcept { return nodes_.size(); }
    [[nodiscard]] double grading() const noexcept { return grading_; }
    [[nodiscard]] std::span<const double> nodes() const noexcept { return nodes_; }
    [[nodiscard]] double node(std::size_t i) const { return nodes_[i]; }

    /// Weights for the measure r^{2n-1} dr on [0, r_max].
    [[nodiscard]] std::span<const double> weights() const noexcept { return volume_rule_.node_weights(); }
    /// Product rule for s ds.
    [[nodiscard]] const IntervalRule& linear_rule() const noexcept { return linear_rule_; }
    /// Product rule for s^{2n-1} ds.
    [[nodiscard]] const IntervalRule& volume_rule() const noexcept { return volume_rule_; }

    /// Index of the first node of the trailing window holding `fraction` of the nodes (at least 3).
    [[nodiscard]] std::size_t tail_window_begin(double fraction = 0.05) const;

private:
    DimensionParam n_;
    double grading_;
    std::vector<double> nodes_;
    IntervalRule linear_rule_;
    IntervalRule volume_rule_;
};

using GridPtr = std::shared_ptr<const RadialGrid>;

/// Nodes r_i = r_max (g^i - 1)/(g^N - 1): geometric clustering at the origin, N+1 nodes.
GridPtr build_grid(DimensionParam n, double r_max, int intervals, double grading);

/// Grading that places `fraction` of the nodes in [0, 1]; 1 when a uniform grid already does.
double auto_grading(int intervals, double r_max, double fraction = 1.0 / 3.0);

/// Nested refinement: twice the intervals with grading sqrt(g); every old node is kept.
GridPtr refine(const RadialGrid& grid);

/// Fit c in f ~ c r^{-sigma} by log-log least squares on the last 5% of nodes.
PowerTail fit_tail(std::span<const double> values, const RadialGrid& grid, const TailModel& model);

/// int_{R^{2n}} f dx = |S^{2n-1}| (quadrature on [0, r_max] + tail past r_max).
double integrate_fullspace(std::span<const double> values, const RadialGrid& grid, const TailModel& tail);
double integrate_fullspace(std::span<const double> values, const RadialGrid& grid, const PowerTail& tail);
double integrate_fullspace(const std::function<double(double)>& f, const RadialGrid& grid,
                           const TailModel& tail);

/// int_{R^{2n}} ln|x| f dx with the same tail handling.
double integrate_fullspace_log_moment(std::span<const double> values, const RadialGrid& grid,
                                      const PowerTail& tail);

}  // namespace qcurv
