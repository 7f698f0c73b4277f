#pragma once

#include <functional>
#include <limits>
#include <vector>

#include "qcurv/grid.hpp"

namespace qcurv {

/// Far-field record: f(r) = log_coeff ln r + const_term + O(r^{-decay_exp}).
struct Asymptote {
    double log_coeff = 0.0;
    double const_term = 0.0;
    double decay_exp = std::numeric_limits<double>::quiet_NaN();
};

/// A radial function sampled on a grid, with a power-law description past r_max.
class RadialField {
public:
    /// Empty placeholder without a grid.
    RadialField() = default;
    RadialField(GridPtr grid, std::vector<double> values, PowerTail tail = {}, Asymptote asymptote = {});

    static RadialField zeros(GridPtr grid);
    /// Samples f on the nodes; the tail is fitted according to `tail`.
    static RadialField sample(GridPtr grid, const std::function<double(double)>& f,
                              const TailModel& tail = TailModel::none());

    [[nodiscard]] const GridPtr& grid_ptr() const noexcept { return grid_; }
    [[nodiscard]] const RadialGrid& grid() const noexcept { return *grid_; }
    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
    [[nodiscard]] std::vector<double>& mutable_values() noexcept { return values_; }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] double operator[](std::size_t i) const { return values_[i]; }

    [[nodiscard]] const PowerTail& tail() const noexcept { return tail_; }
    [[nodiscard]] const Asymptote& asymptote() const noexcept { return asymptote_; }
    void set_tail(PowerTail tail) { tail_ = std::move(tail); }
    void set_asymptote(const Asymptote& a) { asymptote_ = a; }

    [[nodiscard]] double sup_norm() const;

private:
    GridPtr grid_;
    std::vector<double> values_;
    PowerTail tail_;
    Asymptote asymptote_;
};

/// a x + b y on a shared grid; tails combine linearly, the asymptote is reset to a decaying one.
RadialField linear_combination(double a, const RadialField& x, double b, const RadialField& y);

}  // namespace qcurv
