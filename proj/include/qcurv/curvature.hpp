#pragma once

// Parametric radial prescribed Q-curvature K(r) <= 0.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "qcurv/constants.hpp"

namespace qcurv {

enum class CurvatureFamily { Constant, NegPowerShifted, NegPower, CompactBump, Tabulated };

struct ConstantCurvature {
    double value;  ///< c < 0
};

/// K(r) = -(1 + r^2)^{-m}
struct NegPowerShiftedCurvature {
    double m;
};

/// K(r) = -r^p, p >= 0
struct NegPowerCurvature {
    double p;
};

/// K = -depth on [0, r0], smooth C-infinity cutoff to 0 on [r0, r0 + eta].
struct CompactBumpCurvature {
    double r0;
    double eta;
    double depth;
};

/// Monotone cubic (PCHIP) interpolation of samples, power-law tail r^{-decay} past the last one.
struct TabulatedCurvature {
    std::vector<double> radii;
    std::vector<double> values;
    std::optional<double> decay_exponent;
};

class CurvatureSpec {
public:
    using Family = std::variant<ConstantCurvature, NegPowerShiftedCurvature, NegPowerCurvature,
                                CompactBumpCurvature, TabulatedCurvature>;

    /// Validates nonpositivity and nontriviality; throws InvalidArgument otherwise.
    explicit CurvatureSpec(Family family);

    static CurvatureSpec constant(double c) { return CurvatureSpec(ConstantCurvature{c}); }
    static CurvatureSpec neg_power_shifted(double m) { return CurvatureSpec(NegPowerShiftedCurvature{m}); }
    static CurvatureSpec neg_power(double p) { return CurvatureSpec(NegPowerCurvature{p}); }
    static CurvatureSpec compact_bump(double r0, double eta, double depth)
    {
        return CurvatureSpec(CompactBumpCurvature{r0, eta, depth});
    }
    static CurvatureSpec tabulated(std::vector<double> radii, std::vector<double> values,
                                   std::optional<double> decay_exponent);

    [[nodiscard]] CurvatureFamily family() const noexcept;
    [[nodiscard]] const Family& parameters() const noexcept { return family_; }
    [[nodiscard]] std::string family_name() const;

    [[nodiscard]] double evaluate(double r) const;

    /// r K'(r), i.e. x . grad K for radial K.
    [[nodiscard]] double euler_derivative(double r) const;
    /// False for Tabulated, whose Euler derivative comes from centered differences.
    [[nodiscard]] bool euler_derivative_is_exact() const noexcept;

    /// lambda with |K| <= C (r^lambda + 1).
    [[nodiscard]] double growth_exponent() const;
    /// mu with |K| ~ r^{-mu} at infinity; +inf for compact support. Throws for Tabulated without one.
    [[nodiscard]] double decay_exponent() const;
    [[nodiscard]] bool has_decay_exponent() const noexcept;

    [[nodiscard]] nlohmann::json to_json() const;
    static CurvatureSpec from_json(const nlohmann::json& j);

private:
    Family family_;
    std::vector<double> slopes_;  // PCHIP node derivatives, Tabulated only
};

double evaluate(const CurvatureSpec& k, double r);
double radial_euler_derivative(const CurvatureSpec& k, double r);

/// sup{beta : K (1+|x|)^{2n beta} in L^1(R^{2n})}; +inf for compact support.
double alpha1(const CurvatureSpec& k, DimensionParam n);

}  // namespace qcurv
