#include "qcurv/curvature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qcurv/errors.hpp"

namespace qcurv {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// exp(-1/x) for x > 0, smooth flat extension by 0.
double flat(double x)
{
    return x > 0.0 ? std::exp(-1.0 / x) : 0.0;
}

double flat_derivative(double x)
{
    return x > 0.0 ? std::exp(-1.0 / x) / (x * x) : 0.0;
}

// Smooth step from 1 at t = 0 to 0 at t = 1.
double cutoff(double t)
{
    if (t <= 0.0) {
        return 1.0;
    }
    if (t >= 1.0) {
        return 0.0;
    }
    const double a = flat(1.0 - t);
    return a / (a + flat(t));
}

double cutoff_derivative(double t)
{
    if (t <= 0.0 || t >= 1.0) {
        return 0.0;
    }
    const double a = flat(1.0 - t);
    const double b = flat(t);
    const double den = a + b;
    return -(flat_derivative(1.0 - t) * b + a * flat_derivative(t)) / (den * den);
}

std::vector<double> pchip_slopes(const std::vector<double>& x, const std::vector<double>& y)
{
    const std::size_t n = x.size();
    std::vector<double> h(n - 1);
    std::vector<double> d(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h[i] = x[i + 1] - x[i];
        d[i] = (y[i + 1] - y[i]) / h[i];
    }
    std::vector<double> m(n, 0.0);
    if (n == 2) {
        m[0] = m[1] = d[0];
        return m;
    }
    for (std::size_t k = 1; k + 1 < n; ++k) {
        if (d[k - 1] * d[k] <= 0.0) {
            m[k] = 0.0;
            continue;
        }
        const double w1 = 2.0 * h[k] + h[k - 1];
        const double w2 = h[k] + 2.0 * h[k - 1];
        m[k] = (w1 + w2) / (w1 / d[k - 1] + w2 / d[k]);
    }
    auto end_slope = [](double h0, double h1, double d0, double d1) {
        double s = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
        if (s * d0 <= 0.0) {
            s = 0.0;
        } else if (d0 * d1 < 0.0 && std::abs(s) > 3.0 * std::abs(d0)) {
            s = 3.0 * d0;
        }
        return s;
    };
    m[0] = end_slope(h[0], h[1], d[0], d[1]);
    m[n - 1] = end_slope(h[n - 2], h[n - 3], d[n - 2], d[n - 3]);
    return m;
}

double tabulated_value(const TabulatedCurvature& t, const std::vector<double>& slopes, double r)
{
    const auto& x = t.radii;
    const auto& y = t.values;
    if (r >= x.back()) {
        if (r == x.back()) {
            return y.back();
        }
        if (!t.decay_exponent) {
            throw InvalidArgument("tabulated curvature queried beyond its last sample (r=" +
                                  std::to_string(r) + ") without a declared decay exponent");
        }
        const double mu = *t.decay_exponent;
        if (std::isinf(mu)) {
            return 0.0;
        }
        return y.back() * std::pow(r / x.back(), -mu);
    }
    const auto it = std::upper_bound(x.begin(), x.end(), r);
    const std::size_t i = static_cast<std::size_t>(it - x.begin()) - 1;
    const double h = x[i + 1] - x[i];
    const double s = (r - x[i]) / h;
    const double s2 = s * s;
    const double s3 = s2 * s;
    return (2.0 * s3 - 3.0 * s2 + 1.0) * y[i] + (s3 - 2.0 * s2 + s) * h * slopes[i] +
           (-2.0 * s3 + 3.0 * s2) * y[i + 1] + (s3 - s2) * h * slopes[i + 1];
}

void validate(const CurvatureSpec::Family& family)
{
    std::visit(
        Overloaded{
            [](const ConstantCurvature& c) {
                if (!(c.value < 0.0) || !std::isfinite(c.value)) {
                    throw InvalidArgument("constant curvature must be finite and < 0");
                }
            },
            [](const NegPowerShiftedCurvature& c) {
                if (!(c.m > 0.0) || !std::isfinite(c.m)) {
                    throw InvalidArgument("neg_power_shifted requires m > 0");
                }
            },
            [](const NegPowerCurvature& c) {
                if (!(c.p >= 0.0) || !std::isfinite(c.p)) {
                    throw InvalidArgument("neg_power requires p >= 0 (K continuous at the origin)");
                }
            },
            [](const CompactBumpCurvature& c) {
                if (!(c.r0 >= 0.0) || !(c.eta > 0.0) || !(c.depth > 0.0) ||
                    !std::isfinite(c.r0 + c.eta + c.depth)) {
                    throw InvalidArgument("compact_bump requires r0 >= 0, eta > 0, depth > 0");
                }
            },
            [](const TabulatedCurvature& c) {
                if (c.radii.size() < 2 || c.radii.size() != c.values.size()) {
                    throw InvalidArgument("tabulated curvature needs >= 2 matching (r, K) samples");
                }
                if (c.radii.front() != 0.0) {
                    throw InvalidArgument("tabulated curvature samples must start at r = 0");
                }
                for (std::size_t i = 1; i < c.radii.size(); ++i) {
                    if (!(c.radii[i] > c.radii[i - 1])) {
                        throw InvalidArgument("tabulated radii must be strictly increasing");
                    }
                }
                bool nonzero = false;
                for (double v : c.values) {
                    if (!std::isfinite(v) || v > 0.0) {
                        throw InvalidArgument("tabulated curvature samples must be finite and <= 0");
                    }
                    nonzero = nonzero || v < 0.0;
                }
                if (!nonzero) {
                    throw InvalidArgument("curvature must not vanish identically");
                }
                if (c.decay_exponent) {
                    const double mu = *c.decay_exponent;
                    if (std::isnan(mu)) {
                        throw InvalidArgument("decay exponent must be a number");
                    }
                    if (std::isinf(mu) && c.values.back() != 0.0) {
                        throw InvalidArgument("infinite decay exponent requires K = 0 at the last sample");
                    }
                }
            },
        },
        family);
}

}  // namespace

CurvatureSpec::CurvatureSpec(Family family) : family_(std::move(family))
{
    validate(family_);
    if (const auto* t = std::get_if<TabulatedCurvature>(&family_)) {
        slopes_ = pchip_slopes(t->radii, t->values);
    }
}

CurvatureSpec CurvatureSpec::tabulated(std::vector<double> radii, std::vector<double> values,
                                       std::optional<double> decay_exponent)
{
    return CurvatureSpec(TabulatedCurvature{std::move(radii), std::move(values), decay_exponent});
}

CurvatureFamily CurvatureSpec::family() const noexcept
{
    return static_cast<CurvatureFamily>(family_.index());
}

std::string CurvatureSpec::family_name() const
{
    switch (family()) {
    case CurvatureFamily::Constant:
        return "constant";
    case CurvatureFamily::NegPowerShifted:
        return "neg_power_shifted";
    case CurvatureFamily::NegPower:
        return "neg_power";
    case CurvatureFamily::CompactBump:
        return "compact_bump";
    case CurvatureFamily::Tabulated:
        return "tabulated";
    }
    return "unknown";
}

double CurvatureSpec::evaluate(double r) const
{
    if (!(r >= 0.0)) {
        throw InvalidArgument("curvature evaluated at negative radius");
    }
    return std::visit(
        Overloaded{
            [](const ConstantCurvature& c) { return c.value; },
            [r](const NegPowerShiftedCurvature& c) { return -std::pow(1.0 + r * r, -c.m); },
            [r](const NegPowerCurvature& c) { return c.p == 0.0 ? -1.0 : -std::pow(r, c.p); },
            [r](const CompactBumpCurvature& c) { return -c.depth * cutoff((r - c.r0) / c.eta); },
            [this, r](const TabulatedCurvature& c) { return tabulated_value(c, slopes_, r); },
        },
        family_);
}

double CurvatureSpec::euler_derivative(double r) const
{
    if (!(r >= 0.0)) {
        throw InvalidArgument("curvature evaluated at negative radius");
    }
    if (r == 0.0) {
        return 0.0;
    }
    return std::visit(
        Overloaded{
            [](const ConstantCurvature&) { return 0.0; },
            [r](const NegPowerShiftedCurvature& c) {
                return 2.0 * c.m * r * r * std::pow(1.0 + r * r, -c.m - 1.0);
            },
            [r](const NegPowerCurvature& c) { return c.p == 0.0 ? 0.0 : -c.p * std::pow(r, c.p); },
            [r](const CompactBumpCurvature& c) {
                return -c.depth * r * cutoff_derivative((r - c.r0) / c.eta) / c.eta;
            },
            [this, r](const TabulatedCurvature&) {
                const double h = 1e-5 * std::max(r, 1e-3);
                const double lo = std::max(r - h, 0.0);
                return r * (evaluate(r + h) - evaluate(lo)) / (r + h - lo);
            },
        },
        family_);
}

bool CurvatureSpec::euler_derivative_is_exact() const noexcept
{
    return family() != CurvatureFamily::Tabulated;
}

double CurvatureSpec::growth_exponent() const
{
    return std::visit(
        Overloaded{
            [](const NegPowerCurvature& c) { return c.p; },
            [this](const TabulatedCurvature& c) {
                return c.decay_exponent ? std::max(0.0, -*c.decay_exponent) : 0.0;
            },
            [](const auto&) { return 0.0; },
        },
        family_);
}

bool CurvatureSpec::has_decay_exponent() const noexcept
{
    if (const auto* t = std::get_if<TabulatedCurvature>(&family_)) {
        return t->decay_exponent.has_value();
    }
    return true;
}

double CurvatureSpec::decay_exponent() const
{
    return std::visit(
        Overloaded{
            [](const ConstantCurvature&) { return 0.0; },
            [](const NegPowerShiftedCurvature& c) { return 2.0 * c.m; },
            [](const NegPowerCurvature& c) { return -c.p; },
            [](const CompactBumpCurvature&) { return kInf; },
            [](const TabulatedCurvature& c) {
                if (!c.decay_exponent) {
                    throw InvalidArgument("tabulated curvature has no declared decay exponent");
                }
                return *c.decay_exponent;
            },
        },
        family_);
}

nlohmann::json CurvatureSpec::to_json() const
{
    nlohmann::json j;
    j["family"] = family_name();
    j["params"] = std::visit(
        Overloaded{
            [](const ConstantCurvature& c) { return nlohmann::json{{"c", c.value}}; },
            [](const NegPowerShiftedCurvature& c) { return nlohmann::json{{"m", c.m}}; },
            [](const NegPowerCurvature& c) { return nlohmann::json{{"p", c.p}}; },
            [](const CompactBumpCurvature& c) {
                return nlohmann::json{{"r0", c.r0}, {"eta", c.eta}, {"depth", c.depth}};
            },
            [](const TabulatedCurvature& c) {
                return nlohmann::json{{"r", c.radii}, {"k", c.values}};
            },
        },
        family_);
    if (has_decay_exponent()) {
        const double mu = decay_exponent();
        if (std::isinf(mu)) {
            j["decay_exponent"] = "inf";
        } else {
            j["decay_exponent"] = mu;
        }
    } else {
        j["decay_exponent"] = nullptr;
    }
    return j;
}

CurvatureSpec CurvatureSpec::from_json(const nlohmann::json& j)
{
    try {
        const std::string family = j.at("family").get<std::string>();
        const nlohmann::json params = j.contains("params") ? j.at("params") : nlohmann::json::object();

        std::optional<double> decay;
        if (j.contains("decay_exponent") && !j.at("decay_exponent").is_null()) {
            const auto& d = j.at("decay_exponent");
            if (d.is_string()) {
                const auto s = d.get<std::string>();
                if (s != "inf" && s != "+inf" && s != "infinity") {
                    throw InvalidArgument("decay_exponent string must be \"inf\"");
                }
                decay = kInf;
            } else {
                decay = d.get<double>();
            }
        }

        auto spec = [&]() -> CurvatureSpec {
            if (family == "constant") {
                return constant(params.at("c").get<double>());
            }
            if (family == "neg_power_shifted") {
                return neg_power_shifted(params.at("m").get<double>());
            }
            if (family == "neg_power") {
                return neg_power(params.at("p").get<double>());
            }
            if (family == "compact_bump") {
                return compact_bump(params.at("r0").get<double>(), params.at("eta").get<double>(),
                                    params.at("depth").get<double>());
            }
            if (family == "tabulated") {
                return tabulated(params.at("r").get<std::vector<double>>(),
                                 params.at("k").get<std::vector<double>>(), decay);
            }
            throw InvalidArgument("unknown curvature family '" + family + "'");
        }();

        if (decay && spec.family() != CurvatureFamily::Tabulated) {
            const double expected = spec.decay_exponent();
            const bool same = (std::isinf(expected) && std::isinf(*decay)) ||
                              std::abs(expected - *decay) <= 1e-12 * std::max(1.0, std::abs(expected));
            if (!same) {
                throw InvalidArgument("declared decay_exponent disagrees with the " + family +
                                      " family");
            }
        }
        return spec;
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("malformed curvature JSON: ") + e.what());
    }
}

double evaluate(const CurvatureSpec& k, double r)
{
    return k.evaluate(r);
}

double radial_euler_derivative(const CurvatureSpec& k, double r)
{
    return k.euler_derivative(r);
}

double alpha1(const CurvatureSpec& k, DimensionParam n)
{
    const double mu = k.decay_exponent();
    if (std::isinf(mu)) {
        return kInf;
    }
    return mu / static_cast<double>(2 * n.value()) - 1.0;
}

}  // namespace qcurv
