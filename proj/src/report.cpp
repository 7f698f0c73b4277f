#include "qcurv/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "qcurv/errors.hpp"

namespace qcurv {

nlohmann::json json_number(double x)
{
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0.0 ? "inf" : "-inf";
    }
    return x;
}

nlohmann::json to_json(const SolveConfig& c)
{
    nlohmann::json j;
    j["n"] = c.n;
    j["alpha"] = json_number(c.alpha);
    j["damping"] = c.damping;
    j["max_iter"] = c.max_iter;
    j["tol_fixed_point"] = c.tol_fixed_point;
    j["nodes"] = c.intervals;
    j["rmax"] = c.r_max;
    j["grading"] = c.grading;
    j["u0_mode"] = to_string(c.u0_mode);
    j["init"] = c.init == InitMode::Zero ? "zero" : "random-bump";
    j["seed"] = c.seed;
    j["tol_mean"] = c.tol_mean;
    j["tolerances"] = {{"slope", c.tolerances.slope},
                       {"expansion", c.tolerances.expansion},
                       {"dk", c.tolerances.dk},
                       {"pohozaev", c.tolerances.pohozaev},
                       {"lambda", c.tolerances.lambda},
                       {"forward_residual", c.tolerances.forward_residual}};
    return j;
}

nlohmann::json certificates_json(const std::vector<Certificate>& certs)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : certs) {
        arr.push_back(to_json(c));
    }
    return arr;
}

nlohmann::json to_json(const SolutionReport& r)
{
    const double g = gamma_n(DimensionParam(r.config.n));
    nlohmann::json j;
    j["config"] = to_json(r.config);
    j["curvature_family"] = r.curvature_family;
    j["alpha"] = r.config.alpha;
    j["alpha1"] = json_number(r.alpha1);
    j["lambda_u"] = json_number(r.lambda_u);
    j["lambda_over_gamma"] = json_number(r.lambda_u / g);
    j["gamma_n"] = g;
    j["c_w"] = json_number(r.c_w);
    j["ell"] = json_number(r.ell);
    j["ell_from_cw"] = json_number(r.ell_from_cw);
    j["converged"] = r.converged;
    j["iterations"] = r.iterations;
    j["final_damping"] = r.final_damping;
    nlohmann::json hist = nlohmann::json::array();
    for (double x : r.residual_history) {
        hist.push_back(json_number(x));
    }
    j["residual_history"] = hist;
    j["certificates"] = certificates_json(r.certificates);
    j["all_pass"] = r.all_pass();
    return j;
}

std::string format_double(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.16e", x);
    return buf;
}

void write_columns_csv(const std::filesystem::path& path, const std::vector<std::string>& names,
                       const std::vector<std::vector<double>>& columns)
{
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot open " + path.string() + " for writing");
    }
    for (std::size_t c = 0; c < names.size(); ++c) {
        out << (c ? "," : "") << names[c];
    }
    out << '\n';
    const std::size_t rows = columns.empty() ? 0 : columns.front().size();
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t c = 0; c < columns.size(); ++c) {
            out << (c ? "," : "") << format_double(columns[c][i]);
        }
        out << '\n';
    }
}

void write_solution_csv(const std::filesystem::path& path, const SolutionReport& r)
{
    std::vector<std::string> names{"r", "u", "w"};
    const auto nodes = r.u.grid().nodes();
    std::vector<std::vector<double>> cols{std::vector<double>(nodes.begin(), nodes.end()),
                                          std::vector<double>(r.u.values().begin(), r.u.values().end()),
                                          std::vector<double>(r.w.values().begin(), r.w.values().end())};
    for (std::size_t j = 1; j < r.laplacians.size(); ++j) {
        names.push_back("lap" + std::to_string(j) + "_u");
        const auto v = r.laplacians[j].values();
        cols.emplace_back(v.begin(), v.end());
    }
    write_columns_csv(path, names, cols);
}

void write_json(const std::filesystem::path& path, const nlohmann::json& j)
{
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot open " + path.string() + " for writing");
    }
    out << j.dump(2) << '\n';
}

}  // namespace qcurv
