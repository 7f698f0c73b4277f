#include "qcurv/run_config.hpp"

#include <fstream>
#include <sstream>

#include "qcurv/errors.hpp"

namespace qcurv {

namespace {

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return "";
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v)
{
    try {
        std::size_t used = 0;
        const double x = std::stod(v, &used);
        if (used != v.size()) {
            throw std::invalid_argument(v);
        }
        return x;
    } catch (const std::exception&) {
        throw InvalidArgument("value of '" + key + "' is not a number: '" + v + "'");
    }
}

long long to_integer(const std::string& key, const std::string& v)
{
    try {
        std::size_t used = 0;
        const long long x = std::stoll(v, &used);
        if (used != v.size()) {
            throw std::invalid_argument(v);
        }
        return x;
    } catch (const std::exception&) {
        throw InvalidArgument("value of '" + key + "' is not an integer: '" + v + "'");
    }
}

CurvatureSpec load_curvature(const std::string& v, const std::filesystem::path& base_dir)
{
    if (!v.empty() && v.front() == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(v);
        } catch (const nlohmann::json::exception& e) {
            throw InvalidArgument(std::string("curvature JSON: ") + e.what());
        }
        return CurvatureSpec::from_json(j);
    }
    std::filesystem::path p(v);
    if (p.is_relative()) {
        p = base_dir / p;
    }
    std::ifstream in(p);
    if (!in) {
        throw InvalidArgument("cannot read curvature file " + p.string());
    }
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument("curvature file " + p.string() + ": " + e.what());
    }
    return CurvatureSpec::from_json(j);
}

}  // namespace

std::vector<double> parse_number_list(const std::string& s)
{
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) {
            out.push_back(to_double("alphas", item));
        }
    }
    return out;
}

std::map<std::string, std::string> parse_key_values(const std::string& text)
{
    std::map<std::string, std::string> kv;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#') {
            continue;
        }
        const auto eq = t.find('=');
        if (eq == std::string::npos) {
            throw InvalidArgument("config line " + std::to_string(lineno) + " has no '='");
        }
        const std::string key = trim(t.substr(0, eq));
        if (key.empty()) {
            throw InvalidArgument("config line " + std::to_string(lineno) + " has an empty key");
        }
        kv[key] = trim(t.substr(eq + 1));
    }
    return kv;
}

void apply_setting(RunConfig& cfg, const std::string& key, const std::string& v,
                   const std::filesystem::path& base_dir)
{
    SolveConfig& s = cfg.solve;
    if (key == "n") {
        s.n = static_cast<int>(to_integer(key, v));
    } else if (key == "alpha") {
        s.alpha = to_double(key, v);
    } else if (key == "theta" || key == "damping") {
        s.damping = to_double(key, v);
    } else if (key == "max_iter") {
        s.max_iter = static_cast<int>(to_integer(key, v));
    } else if (key == "tol") {
        s.tol_fixed_point = to_double(key, v);
    } else if (key == "nodes") {
        s.intervals = static_cast<int>(to_integer(key, v));
    } else if (key == "rmax") {
        s.r_max = to_double(key, v);
    } else if (key == "grading") {
        s.grading = to_double(key, v);
    } else if (key == "u0_mode") {
        s.u0_mode = u0_mode_from_string(v);
    } else if (key == "init") {
        if (v == "zero") {
            s.init = InitMode::Zero;
        } else if (v == "random-bump") {
            s.init = InitMode::RandomBump;
        } else {
            throw InvalidArgument("init must be zero or random-bump");
        }
    } else if (key == "seed") {
        s.seed = static_cast<std::uint64_t>(to_integer(key, v));
    } else if (key == "init_amplitude") {
        s.init_amplitude = to_double(key, v);
    } else if (key == "tol_mean") {
        s.tol_mean = to_double(key, v);
    } else if (key == "tol_slope") {
        s.tolerances.slope = to_double(key, v);
    } else if (key == "tol_expansion") {
        s.tolerances.expansion = to_double(key, v);
    } else if (key == "tol_dk") {
        s.tolerances.dk = to_double(key, v);
    } else if (key == "tol_pohozaev") {
        s.tolerances.pohozaev = to_double(key, v);
    } else if (key == "tol_lambda") {
        s.tolerances.lambda = to_double(key, v);
    } else if (key == "tol_forward") {
        s.tolerances.forward_residual = to_double(key, v);
    } else if (key == "curvature") {
        cfg.curvature = load_curvature(v, base_dir);
    } else if (key == "out") {
        cfg.out_dir = v;
    } else if (key == "alphas") {
        cfg.alphas = parse_number_list(v);
    } else if (key == "lambda") {
        cfg.lambda_scale = to_double(key, v);
    } else if (key == "case") {
        cfg.case_id = v;
    } else {
        throw InvalidArgument("unknown config key '" + key + "'");
    }
}

RunConfig parse_run_config(const std::string& text, const std::filesystem::path& base_dir)
{
    RunConfig cfg;
    for (const auto& [k, v] : parse_key_values(text)) {
        apply_setting(cfg, k, v, base_dir);
    }
    return cfg;
}

RunConfig load_run_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw InvalidArgument("cannot read config file " + path.string());
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_run_config(ss.str(), path.parent_path().empty() ? "." : path.parent_path());
}

}  // namespace qcurv
