#pragma once

// Flat "key = value" run configuration. Blank lines and lines starting with
// '#' are ignored. The curvature key holds either inline JSON or a path to a
// JSON file, resolved relative to the config file.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qcurv/curvature.hpp"
#include "qcurv/fixed_point.hpp"

namespace qcurv {

struct RunConfig {
    SolveConfig solve;
    std::optional<CurvatureSpec> curvature;
    std::filesystem::path out_dir = ".";
    std::vector<double> alphas;
    double lambda_scale = 1.0;
    std::string case_id;
};

/// Parsed key/value pairs in file order of last assignment.
std::map<std::string, std::string> parse_key_values(const std::string& text);

/// Applies one key; throws InvalidArgument for unknown keys or bad values.
void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value,
                   const std::filesystem::path& base_dir);

RunConfig parse_run_config(const std::string& text, const std::filesystem::path& base_dir = ".");
RunConfig load_run_config(const std::filesystem::path& path);

std::vector<double> parse_number_list(const std::string& s);

}  // namespace qcurv
