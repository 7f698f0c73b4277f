#pragma once

// Serialization of solutions and certificates. JSON objects keep sorted keys
// and doubles print in shortest round-trip form, so identical runs give
// byte-identical files.

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcurv/fixed_point.hpp"

namespace qcurv {

/// Finite values as numbers; inf and nan as the strings "inf", "-inf", "nan".
nlohmann::json json_number(double x);

nlohmann::json to_json(const SolveConfig& c);
nlohmann::json to_json(const SolutionReport& r);
nlohmann::json certificates_json(const std::vector<Certificate>& certs);

/// Header "r,u,w,lap1_u,...": one row per node, 17 significant digits.
void write_solution_csv(const std::filesystem::path& path, const SolutionReport& r);

/// CSV of named columns of equal length.
void write_columns_csv(const std::filesystem::path& path, const std::vector<std::string>& names,
                       const std::vector<std::vector<double>>& columns);

std::string format_double(double x);

void write_json(const std::filesystem::path& path, const nlohmann::json& j);

}  // namespace qcurv
