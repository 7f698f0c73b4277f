#pragma once

// Subcommand drivers behind the qcurv executable. Each returns a process exit
// code; failures carry a machine-readable reason in the report and on stderr.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcurv/diagnostics.hpp"
#include "qcurv/run_config.hpp"

namespace qcurv {

enum ExitCode : int {
    kExitOk = 0,
    kExitError = 1,
    kExitCertificateFail = 2,
    kExitNotConverged = 3,
    kExitInadmissible = 4,
    kExitUsage = 64,
};

/// Short machine-readable name of an exit code.
std::string exit_reason(int code);

/// {"exit_code", "reason", "message"}
nlohmann::json failure_record(int code, const std::string& message);

struct BubbleCheck {
    int n = 2;
    double lambda = 1.0;
    double lambda_u = 0.0;
    std::vector<Certificate> certificates;

    [[nodiscard]] bool all_pass() const;
};

/// Certificates of u = ln(2 lambda/(1 + lambda^2 r^2)) with K = (2n-1)!.
BubbleCheck verify_bubble(int n, double lambda, int intervals, double r_max);

struct LinearCaseResult {
    std::string id;
    std::vector<Certificate> certificates;
    nlohmann::json details;

    [[nodiscard]] bool all_pass() const;
};

std::vector<std::string> linear_case_ids();
/// Throws InvalidArgument for an unknown id.
LinearCaseResult run_linear_case(const std::string& id);

struct SweepRow {
    double alpha = 0.0;
    std::string status;  ///< "converged", "not-converged", "rejected", "error"
    std::string message;
    double lambda_u = 0.0;
    double lambda_over_gamma = 0.0;
    double ell = 0.0;
    double c_w = 0.0;
    int iterations = 0;
    bool all_pass = false;
    std::vector<Certificate> certificates;
};

/// Independent solves, one per alpha, run concurrently.
std::vector<SweepRow> run_sweep(const CurvatureSpec& k, const SolveConfig& base, const std::vector<double>& alphas);

int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_verify_bubble(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_linear_test(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace qcurv
