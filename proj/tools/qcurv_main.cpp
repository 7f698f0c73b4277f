// qcurv: radial normal conformal metrics with prescribed Q-curvature.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "qcurv/commands.hpp"
#include "qcurv/errors.hpp"
#include "qcurv/run_config.hpp"

namespace {

struct Flags {
    std::string config;
    std::optional<std::string> out;
    std::optional<int> n;
    std::optional<double> alpha;
    std::optional<double> rmax;
    std::optional<int> nodes;
    std::optional<double> theta;
    std::optional<double> tol;
    std::optional<double> lambda;
    std::optional<std::string> alphas;
    std::optional<std::string> curvature;
    std::optional<std::string> case_id;
};

void add_common(CLI::App* app, Flags& f)
{
    app->add_option("--config", f.config, "flat key = value config file");
    app->add_option("--out", f.out, "output directory");
    app->add_option("--n", f.n, "equation order n (dimension 2n)");
    app->add_option("--alpha", f.alpha, "target log-slope alpha");
    app->add_option("--rmax", f.rmax, "outer grid radius");
    app->add_option("--nodes", f.nodes, "number of grid intervals");
    app->add_option("--theta", f.theta, "Picard damping in (0, 1]");
    app->add_option("--tol", f.tol, "fixed-point tolerance (sup-norm of the update)");
}

qcurv::RunConfig resolve(const Flags& f)
{
    qcurv::RunConfig cfg = f.config.empty() ? qcurv::RunConfig{} : qcurv::load_run_config(f.config);
    auto set = [&](const char* key, const std::string& v) { qcurv::apply_setting(cfg, key, v, "."); };
    if (f.out) set("out", *f.out);
    if (f.n) set("n", std::to_string(*f.n));
    if (f.alpha) cfg.solve.alpha = *f.alpha;
    if (f.rmax) cfg.solve.r_max = *f.rmax;
    if (f.nodes) set("nodes", std::to_string(*f.nodes));
    if (f.theta) cfg.solve.damping = *f.theta;
    if (f.tol) cfg.solve.tol_fixed_point = *f.tol;
    if (f.lambda) cfg.lambda_scale = *f.lambda;
    if (f.alphas) set("alphas", *f.alphas);
    if (f.curvature) set("curvature", *f.curvature);
    if (f.case_id) cfg.case_id = *f.case_id;
    return cfg;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Solver and certifier for radial conformal metrics with prescribed Q-curvature"};
    app.require_subcommand(1);
    Flags flags;

    auto* solve = app.add_subcommand("solve", "solve for a normal metric with log-slope alpha");
    add_common(solve, flags);
    solve->add_option("--curvature", flags.curvature, "curvature JSON file or inline JSON");

    auto* bubble = app.add_subcommand("verify-bubble", "certify the spherical solution");
    add_common(bubble, flags);
    bubble->add_option("--lambda", flags.lambda, "bubble scale lambda");

    auto* sweep = app.add_subcommand("sweep", "independent solves over a list of alpha values");
    add_common(sweep, flags);
    sweep->add_option("--curvature", flags.curvature, "curvature JSON file or inline JSON");
    sweep->add_option("--alphas", flags.alphas, "comma-separated alpha values");

    auto* linear = app.add_subcommand("linear-test", "run a registered linear oracle case");
    add_common(linear, flags);
    linear->add_option("case", flags.case_id, "case id: manufactured-biharmonic, hbeta-3, oracle-equivalence");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << qcurv::failure_record(qcurv::kExitUsage, e.what()).dump() << '\n';
        return qcurv::kExitUsage;
    }

    qcurv::RunConfig cfg;
    try {
        cfg = resolve(flags);
    } catch (const std::exception& e) {
        std::cerr << qcurv::failure_record(qcurv::kExitUsage, e.what()).dump() << '\n';
        return qcurv::kExitUsage;
    }

    try {
        if (solve->parsed()) {
            return qcurv::cmd_solve(cfg, std::cout, std::cerr);
        }
        if (bubble->parsed()) {
            return qcurv::cmd_verify_bubble(cfg, std::cout, std::cerr);
        }
        if (sweep->parsed()) {
            return qcurv::cmd_sweep(cfg, std::cout, std::cerr);
        }
        return qcurv::cmd_linear_test(cfg, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << qcurv::failure_record(qcurv::kExitError, e.what()).dump() << '\n';
        return qcurv::kExitError;
    }
}
