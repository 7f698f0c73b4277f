#include "qcurv/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <ostream>

#include "qcurv/analytic_profile.hpp"
#include "qcurv/errors.hpp"
#include "qcurv/log_potential.hpp"
#include "qcurv/manufactured.hpp"
#include "qcurv/report.hpp"

namespace qcurv {

std::string exit_reason(int code)
{
    switch (code) {
    case kExitOk:
        return "ok";
    case kExitCertificateFail:
        return "certificate_failed";
    case kExitNotConverged:
        return "not_converged";
    case kExitInadmissible:
        return "inadmissible";
    case kExitUsage:
        return "usage";
    default:
        return "error";
    }
}

nlohmann::json failure_record(int code, const std::string& message)
{
    return {{"exit_code", code}, {"reason", exit_reason(code)}, {"message", message}};
}

namespace {

bool every_pass(const std::vector<Certificate>& certs)
{
    return std::all_of(certs.begin(), certs.end(), [](const Certificate& c) { return c.pass; });
}

int finish(int code, const std::string& message, nlohmann::json report, const std::filesystem::path& path,
           std::ostream& err)
{
    report["status"] = failure_record(code, message);
    if (!path.empty()) {
        write_json(path, report);
    }
    if (code != kExitOk) {
        err << failure_record(code, message).dump() << '\n';
    }
    return code;
}

std::filesystem::path prepare_out(const RunConfig& cfg)
{
    std::filesystem::create_directories(cfg.out_dir);
    return cfg.out_dir;
}

RadialField series_field(const GridPtr& grid, const ShiftedLogSeries& s, const Asymptote& a)
{
    RadialField f = RadialField::sample(grid, [&](double r) { return s.value(r); });
    f.set_asymptote(a);
    return f;
}

}  // namespace

bool BubbleCheck::all_pass() const
{
    return every_pass(certificates);
}

bool LinearCaseResult::all_pass() const
{
    return every_pass(certificates);
}

BubbleCheck verify_bubble(int n, double lambda, int intervals, double r_max)
{
    const DimensionParam dn(n);
    if (n < 2) {
        throw Unsupported("bubble verification needs n >= 2");
    }
    const GridPtr grid = build_grid(dn, r_max, intervals, auto_grading(intervals, r_max));
    const ShiftedLogSeries u_series = bubble_profile(dn, lambda);
    const Asymptote ua{-2.0, std::log(2.0 / lambda), 2.0};
    LaplacianChain chain{series_field(grid, u_series, ua)};
    for (int j = 1; j < n; ++j) {
        const ShiftedLogSeries lj = u_series.laplacian_power(j);
        chain.push_back(series_field(grid, lj, {0.0, 0.0, lj.decay_exponent()}));
    }
    const RadialField& u = chain.front();
    const double kval = factorial(2 * n - 1);
    const SampledCurvature k = constant_curvature(kval, *grid);
    const double g = gamma_n(dn);

    BubbleCheck out;
    out.n = n;
    out.lambda = lambda;
    out.lambda_u = total_curvature(k, u, -2.0);
    out.certificates.push_back(
        Certificate::evaluate("lambda_sphere", out.lambda_u, total_sphere_curvature(dn), 1e-6));
    out.certificates.push_back(slope_certificate(u, out.lambda_u, 0.01));
    for (int kk = 1; kk <= 2 * n - 1; ++kk) {
        out.certificates.push_back(dk_certificate(chain, kk, -out.lambda_u / g, 0.02));
    }
    out.certificates.push_back(pohozaev_certificate(k, u, out.lambda_u, 1e-6, -2.0));
    out.certificates.push_back(expansion_certificate(u, k, out.lambda_u, -1.0, 1e-3));
    const RadialField fwd = forward_laplacian_power(chain[static_cast<std::size_t>(n - 2)], 2);
    out.certificates.push_back(forward_residual_certificate(fwd, k, u, 50.0, 1e-4, 0.0));
    return out;
}

std::vector<std::string> linear_case_ids()
{
    return {"manufactured-biharmonic", "hbeta-3", "oracle-equivalence"};
}

namespace {

LinearCaseResult manufactured_biharmonic()
{
    const DimensionParam n(2);
    const int intervals = 4096;
    const double r_max = 200.0;
    const GridPtr grid = build_grid(n, r_max, intervals, auto_grading(intervals, r_max));
    const ShiftedLogSeries exact(n, 1.0, 0.0, 0.0, {1.0});
    const ShiftedLogSeries rhs = exact.laplacian_power(2);
    const RadialField f = RadialField::sample(grid, [&](double r) { return rhs.value(r); },
                                              TailModel::power_law(rhs.decay_exponent()));
    const RadialField u = solve_polyharmonic(f);
    double err = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        err = std::max(err, std::abs(u[i] - exact.value(grid->node(i))));
    }
    LinearCaseResult res;
    res.id = "manufactured-biharmonic";
    res.certificates.push_back(Certificate::evaluate("sup_error", err, 0.0, 1e-6));
    res.details["sup_error"] = err;
    return res;
}

LinearCaseResult hbeta(double beta)
{
    const DimensionParam n(2);
    const int intervals = 4096;
    const double r_max = 200.0;
    const GridPtr grid = build_grid(n, r_max, intervals, auto_grading(intervals, r_max));
    RadialField f = RadialField::sample(grid, [&](double r) { return h_beta(beta, r); });
    f.set_tail(PowerTail({PowerTerm{1.0, beta}}));
    const RadialField w = psi_inverse_laplacian(f);
    const auto r = grid->nodes();
    const DecayFit fit = fit_decay_exponent(r, w.values(), FitWindow::last_decade(r_max), 2.0 * n.value() - 2.0);
    double ratio = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
        ratio = std::max(ratio, std::abs(w[i]) / h_beta(beta - 2.0, r[i]));
    }
    const double bound = h_beta_bound(n.value(), beta);
    LinearCaseResult res;
    res.id = "hbeta";
    res.certificates.push_back(Certificate::evaluate("decay_exponent", fit.exponent, beta - 2.0, 0.05));
    Certificate c = Certificate::evaluate("hbeta_bound", ratio, bound, 0.0);
    c.pass = ratio <= bound;
    c.rel_error = ratio / bound;
    c.tolerance = 1.0;
    c.note = "measured sup |w| / h_{beta-2} against the analytic constant; pass when below it";
    res.certificates.push_back(c);
    res.details = {{"beta", beta}, {"decay_exponent", fit.exponent}, {"sup_ratio", ratio}, {"bound", bound}};
    return res;
}

LinearCaseResult oracle_equivalence()
{
    const DimensionParam n(2);
    const int intervals = 2048;
    const double r_max = 20.0;
    const GridPtr grid = build_grid(n, r_max, intervals, auto_grading(intervals, r_max));
    const AngularRule rule(n);
    LinearCaseResult res;
    res.id = "oracle-equivalence";
    nlohmann::json rows = nlohmann::json::array();
    const auto pairs = random_bump_pairs(5, 20261015);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        const RadialField f = mean_zero_bump_pair(grid, pairs[p]);
        const double sign = n.value() % 2 == 0 ? 1.0 : -1.0;
        const RadialField u = solve_polyharmonic(linear_combination(sign, f, 0.0, f));
        const RadialField v = log_potential_radial(f, rule);
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        double scale = 0.0;
        for (std::size_t i = 0; i < u.size(); ++i) {
            const double d = u[i] - v[i];
            lo = std::min(lo, d);
            hi = std::max(hi, d);
            scale = std::max(scale, std::abs(u[i]));
        }
        const double shift = 0.5 * (lo + hi);
        const double spread = 0.5 * (hi - lo);
        const std::string tag = "pair" + std::to_string(p);
        res.certificates.push_back(Certificate::evaluate(tag + "_constant", shift, 0.0, 1e-3));
        res.certificates.push_back(Certificate::evaluate(tag + "_spread", spread, 0.0, 1e-4));
        rows.push_back({{"constant", shift}, {"spread", spread}, {"sup_u", scale}});
    }
    res.details["pairs"] = rows;
    return res;
}

}  // namespace

LinearCaseResult run_linear_case(const std::string& id)
{
    if (id == "manufactured-biharmonic") {
        return manufactured_biharmonic();
    }
    if (id == "hbeta-3") {
        LinearCaseResult r = hbeta(3.0);
        r.id = id;
        return r;
    }
    if (id == "oracle-equivalence") {
        return oracle_equivalence();
    }
    throw InvalidArgument("unknown linear test case '" + id + "'");
}

std::vector<SweepRow> run_sweep(const CurvatureSpec& k, const SolveConfig& base, const std::vector<double>& alphas)
{
    std::vector<SweepRow> rows(alphas.size());
    const auto count = static_cast<std::ptrdiff_t>(alphas.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        SweepRow& row = rows[static_cast<std::size_t>(i)];
        row.alpha = alphas[static_cast<std::size_t>(i)];
        SolveConfig cfg = base;
        cfg.alpha = row.alpha;
        try {
            const SolutionReport rep = solve(k, cfg);
            row.status = rep.converged ? "converged" : "not-converged";
            row.lambda_u = rep.lambda_u;
            row.lambda_over_gamma = rep.lambda_u / gamma_n(DimensionParam(cfg.n));
            row.ell = rep.ell;
            row.c_w = rep.c_w;
            row.iterations = rep.iterations;
            row.all_pass = rep.all_pass();
            row.certificates = rep.certificates;
        } catch (const AdmissibilityError& e) {
            row.status = "rejected";
            row.message = e.what();
        } catch (const std::exception& e) {
            row.status = "error";
            row.message = e.what();
        }
    }
    return rows;
}

int cmd_solve(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const std::filesystem::path dir = prepare_out(cfg);
    const std::filesystem::path report_path = dir / "report.json";
    if (!cfg.curvature) {
        return finish(kExitUsage, "solve needs a curvature entry", {}, report_path, err);
    }
    try {
        const SolutionReport rep = solve(*cfg.curvature, cfg.solve);
        write_solution_csv(dir / "solution.csv", rep);
        nlohmann::json j = to_json(rep);
        j["curvature"] = cfg.curvature->to_json();
        out << "converged=" << (rep.converged ? "true" : "false") << " iterations=" << rep.iterations
            << " lambda_u=" << format_double(rep.lambda_u) << " ell=" << format_double(rep.ell) << '\n';
        for (const auto& c : rep.certificates) {
            out << "  " << c.name << ": " << (c.pass ? "pass" : "FAIL") << " rel_error=" << c.rel_error << '\n';
        }
        if (!rep.converged) {
            return finish(kExitNotConverged, "fixed-point iteration did not reach the tolerance", j, report_path,
                          err);
        }
        if (!rep.all_pass()) {
            std::string failed;
            for (const auto& c : rep.certificates) {
                if (!c.pass) {
                    failed += (failed.empty() ? "" : ",") + c.name;
                }
            }
            return finish(kExitCertificateFail, "certificates failed: " + failed, j, report_path, err);
        }
        return finish(kExitOk, "", j, report_path, err);
    } catch (const AdmissibilityError& e) {
        nlohmann::json j;
        j["curvature"] = cfg.curvature->to_json();
        j["alpha"] = cfg.solve.alpha;
        j["alpha1"] = json_number(alpha1(*cfg.curvature, DimensionParam(cfg.solve.n)));
        return finish(kExitInadmissible, e.what(), j, report_path, err);
    } catch (const InvalidArgument& e) {
        return finish(kExitUsage, e.what(), {}, report_path, err);
    } catch (const std::exception& e) {
        return finish(kExitError, e.what(), {}, report_path, err);
    }
}

int cmd_verify_bubble(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const std::filesystem::path dir = prepare_out(cfg);
    const std::filesystem::path report_path = dir / "bubble_report.json";
    try {
        const BubbleCheck b = verify_bubble(cfg.solve.n, cfg.lambda_scale, cfg.solve.intervals, cfg.solve.r_max);
        nlohmann::json j;
        j["n"] = b.n;
        j["lambda"] = b.lambda;
        j["lambda_u"] = b.lambda_u;
        j["lambda_sphere"] = total_sphere_curvature(DimensionParam(b.n));
        j["certificates"] = certificates_json(b.certificates);
        j["all_pass"] = b.all_pass();
        out << "lambda_u=" << format_double(b.lambda_u) << '\n';
        for (const auto& c : b.certificates) {
            out << "  " << c.name << ": " << (c.pass ? "pass" : "FAIL") << " rel_error=" << c.rel_error << '\n';
        }
        if (!b.all_pass()) {
            return finish(kExitCertificateFail, "bubble certificates failed", j, report_path, err);
        }
        return finish(kExitOk, "", j, report_path, err);
    } catch (const InvalidArgument& e) {
        return finish(kExitUsage, e.what(), {}, report_path, err);
    } catch (const std::exception& e) {
        return finish(kExitError, e.what(), {}, report_path, err);
    }
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const std::filesystem::path dir = prepare_out(cfg);
    const std::filesystem::path report_path = dir / "sweep_report.json";
    if (!cfg.curvature) {
        return finish(kExitUsage, "sweep needs a curvature entry", {}, report_path, err);
    }
    if (cfg.alphas.empty()) {
        return finish(kExitUsage, "sweep needs a nonempty alpha list", {}, report_path, err);
    }
    try {
        cfg.solve.validate();
        const std::vector<SweepRow> rows = run_sweep(*cfg.curvature, cfg.solve, cfg.alphas);
        std::vector<std::string> cert_names;
        for (const auto& r : rows) {
            if (!r.certificates.empty()) {
                for (const auto& c : r.certificates) {
                    cert_names.push_back(c.name);
                }
                break;
            }
        }
        std::ofstream csv(dir / "sweep.csv");
        csv << "alpha,status,lambda_u,lambda_over_gamma,ell,c_w,iterations";
        for (const auto& name : cert_names) {
            csv << ',' << name << "_rel_error";
        }
        csv << '\n';
        nlohmann::json arr = nlohmann::json::array();
        bool not_converged = false;
        bool cert_fail = false;
        for (const auto& r : rows) {
            const bool ran = r.status == "converged" || r.status == "not-converged";
            const double nan = std::numeric_limits<double>::quiet_NaN();
            csv << format_double(r.alpha) << ',' << r.status << ',' << format_double(ran ? r.lambda_u : nan) << ','
                << format_double(ran ? r.lambda_over_gamma : nan) << ',' << format_double(ran ? r.ell : nan) << ','
                << format_double(ran ? r.c_w : nan) << ',' << r.iterations;
            for (std::size_t c = 0; c < cert_names.size(); ++c) {
                csv << ',' << format_double(c < r.certificates.size() ? r.certificates[c].rel_error : nan);
            }
            csv << '\n';
            nlohmann::json row{{"alpha", r.alpha}, {"status", r.status}, {"iterations", r.iterations}};
            if (ran) {
                row["lambda_u"] = json_number(r.lambda_u);
                row["lambda_over_gamma"] = json_number(r.lambda_over_gamma);
                row["ell"] = json_number(r.ell);
                row["c_w"] = json_number(r.c_w);
                row["all_pass"] = r.all_pass;
                row["certificates"] = certificates_json(r.certificates);
            } else {
                row["message"] = r.message;
            }
            arr.push_back(row);
            out << "alpha=" << r.alpha << " " << r.status;
            if (ran) {
                out << " lambda/gamma=" << format_double(r.lambda_over_gamma) << " ell=" << format_double(r.ell);
            }
            out << '\n';
            not_converged = not_converged || r.status == "not-converged" || r.status == "error";
            cert_fail = cert_fail || (r.status == "converged" && !r.all_pass);
        }
        nlohmann::json j;
        j["curvature"] = cfg.curvature->to_json();
        j["config"] = to_json(cfg.solve);
        j["rows"] = arr;
        if (not_converged) {
            return finish(kExitNotConverged, "at least one sweep row did not converge", j, report_path, err);
        }
        if (cert_fail) {
            return finish(kExitCertificateFail, "at least one sweep row failed a certificate", j, report_path, err);
        }
        return finish(kExitOk, "", j, report_path, err);
    } catch (const InvalidArgument& e) {
        return finish(kExitUsage, e.what(), {}, report_path, err);
    } catch (const std::exception& e) {
        return finish(kExitError, e.what(), {}, report_path, err);
    }
}

int cmd_linear_test(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const std::filesystem::path dir = prepare_out(cfg);
    const std::filesystem::path report_path = dir / "linear_test_report.json";
    const auto ids = linear_case_ids();
    if (std::find(ids.begin(), ids.end(), cfg.case_id) == ids.end()) {
        return finish(kExitUsage, "unknown linear test case '" + cfg.case_id + "'", {}, report_path, err);
    }
    try {
        const LinearCaseResult res = run_linear_case(cfg.case_id);
        nlohmann::json j;
        j["case"] = res.id;
        j["certificates"] = certificates_json(res.certificates);
        j["details"] = res.details;
        j["all_pass"] = res.all_pass();
        for (const auto& c : res.certificates) {
            out << "  " << c.name << ": " << (c.pass ? "pass" : "FAIL") << " measured=" << c.measured
                << " predicted=" << c.predicted << '\n';
        }
        if (!res.all_pass()) {
            return finish(kExitCertificateFail, "linear test tolerances exceeded", j, report_path, err);
        }
        return finish(kExitOk, "", j, report_path, err);
    } catch (const std::exception& e) {
        return finish(kExitError, e.what(), {}, report_path, err);
    }
}

}  // namespace qcurv
