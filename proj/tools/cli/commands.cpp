#include "cli/commands.hpp"

#include "cli/handles.hpp"
#include "cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <thread>

namespace conekit::cli {

const char* const kCsvHeader =
    "b,beta,sigma0_cscK,lambda_ext,sigma0_ext,positivity_ok,identity_ok,fut_classical,asympt_rel_err";

namespace {

constexpr double kCutoff = 1e-6;
constexpr int kSteps = 10000;

int exit_for(conekit_status s) {
    switch (s) {
        case CONEKIT_ERR_POSITIVITY_FAILURE:
        case CONEKIT_ERR_INTERNAL_INCONSISTENCY:
        case CONEKIT_ERR_NON_POSITIVE_PROFILE:
            return kCheckFailed;
        default:
            return kBadInput;
    }
}

void report(const LibraryError& e, std::ostream& err) {
    err << "error: " << e.what() << "\n";
}

SweepRow compute_row(const conekit_base* base, const RunConfig& cfg, const std::string& b) {
    const auto problem = make_problem(base, cfg, b);
    const auto sol = solve(problem.get(), b);
    SweepRow row;
    row.b_exact = b;
    row.b = conekit_problem_moment_value(problem.get(), CONEKIT_MOMENT_HALF_WIDTH);
    row.beta_exact = conekit_solution_quantity(sol.get(), CONEKIT_BETA);
    row.beta = conekit_solution_value(sol.get(), CONEKIT_BETA);
    row.sigma0_cscK = conekit_solution_value(sol.get(), CONEKIT_SIGMA0_CSCK);
    row.lambda_ext = conekit_solution_value(sol.get(), CONEKIT_LAMBDA);
    row.sigma0_ext = conekit_solution_value(sol.get(), CONEKIT_SIGMA0_EXTREMAL);
    row.positivity_ok = conekit_solution_positivity(sol.get(), CONEKIT_PROFILE_EXTREMAL, nullptr) == 1 &&
                        conekit_solution_positivity(sol.get(), CONEKIT_PROFILE_CONICAL, nullptr) == 1;
    row.identity_ok = conekit_solution_identity_ok(sol.get()) == 1;
    row.fut_classical = conekit_solution_value(sol.get(), CONEKIT_FUT_CLASSICAL);
    row.asympt_rel_err = std::nan("");
    if (!cfg.exact_only) {
        double slope = 0.0;
        check(conekit_solution_fit_exponent(sol.get(), kCutoff, kSteps, &slope, &row.asympt_rel_err),
              "b = " + b + ", cone exponent fit");
    }
    return row;
}

std::string default_svg_path(const RunConfig& cfg, const SweepArgs& args, const std::string& csv_path) {
    if (!cfg.svg_path.empty()) return cfg.svg_path;
    if (!csv_path.empty()) return std::filesystem::path(csv_path).replace_extension(".svg").string();
    if (!cfg.name.empty()) return cfg.name + ".svg";
    return std::filesystem::path(args.config_path).filename().replace_extension(".svg").string();
}

bool write_file(const std::string& path, const std::string& content, std::ostream& err) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << content;
    if (!out) {
        err << "error: cannot write " << path << "\n";
        return false;
    }
    return true;
}

}  // namespace

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);
    return buf;
}

std::string format_csv(const std::vector<SweepRow>& rows) {
    std::string s = std::string(kCsvHeader) + "\n";
    auto flag = [](bool b) { return b ? "true" : "false"; };
    for (const auto& r : rows) {
        s += format_number(r.b) + "," + format_number(r.beta) + "," + format_number(r.sigma0_cscK) + "," +
             format_number(r.lambda_ext) + "," + format_number(r.sigma0_ext) + "," + flag(r.positivity_ok) + "," +
             flag(r.identity_ok) + "," + format_number(r.fut_classical) + "," + format_number(r.asympt_rel_err) +
             "\n";
    }
    return s;
}

std::vector<SweepRow> compute_sweep(const RunConfig& cfg, unsigned threads) {
    const auto base = make_base(cfg);
    const int n = cfg.sweep.grid_points;
    std::vector<std::string> grid;
    for (int k = 0; k < n; ++k) grid.push_back(grid_point(cfg.sweep, k));

    std::vector<SweepRow> rows(static_cast<std::size_t>(n));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(n));

    // Static striping: row k goes to worker k mod threads; results land by index.
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t k = w; k < grid.size(); k += threads) {
                try {
                    rows[k] = compute_row(base.get(), cfg, grid[k]);
                } catch (...) {
                    errors[k] = std::current_exception();
                }
            }
        });
    }
    pool.clear();
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return rows;
}

int cmd_describe(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        const auto base = make_base(cfg);
        if (!cfg.name.empty()) out << "name: " << cfg.name << "\n";
        out << "factors (dim, einstein, exponent):";
        for (const auto& f : cfg.factors) out << " (" << f.dim << ", " << f.einstein << ", " << f.exponent << ")";
        out << "\n";
        const char* q = nullptr;
        const char* rq = nullptr;
        const char* bmax = nullptr;
        check(conekit_base_poly(base.get(), CONEKIT_POLY_Q, &q), "Q");
        check(conekit_base_poly(base.get(), CONEKIT_POLY_RQ, &rq), "RQ");
        check(conekit_base_max_b(base.get(), &bmax), "b_max");
        out << "Q = " << q << "\n";
        out << "RQ = " << rq << "\n";
        out << "b_max = " << (bmax ? bmax : "none (all exponents zero)") << "\n";

        std::vector<std::string> points{grid_point(cfg.sweep, 0)};
        if (cfg.sweep.grid_points > 1) points.push_back(grid_point(cfg.sweep, cfg.sweep.grid_points - 1));
        for (const auto& b : points) {
            const auto problem = make_problem(base.get(), cfg, b);
            out << "b = " << b << ": A = " << conekit_problem_moment(problem.get(), CONEKIT_MOMENT_A)
                << ", B = " << conekit_problem_moment(problem.get(), CONEKIT_MOMENT_B)
                << ", C = " << conekit_problem_moment(problem.get(), CONEKIT_MOMENT_C) << "\n";
        }
        return kOk;
    } catch (const LibraryError& e) {
        report(e, err);
        return exit_for(e.status());
    }
}

int cmd_sweep(const RunConfig& cfg, const SweepArgs& args, std::ostream& out, std::ostream& err) {
    std::vector<SweepRow> rows;
    try {
        rows = compute_sweep(cfg, args.threads);
    } catch (const LibraryError& e) {
        err << "sweep aborted\n";
        report(e, err);
        return exit_for(e.status());
    }
    for (const auto& r : rows) {
        if (!r.identity_ok) {
            err << "sweep aborted: cone angle identity fails at b = " << r.b_exact << "\n";
            return kCheckFailed;
        }
    }

    const std::string csv = format_csv(rows);
    const std::string csv_path = args.csv_override.empty() ? cfg.csv_path : args.csv_override;
    if (csv_path.empty() || csv_path == "-") {
        out << csv;
    } else if (!write_file(csv_path, csv, err)) {
        return kBadInput;
    }

    if (args.svg) {
        std::vector<PlotPoint> pts;
        for (const auto& r : rows) pts.push_back({r.b, r.beta});
        const std::string caption = "β(b): " + (cfg.name.empty() ? std::string("conekit sweep") : cfg.name);
        const std::string path = default_svg_path(cfg, args, csv_path == "-" ? "" : csv_path);
        if (!write_file(path, render_svg(pts, caption, "b", "β"), err)) return kBadInput;
    }
    return kOk;
}

int cmd_verify(const VerifyArgs& args, std::ostream& out, std::ostream& err) {
    bool ok = true;
    std::string first_failure;
    auto note_failures = [&](const conekit_verify_report* r, const std::string& prefix) {
        const std::size_t n = conekit_verify_failure_count(r);
        for (std::size_t i = 0; i < n; ++i) {
            const std::string line = prefix + conekit_verify_failure(r, i);
            out << "FAIL " << line << "\n";
            if (first_failure.empty()) first_failure = line;
        }
        if (n) ok = false;
    };

    std::uint64_t seed = args.seed;
    if (!args.seed_given && args.config && args.config->seed) seed = *args.config->seed;

    try {
        conekit_verify_report* raw = nullptr;
        check(conekit_verify_random(seed, args.cases, &raw), "random suite");
        const VerifyPtr report(raw);
        out << "random suite: seed " << seed << ", " << conekit_verify_cases(report.get()) << " cases, "
            << conekit_verify_checks(report.get()) << " checks, " << conekit_verify_failure_count(report.get())
            << " failures\n";
        note_failures(report.get(), "");

        if (args.config) {
            const auto& cfg = *args.config;
            const auto base = make_base(cfg);
            int checks = 0;
            for (int k = 0; k < cfg.sweep.grid_points; ++k) {
                const std::string b = grid_point(cfg.sweep, k);
                const auto problem = make_problem(base.get(), cfg, b);
                check(conekit_verify_problem(problem.get(), &raw), "b = " + b);
                const VerifyPtr r(raw);
                checks += conekit_verify_checks(r.get());
                note_failures(r.get(), "b = " + b + ": ");
            }
            out << "config " << (cfg.name.empty() ? "(unnamed)" : cfg.name) << ": " << cfg.sweep.grid_points
                << " points, " << checks << " checks\n";
        }
    } catch (const LibraryError& e) {
        report(e, err);
        return kBadInput;
    }

    if (!ok) {
        err << "verify failed; first failing invariant: " << first_failure << "\n";
        return kCheckFailed;
    }
    out << "all checks passed\n";
    return kOk;
}

}  // namespace conekit::cli
