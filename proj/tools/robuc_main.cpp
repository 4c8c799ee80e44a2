// SPDX-License-Identifier: Apache-2.0
// Command-line front end over the shared-library C interface.
#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "robuc.h"

namespace {

int fail(int code, const std::string& what) {
    std::fprintf(stderr, "robuc: %s: %s\n", what.c_str(), robuc_last_error());
    return code;
}

// unique_ptr wrappers so error paths don't leak handles
using SystemPtr = std::unique_ptr<robuc_system, decltype(&robuc_system_free)>;
using SetPtr = std::unique_ptr<robuc_set, decltype(&robuc_set_free)>;
using SolutionPtr =
    std::unique_ptr<robuc_solution, decltype(&robuc_solution_free)>;
using ReportPtr = std::unique_ptr<robuc_report, decltype(&robuc_report_free)>;

std::uint64_t fnv1a(const std::string& text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

struct RunContext {
    std::string output_dir = ".";
    std::uint64_t seed = 1;
    int threads = 1;
    std::vector<std::string> config_lines;  // everything that shaped the run

    void note(const std::string& key, const std::string& value) {
        config_lines.push_back(key + " = " + value);
    }
    void note(const std::string& key, double value) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", value);
        note(key, std::string(buf));
    }
    void note(const std::string& key, int value) {
        note(key, std::to_string(value));
    }

    // every run leaves a manifest sufficient to reproduce it exactly
    void write_manifest(const std::string& subcommand) const {
        std::string blob = subcommand;
        for (const auto& line : config_lines) blob += "\n" + line;
        std::ofstream out(output_dir + "/manifest.txt");
        out << "robuc_version = " << robuc_version() << "\n"
            << "subcommand = " << subcommand << "\n"
            << "seed = " << seed << "\n";
        char buf[24];
        std::snprintf(buf, sizeof buf, "%016" PRIx64, fnv1a(blob));
        out << "config_hash = " << buf << "\n";
        for (const auto& line : config_lines) out << line << "\n";
    }
};

int load_system(const std::string& path, SystemPtr* out) {
    robuc_system* raw = nullptr;
    const int rc = robuc_system_read(path.c_str(), &raw);
    out->reset(raw);
    return rc;
}

int load_set(const std::string& path, SetPtr* out) {
    robuc_set* raw = nullptr;
    const int rc = robuc_set_read(path.c_str(), &raw);
    out->reset(raw);
    return rc;
}

struct UcCliOptions {
    double gap = 0.01;
    double time_limit = 0.0;
    int max_iterations = 60;
    bool no_screening = false, no_oa = false, no_one_tree = false;
    bool exact_dual = false;

    robuc_uc_options to_c(int threads) const {
        robuc_uc_options o;
        robuc_uc_options_init(&o);
        o.gap = gap;
        o.time_limit = time_limit;
        o.max_iterations = max_iterations;
        o.screening = no_screening ? 0 : 1;
        o.oa = no_oa ? 0 : 1;
        o.one_tree = no_one_tree ? 0 : 1;
        o.exact_dual = exact_dual ? 1 : 0;
        o.threads = threads;
        return o;
    }
};

void add_uc_flags(CLI::App* cmd, UcCliOptions* o) {
    cmd->add_option("--gap", o->gap, "relative MIP gap");
    cmd->add_option("--time-limit", o->time_limit, "seconds, 0 = none");
    cmd->add_option("--max-iterations", o->max_iterations,
                    "cut-generation iteration cap");
    cmd->add_flag("--no-screening", o->no_screening,
                  "disable interval screening of separation LPs");
    cmd->add_flag("--no-oa", o->no_oa,
                  "disable the dualized outer approximation in the master");
    cmd->add_flag("--no-one-tree", o->no_one_tree,
                  "re-solve the master instead of lazy cuts in one tree");
    cmd->add_flag("--exact-dual", o->exact_dual,
                  "monolithic dual reformulation instead of cut generation");
}

int write_solution_artifacts(const RunContext& ctx, const std::string& out_path,
                             robuc_solution* sol) {
    if (int rc = robuc_solution_write(out_path.c_str(), sol))
        return fail(rc, "writing " + out_path);
    std::printf("solution written to %s\n", out_path.c_str());
    std::printf("  objective        %.2f\n", robuc_solution_objective(sol));
    std::printf("  commitment cost  %.2f\n", robuc_solution_commitment_cost(sol));
    std::printf("  dispatch cost    %.2f\n", robuc_solution_worst_case_cost(sol));
    const int nw = robuc_solution_warning(sol, -1, nullptr, 0);
    char buf[512];
    for (int k = 0; k < nw; ++k) {
        robuc_solution_warning(sol, k, buf, sizeof buf);
        std::printf("  warning: %s\n", buf);
    }
    (void)ctx;
    return 0;
}

int run_simulation_artifacts(const RunContext& ctx, robuc_system* sys,
                             robuc_solution* sol, robuc_set* set,
                             const robuc_sim_options& sopts,
                             const std::string& out_path, robuc_report** out) {
    robuc_report* rep = nullptr;
    if (int rc = robuc_simulate(sys, sol, set, &sopts, &rep))
        return fail(rc, "simulate");
    if (int rc = robuc_report_write(out_path.c_str(), rep)) {
        robuc_report_free(rep);
        return fail(rc, "writing " + out_path);
    }
    std::printf("report written to %s\n", out_path.c_str());
    char buf[600];
    robuc_report_summary(rep, buf, sizeof buf);
    std::printf("%s", buf);
    if (out)
        *out = rep;
    else
        robuc_report_free(rep);
    (void)ctx;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"robust unit-commitment toolkit"};
    app.require_subcommand(1);

    RunContext ctx;
    app.add_option("--output-dir", ctx.output_dir, "artifact directory");
    app.add_option("--seed", ctx.seed, "random seed for this run");
    app.add_option("--threads", ctx.threads, "worker thread cap");

    std::string system_path, set_path, series_path, solution_path, out_path;

    // ---- estimate ----
    auto* est = app.add_subcommand(
        "estimate", "fit the uncertainty model from a renewable time series");
    int cycle = 0, lags = 1, factors = 0;
    double gamma = 1.0, rho = 1.0;
    std::string norm = "linf";
    est->add_option("--system", system_path, "system file")->required();
    est->add_option("--series", series_path, "time-series file")->required();
    est->add_option("--out", out_path, "output set file");
    est->add_option("--cycle", cycle, "seasonal cycle length (default horizon)");
    est->add_option("--lags", lags, "recursion lag order");
    est->add_option("--factors", factors, "innovation factors (default all)");
    est->add_option("--gamma", gamma, "per-period budget");
    est->add_option("--rho", rho, "total budget share");
    est->add_option("--norm", norm, "budget norm: linf, l1, l1linf");

    // ---- solve-uc ----
    auto* suc = app.add_subcommand("solve-uc", "solve the robust unit commitment");
    UcCliOptions uco;
    double gamma_override = -1.0;
    suc->add_option("--system", system_path, "system file")->required();
    suc->add_option("--set", set_path, "uncertainty set file")->required();
    suc->add_option("--out", out_path, "output solution file");
    suc->add_option("--gamma", gamma_override, "override the set's budget");
    bool use_static = false;
    suc->add_flag("--static", use_static, "drop the set's dynamics first");
    add_uc_flags(suc, &uco);

    // ---- solve-det-uc ----
    auto* sdet = app.add_subcommand(
        "solve-det-uc", "deterministic unit commitment with sampled reserves");
    double reserve_gamma = 1.0;
    int samples = 100;
    sdet->add_option("--system", system_path, "system file")->required();
    sdet->add_option("--set", set_path, "uncertainty set file")->required();
    sdet->add_option("--out", out_path, "output solution file");
    sdet->add_option("--reserve-gamma", reserve_gamma,
                     "reserve = gamma x net-load std");
    sdet->add_option("--samples", samples, "trajectories for the reserve rule");

    // ---- simulate ----
    auto* simc = app.add_subcommand(
        "simulate", "rolling-horizon evaluation of a solution");
    std::string engine = "policy-guided";
    int trajectories = 100, lookahead = 3;
    double penalty_price = 5000.0;
    simc->add_option("--system", system_path, "system file")->required();
    simc->add_option("--set", set_path, "uncertainty set file")->required();
    simc->add_option("--solution", solution_path, "solution file")->required();
    simc->add_option("--out", out_path, "output report file");
    simc->add_option("--engine", engine,
                     "policy-guided | policy-enforcement | deterministic");
    simc->add_option("--trajectories", trajectories, "number of simulated days");
    simc->add_option("--lookahead", lookahead, "forecast periods in each plan");
    simc->add_option("--penalty-price", penalty_price, "$/MWh imbalance price");

    // ---- compare ----
    auto* cmp = app.add_subcommand(
        "compare", "dynamic vs static vs deterministic over a budget grid");
    std::vector<double> gammas = {0.5, 1.0, 2.0};
    int cmp_trajectories = 100;
    cmp->add_option("--system", system_path, "system file")->required();
    cmp->add_option("--set", set_path, "uncertainty set file")->required();
    cmp->add_option("--gammas", gammas, "budget grid");
    cmp->add_option("--trajectories", cmp_trajectories, "simulated days per cell");
    UcCliOptions cmp_uco;
    add_uc_flags(cmp, &cmp_uco);

    CLI11_PARSE(app, argc, argv);

    ctx.note("threads", ctx.threads);
    ctx.note("output_dir", ctx.output_dir);

    if (est->parsed()) {
        SystemPtr sys(nullptr, robuc_system_free);
        if (int rc = load_system(system_path, &sys)) return fail(rc, system_path);
        if (cycle <= 0) cycle = robuc_system_horizon(sys.get());
        if (factors <= 0) factors = robuc_system_num_ren(sys.get());
        if (out_path.empty()) out_path = ctx.output_dir + "/set.dus";
        ctx.note("system", system_path);
        ctx.note("series", series_path);
        ctx.note("cycle", cycle);
        ctx.note("lags", lags);
        ctx.note("factors", factors);
        ctx.note("gamma", gamma);
        ctx.note("rho", rho);
        ctx.note("norm", norm);
        robuc_set* set = nullptr;
        double captured = 0.0;
        if (int rc = robuc_estimate(sys.get(), series_path.c_str(), cycle, lags,
                                    factors, gamma, rho, norm.c_str(), &set,
                                    &captured))
            return fail(rc, "estimate");
        SetPtr guard(set, robuc_set_free);
        if (int rc = robuc_set_write(out_path.c_str(), set))
            return fail(rc, "writing " + out_path);
        std::printf("set written to %s\n", out_path.c_str());
        std::printf("  captured variance  %.4f\n", captured);
        ctx.write_manifest("estimate");
        return 0;
    }

    if (suc->parsed()) {
        SystemPtr sys(nullptr, robuc_system_free);
        SetPtr set(nullptr, robuc_set_free);
        if (int rc = load_system(system_path, &sys)) return fail(rc, system_path);
        if (int rc = load_set(set_path, &set)) return fail(rc, set_path);
        if (use_static) {
            robuc_set* st = nullptr;
            if (int rc = robuc_set_make_static(set.get(), &st))
                return fail(rc, "static counterpart");
            set.reset(st);
        }
        if (gamma_override >= 0.0) {
            robuc_set* adjusted = nullptr;
            if (int rc = robuc_set_with_gamma(set.get(), gamma_override, &adjusted))
                return fail(rc, "gamma override");
            set.reset(adjusted);
        }
        if (out_path.empty()) out_path = ctx.output_dir + "/solution.ucs";
        ctx.note("system", system_path);
        ctx.note("set", set_path);
        ctx.note("static", use_static ? 1 : 0);
        ctx.note("gamma", robuc_set_gamma(set.get()));
        ctx.note("gap", uco.gap);
        const robuc_uc_options opts = uco.to_c(ctx.threads);
        robuc_solution* sol = nullptr;
        const int rc = robuc_solve_uc(sys.get(), set.get(), &opts, &sol);
        if (rc != ROBUC_OK && rc != ROBUC_ERR_LIMIT) return fail(rc, "solve-uc");
        SolutionPtr guard(sol, robuc_solution_free);
        if (int wrc = write_solution_artifacts(ctx, out_path, sol)) return wrc;
        ctx.write_manifest("solve-uc");
        if (rc == ROBUC_ERR_LIMIT) return fail(rc, "solve-uc");
        return 0;
    }

    if (sdet->parsed()) {
        SystemPtr sys(nullptr, robuc_system_free);
        SetPtr set(nullptr, robuc_set_free);
        if (int rc = load_system(system_path, &sys)) return fail(rc, system_path);
        if (int rc = load_set(set_path, &set)) return fail(rc, set_path);
        if (out_path.empty()) out_path = ctx.output_dir + "/det_solution.ucs";
        ctx.note("system", system_path);
        ctx.note("set", set_path);
        ctx.note("reserve_gamma", reserve_gamma);
        ctx.note("samples", samples);
        robuc_solution* sol = nullptr;
        if (int rc = robuc_solve_det_uc(sys.get(), set.get(), reserve_gamma,
                                        samples, ctx.seed, &sol))
            return fail(rc, "solve-det-uc");
        SolutionPtr guard(sol, robuc_solution_free);
        if (int wrc = write_solution_artifacts(ctx, out_path, sol)) return wrc;
        ctx.write_manifest("solve-det-uc");
        return 0;
    }

    if (simc->parsed()) {
        SystemPtr sys(nullptr, robuc_system_free);
        SetPtr set(nullptr, robuc_set_free);
        if (int rc = load_system(system_path, &sys)) return fail(rc, system_path);
        if (int rc = load_set(set_path, &set)) return fail(rc, set_path);
        robuc_solution* sol = nullptr;
        if (int rc = robuc_solution_read(solution_path.c_str(), &sol))
            return fail(rc, solution_path);
        SolutionPtr guard(sol, robuc_solution_free);
        if (out_path.empty()) out_path = ctx.output_dir + "/report.txt";
        ctx.note("system", system_path);
        ctx.note("set", set_path);
        ctx.note("solution", solution_path);
        ctx.note("engine", engine);
        ctx.note("trajectories", trajectories);
        ctx.note("lookahead", lookahead);
        ctx.note("penalty_price", penalty_price);
        robuc_sim_options sopts;
        robuc_sim_options_init(&sopts);
        sopts.trajectories = trajectories;
        sopts.seed = ctx.seed;
        sopts.engine = engine.c_str();
        sopts.lookahead = lookahead;
        sopts.penalty_price = penalty_price;
        sopts.threads = ctx.threads;
        if (int rc = run_simulation_artifacts(ctx, sys.get(), sol, set.get(),
                                              sopts, out_path, nullptr))
            return rc;
        ctx.write_manifest("simulate");
        return 0;
    }

    if (cmp->parsed()) {
        SystemPtr sys(nullptr, robuc_system_free);
        SetPtr base(nullptr, robuc_set_free);
        if (int rc = load_system(system_path, &sys)) return fail(rc, system_path);
        if (int rc = load_set(set_path, &base)) return fail(rc, set_path);
        ctx.note("system", system_path);
        ctx.note("set", set_path);
        ctx.note("trajectories", cmp_trajectories);
        for (double g : gammas) ctx.note("gamma", g);

        struct Cell {
            std::string method;
            double gamma, objective, cost_avg, cost_cvar, penalty_freq;
        };
        std::vector<Cell> table;
        const robuc_uc_options opts = cmp_uco.to_c(ctx.threads);
        for (const std::string& method :
             {std::string("dynamic"), std::string("static"), std::string("det")}) {
            for (double g : gammas) {
                SetPtr variant(nullptr, robuc_set_free);
                {
                    robuc_set* raw = nullptr;
                    if (method == "static") {
                        robuc_set* st = nullptr;
                        if (int rc = robuc_set_make_static(base.get(), &st))
                            return fail(rc, "static counterpart");
                        SetPtr tmp(st, robuc_set_free);
                        if (int rc = robuc_set_with_gamma(st, g, &raw))
                            return fail(rc, "gamma grid");
                    } else {
                        if (int rc = robuc_set_with_gamma(base.get(), g, &raw))
                            return fail(rc, "gamma grid");
                    }
                    variant.reset(raw);
                }
                robuc_solution* sol = nullptr;
                int rc;
                if (method == "det")
                    rc = robuc_solve_det_uc(sys.get(), variant.get(), g, 100,
                                            ctx.seed, &sol);
                else
                    rc = robuc_solve_uc(sys.get(), variant.get(), &opts, &sol);
                if (rc != ROBUC_OK && rc != ROBUC_ERR_LIMIT)
                    return fail(rc, "compare: " + method);
                SolutionPtr sguard(sol, robuc_solution_free);
                const std::string tag =
                    method + "_g" + std::to_string(g).substr(0, 4);
                if (int wrc = robuc_solution_write(
                        (ctx.output_dir + "/" + tag + ".ucs").c_str(), sol))
                    return fail(wrc, "writing solution");
                robuc_sim_options sopts;
                robuc_sim_options_init(&sopts);
                sopts.trajectories = cmp_trajectories;
                sopts.seed = ctx.seed;
                sopts.threads = ctx.threads;
                sopts.engine =
                    method == "det" ? "deterministic" : "policy-guided";
                robuc_report* rep = nullptr;
                if (int src = robuc_simulate(sys.get(), sol, variant.get(),
                                             &sopts, &rep))
                    return fail(src, "compare simulate: " + method);
                ReportPtr rguard(rep, robuc_report_free);
                if (int wrc = robuc_report_write(
                        (ctx.output_dir + "/" + tag + ".rep").c_str(), rep))
                    return fail(wrc, "writing report");
                table.push_back({method, g, robuc_solution_objective(sol),
                                 robuc_report_metric(rep, "cost_avg"),
                                 robuc_report_metric(rep, "cost_cvar"),
                                 robuc_report_metric(rep, "penalty_freq")});
            }
        }
        std::printf("%-8s %7s %14s %14s %14s %13s\n", "method", "gamma",
                    "objective", "cost avg", "cost cvar", "penalty freq");
        for (const Cell& c : table)
            std::printf("%-8s %7.2f %14.2f %14.2f %14.2f %13.4f\n",
                        c.method.c_str(), c.gamma, c.objective, c.cost_avg,
                        c.cost_cvar, c.penalty_freq);
        ctx.write_manifest("compare");
        return 0;
    }

    return 2;
}
