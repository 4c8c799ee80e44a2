// SPDX-License-Identifier: Apache-2.0
#include "robuc.h"

#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>

#include "robuc/core/system_io.hpp"
#include "robuc/dispatch/det_uc.hpp"
#include "robuc/robust/cg.hpp"
#include "robuc/robust/solution_io.hpp"
#include "robuc/sim/report_io.hpp"
#include "robuc/sim/simulator.hpp"
#include "robuc/uncertainty/set_io.hpp"
#include "robuc/uncertainty/simulate.hpp"

using namespace robuc;

struct robuc_system {
    core::PowerSystem sys;
};
struct robuc_set {
    uncertainty::DynamicUncertaintySet set;
};
struct robuc_solution {
    robust::UcSolution sol;
};
struct robuc_report {
    sim::SimulationReport report;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

// Runs `body`, translating exceptions into status codes.
template <typename Fn>
int guarded(Fn&& body) {
    try {
        return body();
    } catch (const core::ParseError& e) {
        set_error(e.what());
        return ROBUC_ERR_PARSE;
    } catch (const lp::BackendError& e) {
        set_error(e.what());
        return ROBUC_ERR_BACKEND;
    } catch (const robust::RobustUcError& e) {
        set_error(e.what());
        return ROBUC_ERR_INFEASIBLE;
    } catch (const dispatch::DispatchError& e) {
        set_error(e.what());
        return ROBUC_ERR_INFEASIBLE;
    } catch (const std::exception& e) {
        set_error(e.what());
        return ROBUC_ERR_PARSE;
    }
}

int require(bool cond, const char* what) {
    if (!cond) {
        set_error(std::string("invalid argument: ") + what);
        return ROBUC_ERR_PARSE;
    }
    return ROBUC_OK;
}

}  // namespace

extern "C" {

const char* robuc_version(void) { return "0.1.0"; }

const char* robuc_last_error(void) { return g_last_error.c_str(); }

int robuc_system_read(const char* path, robuc_system** out) {
    if (int rc = require(path && out, "robuc_system_read")) return rc;
    return guarded([&] {
        auto* h = new robuc_system{core::read_system_file(path)};
        *out = h;
        return ROBUC_OK;
    });
}

void robuc_system_free(robuc_system* sys) { delete sys; }

int robuc_system_horizon(const robuc_system* sys) {
    return sys ? sys->sys.horizon : -1;
}
int robuc_system_num_gen(const robuc_system* sys) {
    return sys ? sys->sys.num_gen() : -1;
}
int robuc_system_num_ren(const robuc_system* sys) {
    return sys ? sys->sys.num_ren() : -1;
}

int robuc_set_read(const char* path, robuc_set** out) {
    if (int rc = require(path && out, "robuc_set_read")) return rc;
    return guarded([&] {
        *out = new robuc_set{uncertainty::read_set_file(path)};
        return ROBUC_OK;
    });
}

int robuc_set_write(const char* path, const robuc_set* set) {
    if (int rc = require(path && set, "robuc_set_write")) return rc;
    return guarded([&] {
        uncertainty::write_set_file(path, set->set);
        return ROBUC_OK;
    });
}

void robuc_set_free(robuc_set* set) { delete set; }

double robuc_set_gamma(const robuc_set* set) {
    return set ? set->set.gamma : std::nan("");
}

int robuc_set_with_gamma(const robuc_set* set, double gamma, robuc_set** out) {
    if (int rc = require(set && out && gamma >= 0.0, "robuc_set_with_gamma"))
        return rc;
    return guarded([&] {
        auto* h = new robuc_set{set->set};
        h->set.gamma = gamma;
        h->set.validate();
        *out = h;
        return ROBUC_OK;
    });
}

int robuc_set_make_static(const robuc_set* set, robuc_set** out) {
    if (int rc = require(set && out, "robuc_set_make_static")) return rc;
    return guarded([&] {
        auto s = uncertainty::DynamicUncertaintySet::make_static(
            set->set.f, set->set.g, set->set.gamma, set->set.p_max,
            set->set.norm_kind);
        *out = new robuc_set{std::move(s)};
        return ROBUC_OK;
    });
}

int robuc_estimate(const robuc_system* sys, const char* series_path,
                   int period_cycle, int lags, int factors, double gamma,
                   double rho, const char* norm, robuc_set** out,
                   double* captured_variance) {
    if (int rc = require(sys && series_path && norm && out, "robuc_estimate"))
        return rc;
    return guarded([&] {
        std::vector<std::string> unit_ids;
        const auto history =
            uncertainty::read_time_series_file(series_path, &unit_ids);
        if (history.empty() || history[0].rows() != sys->sys.num_ren())
            throw core::ParseError(
                "time-series units do not match the system's renewables");
        const auto est = uncertainty::estimate_model(
            history, period_cycle, sys->sys.horizon, lags, factors);
        Eigen::MatrixXd p_max(sys->sys.num_ren(), sys->sys.horizon);
        for (int j = 0; j < sys->sys.num_ren(); ++j)
            for (int t = 0; t < sys->sys.horizon; ++t)
                p_max(j, t) = sys->sys.renewables[j].p_max_profile[t];
        auto set = uncertainty::make_set(
            est, gamma, rho, uncertainty::norm_from_name(norm), p_max);
        if (captured_variance) *captured_variance = est.captured_variance;
        *out = new robuc_set{std::move(set)};
        return ROBUC_OK;
    });
}

void robuc_uc_options_init(robuc_uc_options* opts) {
    if (!opts) return;
    robust::RobustUcOptions d;
    opts->gap = d.gap;
    opts->eps_viol = d.eps_viol;
    opts->screening = d.screening ? 1 : 0;
    opts->oa = d.oa ? 1 : 0;
    opts->one_tree = d.one_tree ? 1 : 0;
    opts->exact_dual = 0;
    opts->max_iterations = d.max_iterations;
    opts->time_limit = d.time_limit;
    opts->threads = d.threads;
}

int robuc_solve_uc(const robuc_system* sys, const robuc_set* set,
                   const robuc_uc_options* opts, robuc_solution** out) {
    if (int rc = require(sys && set && out, "robuc_solve_uc")) return rc;
    return guarded([&] {
        robust::RobustUcOptions ro;
        bool exact_dual = false;
        if (opts) {
            ro.gap = opts->gap;
            ro.eps_viol = opts->eps_viol;
            ro.screening = opts->screening != 0;
            ro.oa = opts->oa != 0;
            ro.one_tree = opts->one_tree != 0;
            ro.max_iterations = opts->max_iterations;
            ro.time_limit = opts->time_limit;
            ro.threads = opts->threads;
            ro.backend.gap = opts->gap;
            ro.backend.threads = opts->threads;
            exact_dual = opts->exact_dual != 0;
        }
        auto sol = exact_dual
                       ? robust::solve_robust_uc_dualized(sys->sys, set->set, ro)
                       : robust::solve_robust_uc(sys->sys, set->set, ro);
        const bool limited = !sol.stats.certified;
        *out = new robuc_solution{std::move(sol)};
        if (limited) {
            set_error("solve stopped at the iteration/time limit before "
                      "certification; partial solution returned");
            return ROBUC_ERR_LIMIT;
        }
        return ROBUC_OK;
    });
}

int robuc_solve_det_uc(const robuc_system* sys, const robuc_set* set,
                       double reserve_gamma, int samples,
                       unsigned long long seed, robuc_solution** out) {
    if (int rc = require(sys && set && out && samples >= 2 && reserve_gamma >= 0,
                         "robuc_solve_det_uc"))
        return rc;
    return guarded([&] {
        const auto world = uncertainty::world_from_set(set->set);
        const auto paths = uncertainty::simulate_paths(
            world, set->set.p_max, samples, sys->sys.horizon, seed);
        std::vector<Eigen::MatrixXd> avail;
        avail.reserve(paths.size());
        for (const auto& p : paths) avail.push_back(p.pbar);
        const auto reserves =
            dispatch::reserve_rule(sys->sys, avail, reserve_gamma);
        const Eigen::MatrixXd forecast =
            uncertainty::forecast_path(world, set->set.p_max, sys->sys.horizon);
        auto sol = dispatch::solve_deterministic_uc(sys->sys, forecast, reserves);
        *out = new robuc_solution{std::move(sol)};
        return ROBUC_OK;
    });
}

int robuc_solution_read(const char* path, robuc_solution** out) {
    if (int rc = require(path && out, "robuc_solution_read")) return rc;
    return guarded([&] {
        *out = new robuc_solution{robust::read_solution_file(path)};
        return ROBUC_OK;
    });
}

int robuc_solution_write(const char* path, const robuc_solution* sol) {
    if (int rc = require(path && sol, "robuc_solution_write")) return rc;
    return guarded([&] {
        robust::write_solution_file(path, sol->sol);
        return ROBUC_OK;
    });
}

void robuc_solution_free(robuc_solution* sol) { delete sol; }

double robuc_solution_objective(const robuc_solution* sol) {
    return sol ? sol->sol.objective : std::nan("");
}
double robuc_solution_worst_case_cost(const robuc_solution* sol) {
    return sol ? sol->sol.worst_case_cost : std::nan("");
}
double robuc_solution_commitment_cost(const robuc_solution* sol) {
    return sol ? sol->sol.commitment_cost : std::nan("");
}
int robuc_solution_certified(const robuc_solution* sol) {
    return sol && sol->sol.stats.certified ? 1 : 0;
}

int robuc_solution_warning(const robuc_solution* sol, int k, char* buf,
                           size_t cap) {
    if (!sol) return 0;
    const auto& w = sol->sol.warnings;
    if (buf && k >= 0 && k < static_cast<int>(w.size()))
        std::snprintf(buf, cap, "%s", w[k].c_str());
    return static_cast<int>(w.size());
}

void robuc_sim_options_init(robuc_sim_options* opts) {
    if (!opts) return;
    sim::SimulationConfig d;
    opts->trajectories = d.trajectories;
    opts->seed = d.seed;
    opts->engine = "policy-guided";
    opts->lookahead = d.lookahead;
    opts->penalty_price = d.penalty_price;
    opts->threads = d.threads;
}

int robuc_simulate(const robuc_system* sys, const robuc_solution* sol,
                   const robuc_set* set, const robuc_sim_options* opts,
                   robuc_report** out) {
    if (int rc = require(sys && sol && set && out, "robuc_simulate")) return rc;
    return guarded([&] {
        sim::SimulationConfig cfg;
        if (opts) {
            cfg.trajectories = opts->trajectories;
            cfg.seed = opts->seed;
            if (opts->engine) cfg.engine = sim::engine_from_name(opts->engine);
            cfg.lookahead = opts->lookahead;
            cfg.penalty_price = opts->penalty_price;
            cfg.threads = opts->threads;
        }
        const auto world = uncertainty::world_from_set(set->set);
        auto report =
            sim::run_simulation(sys->sys, sol->sol, set->set, world, cfg);
        *out = new robuc_report{std::move(report)};
        return ROBUC_OK;
    });
}

int robuc_report_read(const char* path, robuc_report** out) {
    if (int rc = require(path && out, "robuc_report_read")) return rc;
    return guarded([&] {
        *out = new robuc_report{sim::read_report_file(path)};
        return ROBUC_OK;
    });
}

int robuc_report_write(const char* path, const robuc_report* report) {
    if (int rc = require(path && report, "robuc_report_write")) return rc;
    return guarded([&] {
        sim::write_report_file(path, report->report);
        return ROBUC_OK;
    });
}

void robuc_report_free(robuc_report* report) { delete report; }

double robuc_report_metric(const robuc_report* report, const char* name) {
    if (!report || !name) return std::nan("");
    const sim::SimulationReport& r = report->report;
    const std::string key = name;
    if (key == "cost_avg") return r.cost_avg;
    if (key == "cost_std") return r.cost_std;
    if (key == "cost_cvar") return r.cost_cvar;
    if (key == "penalty_cost_avg") return r.penalty_cost_avg;
    if (key == "penalty_freq") return r.penalty_freq;
    if (key == "renewables_util") return r.renewables_util;
    if (key == "stored_avg") return r.stored_avg;
    if (key == "commitment_cost") return r.commitment_cost;
    if (key == "completed") return r.completed;
    if (key == "partial") return r.partial ? 1.0 : 0.0;
    return std::nan("");
}

int robuc_report_summary(const robuc_report* report, char* buf, size_t cap) {
    if (!report) return -1;
    const std::string text = sim::format_summary(report->report);
    if (buf) std::snprintf(buf, cap, "%s", text.c_str());
    return static_cast<int>(text.size());
}

}  // extern "C"
