// SPDX-License-Identifier: Apache-2.0
#include "robuc/robust/cg.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <set>
#include <thread>

#include "robuc/uncertainty/simulate.hpp"

namespace robuc::robust {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<long long> pool_key(const Eigen::MatrixXd& pbar) {
    std::vector<long long> key(pbar.size());
    for (int i = 0; i < pbar.size(); ++i)
        key[i] = std::llround(pbar.data()[i] * 1e9);
    return key;
}

double viol_tol(const RobustRow& row, double eps) {
    return eps * std::max(1.0, std::abs(row.rhs));
}

struct Separator {
    std::vector<RobustRow>& rows;
    std::vector<std::set<std::vector<long long>>> pool_keys;
    const uncertainty::DynamicUncertaintySet& set;
    const uncertainty::UnitExtrema& boxes;
    const RobustUcOptions& opts;
    SolveStats& stats;
    int n, T;

    Separator(std::vector<RobustRow>& r,
              const uncertainty::DynamicUncertaintySet& s,
              const uncertainty::UnitExtrema& b, const RobustUcOptions& o,
              SolveStats& st)
        : rows(r), pool_keys(r.size()), set(s), boxes(b), opts(o), stats(st),
          n(s.num_units()), T(s.horizon()) {}

    bool add_to_pool(int k, const Eigen::MatrixXd& pbar) {
        return pool_keys[k].insert(pool_key(pbar)).second;
    }

    // Checks + separates the given rows at a candidate solution.  Screening
    // uses the per-unit interval bound; rows far from binding are parked for
    // later iterations when parking is allowed.
    std::vector<lp::LinRow> run(const std::vector<double>& x, bool skip_parked,
                                bool allow_parking, int* violations) {
        struct Outcome {
            bool screened = false, solved = false, violated = false;
            double slack = 0.0;
            Eigen::MatrixXd vertex;
        };
        std::vector<int> todo;
        for (int k = 0; k < static_cast<int>(rows.size()); ++k)
            if (!(skip_parked && rows[k].parked)) todo.push_back(k);
        std::vector<Outcome> out(todo.size());

        auto work = [&](int j) {
            const int k = todo[j];
            const RobustRow& row = rows[k];
            const Eigen::MatrixXd a = scenario_coefficients(row, x, n, T);
            const double b = row.rhs - fixed_value(row, x);
            if (opts.screening && interval_upper_bound(a, boxes) <= b) {
                out[j].screened = true;
                out[j].slack = lp::kInf;
                return;
            }
            auto [value, path] = uncertainty::maximize_linear(set, a);
            out[j].solved = true;
            out[j].slack = b - value;
            if (value > b + viol_tol(row, opts.eps_viol)) {
                out[j].violated = true;
                out[j].vertex = path.pbar;
            }
        };
        if (opts.threads > 1 && todo.size() > 1) {
            std::atomic<int> next{0};
            auto loop = [&] {
                for (int j = next++; j < static_cast<int>(todo.size()); j = next++)
                    work(j);
            };
            std::vector<std::thread> pool;
            for (int t = 0; t < opts.threads; ++t) pool.emplace_back(loop);
            for (auto& th : pool) th.join();
        } else {
            for (int j = 0; j < static_cast<int>(todo.size()); ++j) work(j);
        }

        const double loose =
            opts.eps_loose < 0.0 ? 100.0 * opts.eps_viol : opts.eps_loose;
        std::vector<lp::LinRow> cuts;
        int nviol = 0;
        for (int j = 0; j < static_cast<int>(todo.size()); ++j) {
            RobustRow& row = rows[todo[j]];
            if (out[j].screened) stats.lps_screened++;
            if (out[j].solved) stats.lps_solved++;
            row.last_slack = out[j].slack;
            if (out[j].violated) {
                row.parked = false;
                ++nviol;
                if (add_to_pool(todo[j], out[j].vertex))
                    row.pool.push_back(out[j].vertex);
                // Emit the cut even for a pooled vertex: lazy cuts live only
                // in the search tree that produced them, so the vertex may be
                // known while the row is still missing from the master.
                cuts.push_back(instantiate(row, out[j].vertex));
            } else if (allow_parking && out[j].slack > loose) {
                row.parked = true;
            }
        }
        if (violations) *violations = nviol;
        return cuts;
    }
};

double commitment_cost_of(const core::PowerSystem& sys,
                          const core::CommitmentSchedule& s) {
    double cost = 0.0;
    for (int i = 0; i < sys.num_gen(); ++i) {
        const core::Generator& g = sys.generators[i];
        for (int t = 0; t < sys.horizon; ++t)
            cost += g.no_load_cost * s.on(i, t) + g.startup_cost * s.start(i, t) +
                    g.shutdown_cost * s.shut(i, t);
    }
    return cost;
}

// Which stage makes an infeasible master infeasible: the commitment block on
// its own, or the robust dispatch rows layered on top of it.
[[noreturn]] void diagnose_infeasible(const core::PowerSystem& sys,
                                      const lp::SolverBackend& backend) {
    lp::MathProgram commit_only;
    core::CommitmentVars cv = core::add_commitment_vars(commit_only, sys);
    for (auto& row : core::build_commitment_constraints(sys, cv))
        commit_only.add_row(std::move(row));
    if (backend.solve(commit_only).status == lp::SolveStatus::Infeasible)
        throw RobustUcError("master infeasible: commitment constraints");
    throw RobustUcError("master infeasible: robust dispatch rows");
}

UcSolution extract_solution(const core::PowerSystem& sys, const MasterProblem& m,
                            const lp::SolveResult& res) {
    UcSolution sol;
    sol.schedule = extract_schedule(m.commit, res.x);
    sol.policy = extract_policy(m.pol, res.x);
    sol.worst_case_cost = res.x[m.z];
    sol.commitment_cost = commitment_cost_of(sys, sol.schedule);
    sol.objective = sol.commitment_cost + sol.worst_case_cost;
    sol.warnings = m.warnings;
    return sol;
}

}  // namespace

UcSolution solve_robust_uc(const core::PowerSystem& sys,
                           const uncertainty::DynamicUncertaintySet& set,
                           const RobustUcOptions& opts) {
    const auto t0 = Clock::now();
    sys.validate();
    set.validate();
    if (set.num_units() != sys.num_ren())
        throw RobustUcError("uncertainty set does not match renewable fleet");

    const uncertainty::TotalExtrema ex = uncertainty::set_extrema(set);
    const uncertainty::UnitExtrema boxes = uncertainty::unit_extrema(set);
    MasterOptions mopts;
    mopts.oa = opts.oa;
    MasterProblem m = build_master(sys, set, ex, boxes, mopts);

    lp::BackendOptions bo = opts.backend;
    bo.gap = opts.gap;
    bo.threads = opts.threads;
    const lp::SolverBackend backend(bo);

    SolveStats stats;
    Separator sep(m.robust_rows, set, boxes, opts, stats);

    // Seed every pool with the model forecast so z is bounded from the start.
    const Eigen::MatrixXd forecast =
        uncertainty::conditional_mean(set, Eigen::MatrixXd(set.num_units(), 0), 0);
    for (int k = 0; k < static_cast<int>(m.robust_rows.size()); ++k) {
        sep.add_to_pool(k, forecast);
        m.robust_rows[k].pool.push_back(forecast);
        m.prog.add_row(instantiate(m.robust_rows[k], forecast));
    }

    const bool one_tree =
        opts.one_tree && backend.capability().supports_lazy_constraints;
    lp::SolveResult res;
    bool finished = false;
    while (stats.iterations < opts.max_iterations) {
        ++stats.iterations;
        if (opts.time_limit > 0.0 && seconds_since(t0) > opts.time_limit) break;

        lp::LazyCallback lazy;
        std::vector<lp::LinRow> tree_cuts;
        if (one_tree)
            lazy = [&](const std::vector<double>& x) {
                auto cuts = sep.run(x, /*skip_parked=*/true,
                                    /*allow_parking=*/true, nullptr);
                tree_cuts.insert(tree_cuts.end(), cuts.begin(), cuts.end());
                return cuts;
            };
        res = backend.solve(m.prog, lazy);
        // Lazy cuts existed only inside that tree; keep them for later
        // iterations so separation does not rediscover the same vertices.
        stats.cuts_added += static_cast<int>(tree_cuts.size());
        for (auto& cut : tree_cuts) m.prog.add_row(std::move(cut));
        if (res.status == lp::SolveStatus::Infeasible)
            diagnose_infeasible(sys, backend);
        if (res.status == lp::SolveStatus::Unbounded)
            throw RobustUcError("master unbounded");

        // Separate on the active rows first; once they are clean, certify
        // against every robust row, parked or screened ones included.
        int violations = 0;
        auto cuts = sep.run(res.x, /*skip_parked=*/true, /*allow_parking=*/true,
                            &violations);
        if (violations == 0) {
            cuts = sep.run(res.x, /*skip_parked=*/false, /*allow_parking=*/false,
                           &violations);
            if (violations == 0) {
                finished = true;
                break;
            }
        }
        stats.cuts_added += static_cast<int>(cuts.size());
        for (auto& cut : cuts) m.prog.add_row(std::move(cut));
    }

    if (res.x.empty())
        throw RobustUcError("no incumbent within the iteration/time limit");
    UcSolution sol = extract_solution(sys, m, res);
    stats.certified = finished;
    if (!finished)
        sol.warnings.push_back("iteration or time limit reached; "
                               "solution not certified robust-feasible");
    if (res.objective != 0.0)
        stats.mip_gap = std::abs(res.objective - res.best_bound) /
                        std::max(1.0, std::abs(res.objective));
    stats.wall_time = seconds_since(t0);
    sol.stats = stats;
    return sol;
}

UcSolution solve_robust_uc_dualized(const core::PowerSystem& sys,
                                    const uncertainty::DynamicUncertaintySet& set,
                                    const RobustUcOptions& opts) {
    const auto t0 = Clock::now();
    sys.validate();
    set.validate();
    const uncertainty::TotalExtrema ex = uncertainty::set_extrema(set);
    const uncertainty::UnitExtrema boxes = uncertainty::unit_extrema(set);
    MasterOptions mopts;
    mopts.oa = false;  // every inter-temporal row gets its exact dual instead
    MasterProblem m = build_master(sys, set, ex, boxes, mopts);

    const uncertainty::SetPolyhedron poly =
        uncertainty::build_set_polyhedron(set, /*bounds_as_rows=*/true);
    for (const RobustRow& row : m.robust_rows)
        add_dualized_robust_row(m.prog, row, poly);

    lp::BackendOptions bo = opts.backend;
    bo.gap = opts.gap;
    const lp::SolverBackend backend(bo);
    lp::SolveResult res = backend.solve(m.prog);
    if (res.status == lp::SolveStatus::Infeasible)
        diagnose_infeasible(sys, backend);
    if (res.status != lp::SolveStatus::Optimal && res.x.empty())
        throw RobustUcError("dualized master did not solve");

    UcSolution sol = extract_solution(sys, m, res);
    sol.stats.iterations = 1;
    sol.stats.certified = true;
    sol.stats.wall_time = seconds_since(t0);
    return sol;
}

}  // namespace robuc::robust
