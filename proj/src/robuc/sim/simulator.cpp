// SPDX-License-Identifier: Apache-2.0
#include "robuc/sim/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace robuc::sim {

std::string engine_name(EdEngine e) {
    switch (e) {
        case EdEngine::PolicyGuided: return "policy-guided";
        case EdEngine::PolicyEnforcement: return "policy-enforcement";
        case EdEngine::Deterministic: return "deterministic";
    }
    return "?";
}

EdEngine engine_from_name(const std::string& name) {
    if (name == "policy-guided") return EdEngine::PolicyGuided;
    if (name == "policy-enforcement") return EdEngine::PolicyEnforcement;
    if (name == "deterministic") return EdEngine::Deterministic;
    throw std::invalid_argument("unknown dispatch engine '" + name + "'");
}

double upper_tail_mean(std::vector<double> values, double frac) {
    if (values.empty()) return 0.0;
    const int k = static_cast<int>(
        std::ceil(frac * static_cast<double>(values.size())));
    std::sort(values.begin(), values.end(), std::greater<double>());
    double sum = 0.0;
    for (int i = 0; i < k; ++i) sum += values[i];
    return sum / k;
}

namespace {

constexpr double kPenaltyEps = 1e-7;  // $ threshold counting a period as penalized

TrajectoryLog simulate_one(const core::PowerSystem& sys,
                           const robust::UcSolution& uc,
                           const uncertainty::DynamicUncertaintySet& set,
                           const Eigen::MatrixXd& avail,
                           const SimulationConfig& cfg) {
    const int T = sys.horizon;
    TrajectoryLog log;
    log.avail = avail;
    log.gen.setZero(sys.num_gen(), T);
    log.ren.setZero(sys.num_ren(), T);
    log.dis.setZero(sys.num_sto(), T);
    log.chg.setZero(sys.num_sto(), T);
    log.level.setZero(sys.num_sto(), T);
    log.cost.setZero(T);
    log.penalty.setZero(T);

    dispatch::EdOptions opts;
    opts.penalty_price = cfg.penalty_price;
    auto state = dispatch::DispatchState::initial(sys, cfg.lookahead);
    for (int t = 0; t < T; ++t) {
        state.reveal(avail.col(t));
        dispatch::EdResult res;
        try {
            switch (cfg.engine) {
                case EdEngine::PolicyGuided:
                    res = dispatch::policy_guided_laed(sys, uc.schedule, uc.policy,
                                                       set, state, opts);
                    break;
                case EdEngine::PolicyEnforcement:
                    res = dispatch::policy_enforcement_ed(sys, uc.schedule, uc.policy,
                                                          set, state, opts);
                    break;
                case EdEngine::Deterministic: {
                    Eigen::MatrixXd fc = Eigen::MatrixXd::Zero(sys.num_ren(), T);
                    fc.col(t) = avail.col(t);
                    if (t + 1 < T)
                        fc.rightCols(T - t - 1) =
                            uncertainty::conditional_mean(set, state.avail_hist, t + 1);
                    res = dispatch::deterministic_laed(sys, uc.schedule, state, fc,
                                                       opts);
                    break;
                }
            }
        } catch (const dispatch::DispatchError& e) {
            log.failed = true;
            log.failed_at = t;
            log.error = e.what();
            return log;
        }
        log.gen.col(t) = res.gen.col(0);
        log.ren.col(t) = res.ren.col(0);
        log.dis.col(t) = res.dis.col(0);
        log.chg.col(t) = res.chg.col(0);
        log.cost(t) = res.cost_t;
        log.penalty(t) = res.penalty_t;
        state.record(res.gen.col(0), res.ren.col(0), res.dis.col(0), res.chg.col(0));
        log.level.col(t) = state.stored_energy(sys);
    }
    return log;
}

}  // namespace

void compute_metrics(const core::PowerSystem& sys, SimulationReport* report) {
    report->total_cost.clear();
    report->completed = 0;
    report->partial = false;
    double penalty_sum = 0.0;
    int penalized_periods = 0, total_periods = 0;
    double ren_used = 0.0, ren_avail = 0.0, level_sum = 0.0;
    long level_count = 0;
    for (const auto& log : report->logs) {
        if (log.failed) {
            report->partial = true;
            continue;
        }
        ++report->completed;
        report->total_cost.push_back(report->commitment_cost + log.cost.sum() +
                                     log.penalty.sum());
        penalty_sum += log.penalty.sum();
        total_periods += static_cast<int>(log.penalty.size());
        for (int t = 0; t < log.penalty.size(); ++t)
            if (log.penalty(t) > kPenaltyEps) ++penalized_periods;
        ren_used += log.ren.sum();
        ren_avail += log.avail.sum();
        level_sum += log.level.sum();
        level_count += log.level.size();
    }
    const int n = report->completed;
    if (n == 0) {
        report->cost_avg = report->cost_std = report->cost_cvar = 0.0;
        report->penalty_cost_avg = report->penalty_freq = 0.0;
        report->renewables_util = report->stored_avg = 0.0;
        return;
    }
    double mean = 0.0;
    for (double c : report->total_cost) mean += c;
    mean /= n;
    double var = 0.0;
    for (double c : report->total_cost) var += (c - mean) * (c - mean);
    report->cost_avg = mean;
    report->cost_std = n > 1 ? std::sqrt(var / (n - 1)) : 0.0;
    report->cost_cvar = upper_tail_mean(report->total_cost, 0.10);
    report->penalty_cost_avg = penalty_sum / n;
    report->penalty_freq =
        total_periods > 0 ? static_cast<double>(penalized_periods) / total_periods
                          : 0.0;
    report->renewables_util = ren_avail > 0.0 ? ren_used / ren_avail : 1.0;
    report->stored_avg = level_count > 0 ? level_sum / level_count : 0.0;
    (void)sys;
}

SimulationReport run_simulation(const core::PowerSystem& sys,
                                const robust::UcSolution& uc,
                                const uncertainty::DynamicUncertaintySet& set,
                                const std::vector<Eigen::MatrixXd>& trajectories,
                                const SimulationConfig& config) {
    sys.validate();
    set.validate();
    if (trajectories.empty())
        throw std::invalid_argument("run_simulation: no trajectories given");
    for (const auto& traj : trajectories)
        if (traj.rows() != sys.num_ren() || traj.cols() < sys.horizon)
            throw std::invalid_argument(
                "trajectory must be renewable x horizon availability");
    std::string why;
    if (!uc.schedule.consistent_with(sys, &why))
        throw std::invalid_argument("inconsistent commitment schedule: " + why);

    SimulationReport report;
    report.commitment_cost = uc.commitment_cost;
    report.logs.resize(trajectories.size());
    const int nthreads =
        std::max(1, std::min<int>(config.threads,
                                  static_cast<int>(trajectories.size())));
    auto worker = [&](int first, int step) {
        for (std::size_t k = first; k < trajectories.size(); k += step)
            report.logs[k] = simulate_one(sys, uc, set,
                                          trajectories[k].leftCols(sys.horizon),
                                          config);
    };
    if (nthreads == 1) {
        worker(0, 1);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < nthreads; ++w) pool.emplace_back(worker, w, nthreads);
        for (auto& th : pool) th.join();
    }
    compute_metrics(sys, &report);
    return report;
}

SimulationReport run_simulation(const core::PowerSystem& sys,
                                const robust::UcSolution& uc,
                                const uncertainty::DynamicUncertaintySet& set,
                                const uncertainty::VarEstimate& world,
                                const SimulationConfig& config) {
    if (config.trajectories < 1)
        throw std::invalid_argument("need at least one trajectory");
    const auto paths = uncertainty::simulate_paths(
        world, set.p_max, config.trajectories, sys.horizon, config.seed);
    std::vector<Eigen::MatrixXd> avail;
    avail.reserve(paths.size());
    for (const auto& p : paths) avail.push_back(p.pbar);
    return run_simulation(sys, uc, set, avail, config);
}

}  // namespace robuc::sim
