// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "robuc/dispatch/ed.hpp"
#include "robuc/robust/cg.hpp"
#include "robuc/uncertainty/simulate.hpp"

namespace robuc::sim {

enum class EdEngine { PolicyGuided, PolicyEnforcement, Deterministic };

std::string engine_name(EdEngine e);
EdEngine engine_from_name(const std::string& name);

struct SimulationConfig {
    int trajectories = 100;
    std::uint64_t seed = 1;
    EdEngine engine = EdEngine::PolicyGuided;
    int lookahead = 3;          // periods of forecast beyond t in the ED plan
    double penalty_price = 5000.0;  // $/MWh on balance and line slack
    int threads = 1;
};

/// Full per-period record of one simulated day; everything the metrics need
/// can be recomputed from these columns alone.
struct TrajectoryLog {
    Eigen::MatrixXd avail;   // renewable x T, revealed availability
    Eigen::MatrixXd gen;     // generator x T, implemented output
    Eigen::MatrixXd ren;     // renewable x T, used renewable power
    Eigen::MatrixXd dis;     // storage x T
    Eigen::MatrixXd chg;     // storage x T
    Eigen::MatrixXd level;   // storage x T, stored energy at end of period
    Eigen::VectorXd cost;    // dispatch cost per period ($)
    Eigen::VectorXd penalty; // penalty cost per period ($)
    bool failed = false;     // ED infeasible mid-run; columns past failed_at are zero
    int failed_at = -1;
    std::string error;
};

struct SimulationReport {
    std::vector<TrajectoryLog> logs;
    std::vector<double> total_cost;  // per completed trajectory ($)
    double commitment_cost = 0.0;
    double cost_avg = 0.0;
    double cost_std = 0.0;
    double cost_cvar = 0.0;          // mean of the ceil(0.1 N) largest totals
    double penalty_cost_avg = 0.0;
    double penalty_freq = 0.0;       // positive-penalty share of trajectory-periods
    double renewables_util = 0.0;    // sum used / sum available
    double stored_avg = 0.0;         // MWh, mean over trajectories/periods/units
    bool partial = false;            // at least one trajectory aborted
    int completed = 0;
};

/// Mean of the ceil(frac * n) largest values.
double upper_tail_mean(std::vector<double> values, double frac);

/// Recomputes every aggregate metric from the logs (and the commitment
/// cost); run_simulation's report equals this by construction, and tests
/// replay serialized logs through it.
void compute_metrics(const core::PowerSystem& sys, SimulationReport* report);

/// Rolling-horizon evaluation of a UC solution against given availability
/// trajectories: at each period the realized availability is revealed, the
/// configured ED engine is solved, and only its first-period block is
/// implemented.  Deterministic for fixed inputs; trajectories may run in
/// parallel (periods within one are sequential).
SimulationReport run_simulation(const core::PowerSystem& sys,
                                const robust::UcSolution& uc,
                                const uncertainty::DynamicUncertaintySet& set,
                                const std::vector<Eigen::MatrixXd>& trajectories,
                                const SimulationConfig& config);

/// Same, drawing `config.trajectories` paths from the fitted model with
/// `config.seed`.
SimulationReport run_simulation(const core::PowerSystem& sys,
                                const robust::UcSolution& uc,
                                const uncertainty::DynamicUncertaintySet& set,
                                const uncertainty::VarEstimate& world,
                                const SimulationConfig& config);

}  // namespace robuc::sim
