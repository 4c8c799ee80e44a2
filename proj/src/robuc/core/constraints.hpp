// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "robuc/core/system.hpp"
#include "robuc/lp/model.hpp"

namespace robuc::core {

/// Variable indices of the commitment binaries inside some MathProgram,
/// generator-major: v[i][t].
struct CommitmentVars {
    std::vector<std::vector<int>> on, start, shut;
};

CommitmentVars add_commitment_vars(lp::MathProgram& prog, const PowerSystem& sys);

/// Linear block whose {0,1} points are exactly the feasible commitment
/// schedules: transition identity, start/shut exclusivity, min-up/min-down
/// windows and the initial-state carry-over.
std::vector<lp::LinRow> build_commitment_constraints(const PowerSystem& sys,
                                                     const CommitmentVars& v);

/// Adds the commitment cost (no-load, start-up, shut-down) to the objective.
void add_commitment_cost(lp::MathProgram& prog, const PowerSystem& sys,
                         const CommitmentVars& v);

/// Period-t dispatch variable indices.
struct DispatchVars {
    std::vector<int> gen;        // p^g_it
    std::vector<int> ren;        // p^r_it
    std::vector<int> discharge;  // p^{s+}_it
    std::vector<int> charge;     // p^{s-}_it
};

DispatchVars add_dispatch_vars(lp::MathProgram& prog, const PowerSystem& sys,
                               int t);

/// State entering period t.
struct DispatchHistory {
    Eigen::VectorXd prev_gen_output;   // generator output at t-1 (MW)
    Eigen::VectorXd stored_energy;     // storage level at end of t-1 (MWh)
};

DispatchHistory initial_history(const PowerSystem& sys);

/// Commitment values at period t (constants when the schedule is fixed).
struct CommitmentAt {
    Eigen::VectorXd on, start, shut, on_prev;
};

CommitmentAt commitment_at(const PowerSystem& sys, const CommitmentSchedule& sch,
                           int t);

/// The deterministic dispatch feasibility block Omega_t: generator limits
/// gated by the commitment, ramping against the previous output, renewable
/// availability, storage power and cumulative energy bounds, line flow
/// limits via shift factors, and system energy balance.
std::vector<lp::LinRow> dispatch_feasible_set(const PowerSystem& sys,
                                              const CommitmentAt& commit, int t,
                                              const DispatchHistory& history,
                                              const Eigen::VectorXd& available_t,
                                              const DispatchVars& v);

double dispatch_cost(const PowerSystem& sys,
                     const Eigen::MatrixXd& gen_output_by_period);

/// Flow on line l for given nodal injections (used as a test oracle hook and
/// by the simulator's logs).
double line_flow(const PowerSystem& sys, int l, const Eigen::VectorXd& gen,
                 const Eigen::VectorXd& ren, const Eigen::VectorXd& discharge,
                 const Eigen::VectorXd& charge, int t);

}  // namespace robuc::core
