// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "robuc/core/constraints.hpp"
#include "robuc/core/system.hpp"
#include "robuc/lp/model.hpp"
#include "robuc/robust/policy.hpp"
#include "robuc/uncertainty/dynamic_set.hpp"

namespace robuc::robust {

/// Variable indices of the affine policy coefficients inside a MathProgram,
/// mirroring AffinePolicy's shape.
struct PolicyVars {
    Eigen::MatrixXi w_gen, W_gen;
    Eigen::MatrixXi w_dis, W_dis;
    Eigen::MatrixXi w_chg, W_chg;
    Eigen::MatrixXi w_ren;
    Eigen::VectorXi W_ren;
};

PolicyVars add_policy_vars(lp::MathProgram& prog, const core::PowerSystem& sys);

AffinePolicy extract_policy(const PolicyVars& pv, const std::vector<double>& x);

core::CommitmentSchedule extract_schedule(const core::CommitmentVars& cv,
                                          const std::vector<double>& x);

/// One scenario-dependent term of a robust row: coefficient `coef` on master
/// variable `var`, multiplied by the realized availability at period t —
/// the unit's own value, or the system total when unit < 0.
struct ScenarioTerm {
    int var = -1;
    double coef = 0.0;
    int t = 0;
    int unit = -1;
};

/// A constraint that must hold for every member of the uncertainty set:
///   fixed' x  +  sum_st st.coef * x[st.var] * value(pbar, st)  <=  rhs.
/// Enforced by instantiating it at generated scenarios.
struct RobustRow {
    std::string name;
    std::vector<lp::LinTerm> fixed;
    std::vector<ScenarioTerm> scenario;
    double rhs = 0.0;
    bool transmission = false;

    // Constraint-generation state.
    std::vector<Eigen::MatrixXd> pool;  // scenario vertices already cut on
    bool parked = false;
    double last_slack = 0.0;
};

/// Availability coefficients a(j, t) of the row's scenario part at a master
/// solution (unit x period).
Eigen::MatrixXd scenario_coefficients(const RobustRow& row,
                                      const std::vector<double>& x, int n, int T);

double fixed_value(const RobustRow& row, const std::vector<double>& x);

/// The master row obtained by fixing the scenario at pbar.
lp::LinRow instantiate(const RobustRow& row, const Eigen::MatrixXd& pbar);

/// Sign-inspection upper bound of a'pbar over the per-unit interval boxes;
/// certifies feasibility without an LP whenever the bound is <= b.
double interval_upper_bound(const Eigen::MatrixXd& a,
                            const uncertainty::UnitExtrema& boxes);

/// A robust constraint coupling consecutive periods through the total
/// available power: fixed' x + max over the set of sum_tau a_tau * total_tau
/// <= rhs, where each a_tau is linear in master variables.
struct IntertemporalRow {
    std::string name;
    int t1 = 0, t2 = 0;                       // coupled span, inclusive
    std::vector<lp::LinTerm> fixed;
    std::vector<std::vector<lp::LinTerm>> a;  // a[tau - t1]
    double rhs = 0.0;
};

/// Dualized outer approximation of an inter-temporal row: multipliers for
/// the per-period total bounds and the one-step change bounds, a stationarity
/// row per period and the budget row.  Sound (conservative) replacement.
void add_oa_dual_block(lp::MathProgram& prog, const IntertemporalRow& row,
                       const uncertainty::TotalExtrema& ex);

/// Exact scenario-indexed form of the same row, for constraint generation.
RobustRow to_robust_row(const IntertemporalRow& row);

/// Exact monolithic reformulation of one robust row via LP duality over the
/// explicit set polyhedron (built with bounds as rows, so every variable is
/// free and the dual needs equality columns only).
void add_dualized_robust_row(lp::MathProgram& prog, const RobustRow& row,
                             const uncertainty::SetPolyhedron& poly);

/// Generator/storage limits at the total-power extrema and renewable limits
/// at the per-unit extrema; exact replacements for the robust limit rows.
std::vector<lp::LinRow> generation_limit_rows(const core::PowerSystem& sys,
                                              const core::CommitmentVars& cv,
                                              const PolicyVars& pv,
                                              const uncertainty::TotalExtrema& ex,
                                              const uncertainty::UnitExtrema& boxes);

/// Whether the robust energy balance collapses to the two coefficient
/// equalities (requires a full-dimensional set: every g > 0 and gamma > 0).
bool balance_is_reformulable(const uncertainty::DynamicUncertaintySet& set);

std::vector<lp::LinRow> balance_rows(const core::PowerSystem& sys,
                                     const PolicyVars& pv);

/// Fallback when the set is degenerate: balance as two robust rows per period.
std::vector<RobustRow> balance_robust_rows(const core::PowerSystem& sys,
                                           const PolicyVars& pv);

/// Line-limit rows under the policy, one robust row per line, period and
/// direction; these are the rows handled by constraint generation.
std::vector<RobustRow> transmission_robust_rows(const core::PowerSystem& sys,
                                                const PolicyVars& pv);

/// The inter-temporal robust rows: worst-case dispatch cost epigraph (defines
/// z over the whole horizon), generator ramping pairs, and storage energy
/// bounds (both signs, cumulative span).
std::vector<IntertemporalRow> intertemporal_rows(const core::PowerSystem& sys,
                                                 const core::CommitmentVars& cv,
                                                 const PolicyVars& pv, int z_var);

struct MasterProblem {
    lp::MathProgram prog;
    core::CommitmentVars commit;
    PolicyVars pol;
    int z = -1;                          // worst-case dispatch cost epigraph
    std::vector<RobustRow> robust_rows;  // rows left to constraint generation
    bool balance_via_cg = false;
    std::vector<std::string> warnings;
};

struct MasterOptions {
    bool oa = true;  // dualized outer approximation of inter-temporal rows;
                     // when off they join the constraint-generation pool
};

MasterProblem build_master(const core::PowerSystem& sys,
                           const uncertainty::DynamicUncertaintySet& set,
                           const uncertainty::TotalExtrema& ex,
                           const uncertainty::UnitExtrema& boxes,
                           const MasterOptions& opts = {});

}  // namespace robuc::robust
