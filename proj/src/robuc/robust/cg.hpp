// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "robuc/core/system.hpp"
#include "robuc/lp/backend.hpp"
#include "robuc/robust/master.hpp"
#include "robuc/robust/policy.hpp"
#include "robuc/uncertainty/dynamic_set.hpp"

namespace robuc::robust {

struct RobustUcOptions {
    double gap = 0.01;               // relative MIP gap of the master solves
    double eps_viol = 1e-5;          // violation tolerance, scaled per row
                                     // by max(1, |rhs|)
    double eps_loose = -1.0;         // parking slack; < 0 means 100 x eps_viol
    bool screening = true;           // interval bounds before separation LPs
    bool oa = true;                  // dual outer approximation of the
                                     // inter-temporal rows (off = pure CG)
    bool one_tree = true;            // separate inside a single MILP tree via
                                     // lazy cuts when the backend supports it
    int max_iterations = 60;
    double time_limit = 0.0;         // seconds, 0 = none
    int threads = 1;                 // parallel separation LPs
    lp::BackendOptions backend;
};

struct SolveStats {
    int iterations = 0;
    long lps_solved = 0;
    long lps_screened = 0;
    int cuts_added = 0;
    double wall_time = 0.0;
    bool certified = false;
    double mip_gap = 0.0;
};

struct UcSolution {
    core::CommitmentSchedule schedule;
    AffinePolicy policy;
    double worst_case_cost = 0.0;  // z, worst-case dispatch cost ($)
    double commitment_cost = 0.0;  // no-load + start-up + shut-down ($)
    double objective = 0.0;        // commitment_cost + worst_case_cost
    SolveStats stats;
    std::vector<std::string> warnings;
};

class RobustUcError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Commitment schedule plus affine dispatch policy minimizing commitment
/// cost + worst-case dispatch cost over the uncertainty set.  Generation and
/// balance limits are reformulated exactly, inter-temporal couplings through
/// a dualized outer approximation, transmission limits by constraint
/// generation with screening and loose-row parking.  The returned solution
/// is certified by a final separation pass over every robust row.
UcSolution solve_robust_uc(const core::PowerSystem& sys,
                           const uncertainty::DynamicUncertaintySet& set,
                           const RobustUcOptions& opts = {});

/// Reference path for small instances: every robust row replaced by its
/// exact LP dual over the explicit set polyhedron, solved as one MILP.
UcSolution solve_robust_uc_dualized(const core::PowerSystem& sys,
                                    const uncertainty::DynamicUncertaintySet& set,
                                    const RobustUcOptions& opts = {});

}  // namespace robuc::robust
