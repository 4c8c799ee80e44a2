// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

#include "robuc/core/system.hpp"
#include "robuc/robust/policy.hpp"
#include "robuc/uncertainty/dynamic_set.hpp"

namespace robuc::dispatch {

class DispatchError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Rolling state at real-time period t: implemented dispatch through t-1 and
/// revealed availability through t.
struct DispatchState {
    Eigen::MatrixXd gen_hist;    // generator x t
    Eigen::MatrixXd ren_hist;    // renewable x t (dispatched, not available)
    Eigen::MatrixXd dis_hist;    // storage x t
    Eigen::MatrixXd chg_hist;    // storage x t
    Eigen::MatrixXd avail_hist;  // renewable x (t + 1): availability through t
    int t = 0;
    int lookahead = 3;

    static DispatchState initial(const core::PowerSystem& sys, int lookahead = 3);

    /// Appends one period of implemented dispatch and advances t; the next
    /// period's availability must then be pushed via reveal().
    void record(const Eigen::VectorXd& gen, const Eigen::VectorXd& ren,
                const Eigen::VectorXd& dis, const Eigen::VectorXd& chg);
    void reveal(const Eigen::VectorXd& available);

    /// Throws std::invalid_argument if shapes or ranges are inconsistent.
    void validate(const core::PowerSystem& sys) const;

    /// Generator output at t-1 and stored energy entering t.
    Eigen::VectorXd prev_gen_output(const core::PowerSystem& sys) const;
    Eigen::VectorXd stored_energy(const core::PowerSystem& sys) const;
};

struct EdOptions {
    double penalty_price = 5000.0;  // $/MWh on balance and line violations
};

struct EdResult {
    // dispatch plan for periods [t, t + plan length - 1]; column 0 is the
    // decision to implement
    Eigen::MatrixXd gen, ren, dis, chg;
    double cost_t = 0.0;        // implemented-period dispatch cost ($)
    double penalty_t = 0.0;     // implemented-period penalty cost ($)
    double penalty_mw_t = 0.0;  // violation magnitude behind penalty_t (MW)
    double objective = 0.0;     // full LP objective over the plan
};

/// Look-ahead ED guided by the affine policy: deterministic dispatch rows at
/// t under realized availability, at later plan periods under the set's
/// conditional-mean forecast, robust ramping from t to t+1 against the
/// conditioned one-period set, and storage levels matched to the policy's.
EdResult policy_guided_laed(const core::PowerSystem& sys,
                            const core::CommitmentSchedule& schedule,
                            const robust::AffinePolicy& policy,
                            const uncertainty::DynamicUncertaintySet& set,
                            const DispatchState& state, const EdOptions& opts = {});

/// Single-period ED with the robust ramping rows only.
EdResult policy_enforcement_ed(const core::PowerSystem& sys,
                               const core::CommitmentSchedule& schedule,
                               const robust::AffinePolicy& policy,
                               const uncertainty::DynamicUncertaintySet& set,
                               const DispatchState& state,
                               const EdOptions& opts = {});

/// Plain look-ahead ED over the given forecast (full-horizon renewable x T
/// matrix; columns before t+1 are ignored), no robust or policy rows.
EdResult deterministic_laed(const core::PowerSystem& sys,
                            const core::CommitmentSchedule& schedule,
                            const DispatchState& state,
                            const Eigen::MatrixXd& forecast,
                            const EdOptions& opts = {});

}  // namespace robuc::dispatch
