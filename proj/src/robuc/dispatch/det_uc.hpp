// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "robuc/core/system.hpp"
#include "robuc/robust/cg.hpp"

namespace robuc::dispatch {

struct ReserveRequirement {
    Eigen::VectorXd down, up;  // MW per period, >= 0

    static ReserveRequirement zero(int T) {
        return {Eigen::VectorXd::Zero(T), Eigen::VectorXd::Zero(T)};
    }
};

/// R+-_t = gamma times the sample standard deviation, across trajectories,
/// of the total net load (total demand minus total available renewable).
ReserveRequirement reserve_rule(const core::PowerSystem& sys,
                                const std::vector<Eigen::MatrixXd>& trajectories,
                                double gamma);

/// Day-ahead baseline: unit commitment against the point forecast, with
/// per-generator reserve variables keeping headroom inside the commitment-
/// gated output range.  Returns a constant policy (slopes zero, intercepts =
/// the dispatch plan) so the real-time engines can consume it uniformly.
robust::UcSolution solve_deterministic_uc(const core::PowerSystem& sys,
                                          const Eigen::MatrixXd& forecast,
                                          const ReserveRequirement& reserves,
                                          double gap = 1e-4);

}  // namespace robuc::dispatch
