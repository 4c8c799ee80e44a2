// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "robuc/uncertainty/estimation.hpp"

namespace robuc::uncertainty {

/// Draws N trajectories of length T from the fitted stochastic model:
/// u_t = sum_l A_l u_{t-l} + B_full w_t with w_t standard normal, mapped to
/// pbar = f + g .* u and clipped to [0, p_max].  Deterministic given seed.
/// f, g and p_max columns are cycled when T exceeds their horizon.
std::vector<ScenarioPath> simulate_paths(const VarEstimate& est,
                                         const Eigen::MatrixXd& p_max, int N, int T,
                                         std::uint64_t seed);

/// The noise-free recursion from the initial lags: the model's forecast.
Eigen::MatrixXd forecast_path(const VarEstimate& est, const Eigen::MatrixXd& p_max, int T);

/// Interprets a set's recursion as a stochastic model with standard-normal
/// factor innovations, for drawing evaluation trajectories when only the
/// set file is available.
VarEstimate world_from_set(const DynamicUncertaintySet& set);

/// Conditional-mean forecast of a set's periods [from_t .. T-1] given
/// realized availability for periods [0 .. from_t-1]: lags are inverted from
/// the history and the recursion continues with zero innovations, clipped to
/// the set bounds.  Returns unit x (T - from_t).
Eigen::MatrixXd conditional_mean(const DynamicUncertaintySet& set,
                                 const Eigen::MatrixXd& realized, int from_t);

}  // namespace robuc::uncertainty
