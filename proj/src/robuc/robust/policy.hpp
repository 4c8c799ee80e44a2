// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>

#include "robuc/core/system.hpp"

namespace robuc::robust {

/// Simplified affine dispatch policy: conventional and storage units respond
/// to the system-wide total available renewable power, renewable units to
/// their own availability with a shared per-period slope.
struct AffinePolicy {
    Eigen::MatrixXd w_gen, W_gen;  // generator x period
    Eigen::MatrixXd w_dis, W_dis;  // storage discharge
    Eigen::MatrixXd w_chg, W_chg;  // storage charge
    Eigen::MatrixXd w_ren;         // renewable x period
    Eigen::VectorXd W_ren;         // period (slope shared across units)

    static AffinePolicy zero(const core::PowerSystem& sys);

    /// Dispatch under a realized availability path (unit x period each).
    Eigen::MatrixXd gen_dispatch(const Eigen::MatrixXd& pbar) const;
    Eigen::MatrixXd discharge_dispatch(const Eigen::MatrixXd& pbar) const;
    Eigen::MatrixXd charge_dispatch(const Eigen::MatrixXd& pbar) const;
    Eigen::MatrixXd ren_dispatch(const Eigen::MatrixXd& pbar) const;

    /// Single-period evaluation given the total available power at t.
    double gen_at(int i, int t, double total) const {
        return w_gen(i, t) + W_gen(i, t) * total;
    }
    double discharge_at(int i, int t, double total) const {
        return w_dis(i, t) + W_dis(i, t) * total;
    }
    double charge_at(int i, int t, double total) const {
        return w_chg(i, t) + W_chg(i, t) * total;
    }
    double ren_at(int i, int t, double own) const {
        return w_ren(i, t) + W_ren(t) * own;
    }

    /// Total generation cost of the policy under a path (variable costs only).
    double dispatch_cost(const core::PowerSystem& sys, const Eigen::MatrixXd& pbar) const;
};

}  // namespace robuc::robust
