// SPDX-License-Identifier: Apache-2.0
#include "robuc/robust/policy.hpp"

#include "robuc/core/constraints.hpp"

namespace robuc::robust {

AffinePolicy AffinePolicy::zero(const core::PowerSystem& sys) {
    AffinePolicy p;
    const int T = sys.horizon;
    p.w_gen = Eigen::MatrixXd::Zero(sys.num_gen(), T);
    p.W_gen = Eigen::MatrixXd::Zero(sys.num_gen(), T);
    p.w_dis = Eigen::MatrixXd::Zero(sys.num_sto(), T);
    p.W_dis = Eigen::MatrixXd::Zero(sys.num_sto(), T);
    p.w_chg = Eigen::MatrixXd::Zero(sys.num_sto(), T);
    p.W_chg = Eigen::MatrixXd::Zero(sys.num_sto(), T);
    p.w_ren = Eigen::MatrixXd::Zero(sys.num_ren(), T);
    p.W_ren = Eigen::VectorXd::Zero(T);
    return p;
}

namespace {
Eigen::MatrixXd affine_total(const Eigen::MatrixXd& w, const Eigen::MatrixXd& W,
                             const Eigen::MatrixXd& pbar) {
    Eigen::RowVectorXd total = pbar.colwise().sum();
    return w + W * total.asDiagonal();
}
}  // namespace

Eigen::MatrixXd AffinePolicy::gen_dispatch(const Eigen::MatrixXd& pbar) const {
    return affine_total(w_gen, W_gen, pbar);
}

Eigen::MatrixXd AffinePolicy::discharge_dispatch(const Eigen::MatrixXd& pbar) const {
    return affine_total(w_dis, W_dis, pbar);
}

Eigen::MatrixXd AffinePolicy::charge_dispatch(const Eigen::MatrixXd& pbar) const {
    return affine_total(w_chg, W_chg, pbar);
}

Eigen::MatrixXd AffinePolicy::ren_dispatch(const Eigen::MatrixXd& pbar) const {
    return w_ren + pbar * W_ren.asDiagonal();
}

double AffinePolicy::dispatch_cost(const core::PowerSystem& sys,
                                   const Eigen::MatrixXd& pbar) const {
    return core::dispatch_cost(sys, gen_dispatch(pbar));
}

}  // namespace robuc::robust
