// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <vector>

#include "robuc/uncertainty/dynamic_set.hpp"

namespace robuc::uncertainty {

struct SeasonalFit {
    Eigen::MatrixXd f, g;  // unit x horizon, tiled from the hour-of-day fit
    bool g_floored = false;
};

/// Hour-of-day sample mean and standard deviation pooled over all paths,
/// tiled to `horizon` columns.  g is floored at 1e-6 * max(f, 1 MW).
SeasonalFit estimate_seasonal(const std::vector<Eigen::MatrixXd>& history,
                              int period_cycle, int horizon);

struct VarEstimate {
    Eigen::MatrixXd f, g;               // seasonal components
    std::vector<Eigen::MatrixXd> A;     // fitted lag matrices
    Eigen::MatrixXd Sigma;              // residual covariance
    Eigen::MatrixXd B_full;             // Cholesky factor, B_full B_full^T = Sigma
    Eigen::MatrixXd V;                  // eigenvectors of Sigma (descending)
    Eigen::VectorXd lambda;             // eigenvalues (descending)
    int n_v = 0;
    Eigen::MatrixXd B_truncated;        // leading n_v columns of V Lambda^(1/2)
    double captured_variance = 1.0;
    bool regularized = false;
    bool g_floored = false;
};

/// Multivariate least squares of u_t on its L lags (no intercept).  The
/// residual covariance uses denominator max(1, #obs - L*dim).  Rank-deficient
/// normal equations get a 1e-8 ridge and set `regularized`.
void fit_var(const Eigen::MatrixXd& u_history, int L, std::vector<Eigen::MatrixXd>* A,
             Eigen::MatrixXd* Sigma, bool* regularized = nullptr);

/// Leading-eigenvalue factor loading: B = first n_v columns of V Lambda^(1/2).
/// Returns the captured variance fraction sum(kept lambda) / trace(Sigma).
std::pair<Eigen::MatrixXd, double> reduce_dimension(const Eigen::MatrixXd& Sigma, int n_v);

/// Full pipeline: seasonal fit on the history, VAR on the standardized
/// residuals u = (pbar - f) / g, Cholesky + PCA factor loading.
VarEstimate estimate_model(const std::vector<Eigen::MatrixXd>& history, int period_cycle,
                           int horizon, int L, int n_v);

/// The uncertainty set induced by an estimate.
DynamicUncertaintySet make_set(const VarEstimate& est, double gamma, double rho,
                               NormKind norm, const Eigen::MatrixXd& p_max);

}  // namespace robuc::uncertainty
