// SPDX-License-Identifier: Apache-2.0
#include "robuc/uncertainty/estimation.hpp"

#include <cmath>
#include <stdexcept>

namespace robuc::uncertainty {

namespace {
double g_floor(double f) { return 1e-6 * std::max(f, 1.0); }
}  // namespace

SeasonalFit estimate_seasonal(const std::vector<Eigen::MatrixXd>& history,
                              int period_cycle, int horizon) {
    if (history.empty()) throw std::invalid_argument("no history supplied");
    if (period_cycle < 1) throw std::invalid_argument("period cycle must be positive");
    const int n = static_cast<int>(history[0].rows());

    SeasonalFit fit;
    Eigen::MatrixXd fh(n, period_cycle), gh(n, period_cycle);
    for (int h = 0; h < period_cycle; ++h) {
        for (int i = 0; i < n; ++i) {
            double sum = 0.0, sumsq = 0.0;
            int count = 0;
            for (const Eigen::MatrixXd& path : history) {
                if (path.rows() != n) throw std::invalid_argument("ragged history");
                for (int t = h; t < path.cols(); t += period_cycle) {
                    sum += path(i, t);
                    sumsq += path(i, t) * path(i, t);
                    ++count;
                }
            }
            if (count < 2)
                throw std::invalid_argument(
                    "insufficient history: need at least two full cycles per unit");
            const double mean = sum / count;
            double var = (sumsq - count * mean * mean) / (count - 1);
            if (var < 0) var = 0;  // numerically negative
            fh(i, h) = mean;
            double sd = std::sqrt(var);
            if (sd < g_floor(mean)) {
                sd = g_floor(mean);
                fit.g_floored = true;
            }
            gh(i, h) = sd;
        }
    }
    fit.f.resize(n, horizon);
    fit.g.resize(n, horizon);
    for (int t = 0; t < horizon; ++t) {
        fit.f.col(t) = fh.col(t % period_cycle);
        fit.g.col(t) = gh.col(t % period_cycle);
    }
    return fit;
}

namespace {

// accumulates Y Z^T and Z Z^T plus the raw pairs for the residual pass
struct Regression {
    Eigen::MatrixXd Y, Z;  // n x m and (L*n) x m
    int m = 0;
};

void collect_pairs(const Eigen::MatrixXd& u, int L, Regression* reg) {
    const int n = static_cast<int>(u.rows());
    const int nobs = static_cast<int>(u.cols());
    for (int t = L; t < nobs; ++t) {
        reg->Y.col(reg->m) = u.col(t);
        for (int l = 1; l <= L; ++l) reg->Z.block((l - 1) * n, reg->m, n, 1) = u.col(t - l);
        ++reg->m;
    }
}

void fit_from_pairs(const Regression& reg, int n, int L, std::vector<Eigen::MatrixXd>* A,
                    Eigen::MatrixXd* Sigma, bool* regularized) {
    const int m = reg.m;
    if (regularized) *regularized = false;
    A->clear();
    Eigen::MatrixXd resid;
    if (L == 0) {
        resid = reg.Y.leftCols(m);
    } else {
        const Eigen::MatrixXd Z = reg.Z.leftCols(m);
        const Eigen::MatrixXd Y = reg.Y.leftCols(m);
        Eigen::MatrixXd ZZt = Z * Z.transpose();
        Eigen::FullPivLU<Eigen::MatrixXd> lu(ZZt);
        if (lu.rank() < ZZt.rows()) {
            ZZt += 1e-8 * Eigen::MatrixXd::Identity(ZZt.rows(), ZZt.cols());
            if (regularized) *regularized = true;
            lu.compute(ZZt);
        }
        // M minimizes ||Y - M Z||_F: M = Y Z^T (Z Z^T)^-1
        Eigen::MatrixXd M = lu.solve(Z * Y.transpose()).transpose();
        for (int l = 0; l < L; ++l) A->push_back(M.block(0, l * n, n, n));
        resid = Y - M * Z;
    }
    const int denom = std::max(1, m - L * n);
    *Sigma = (resid * resid.transpose()) / denom;
    *Sigma = 0.5 * (*Sigma + Sigma->transpose());  // enforce exact symmetry
}

}  // namespace

void fit_var(const Eigen::MatrixXd& u_history, int L, std::vector<Eigen::MatrixXd>* A,
             Eigen::MatrixXd* Sigma, bool* regularized) {
    const int n = static_cast<int>(u_history.rows());
    const int nobs = static_cast<int>(u_history.cols());
    if (L < 0) throw std::invalid_argument("lag must be nonnegative");
    if (nobs - L < std::max(1, L * n))
        throw std::invalid_argument("history too short for the requested lag order");
    Regression reg;
    reg.Y.resize(n, nobs);
    reg.Z.resize(std::max(1, L * n), nobs);
    collect_pairs(u_history, L, &reg);
    fit_from_pairs(reg, n, L, A, Sigma, regularized);
}

std::pair<Eigen::MatrixXd, double> reduce_dimension(const Eigen::MatrixXd& Sigma, int n_v) {
    const int n = static_cast<int>(Sigma.rows());
    if (n_v < 1 || n_v > n) throw std::invalid_argument("factor count out of range");
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(Sigma);
    if (eig.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");

    // Eigen returns ascending order; we keep the largest n_v.
    Eigen::MatrixXd B(n, n_v);
    double kept = 0.0;
    for (int k = 0; k < n_v; ++k) {
        const int idx = n - 1 - k;
        const double lam = std::max(0.0, eig.eigenvalues()[idx]);
        B.col(k) = eig.eigenvectors().col(idx) * std::sqrt(lam);
        kept += lam;
    }
    const double trace = std::max(0.0, Sigma.trace());
    return {B, trace > 0 ? kept / trace : 1.0};
}

VarEstimate estimate_model(const std::vector<Eigen::MatrixXd>& history, int period_cycle,
                           int horizon, int L, int n_v) {
    SeasonalFit seasonal = estimate_seasonal(history, period_cycle, horizon);
    const int n = static_cast<int>(seasonal.f.rows());

    VarEstimate est;
    est.f = seasonal.f;
    est.g = seasonal.g;
    est.g_floored = seasonal.g_floored;

    // standardized residual paths, regression pairs never straddle a path
    // boundary
    int total = 0;
    for (const Eigen::MatrixXd& path : history) total += static_cast<int>(path.cols());
    Regression reg;
    reg.Y.resize(n, total);
    reg.Z.resize(std::max(1, L * n), total);
    for (const Eigen::MatrixXd& path : history) {
        const int Tp = static_cast<int>(path.cols());
        Eigen::MatrixXd u(n, Tp);
        for (int t = 0; t < Tp; ++t)
            for (int i = 0; i < n; ++i) {
                const int h = t % period_cycle;
                u(i, t) = (path(i, t) - est.f(i, h)) / est.g(i, h);
            }
        collect_pairs(u, L, &reg);
    }
    if (reg.m - 0 < std::max(1, L * n))
        throw std::invalid_argument("history too short for the requested lag order");
    fit_from_pairs(reg, n, L, &est.A, &est.Sigma, &est.regularized);

    // full-rank factor: Cholesky when positive definite, else the symmetric
    // square root from the eigendecomposition
    Eigen::LLT<Eigen::MatrixXd> llt(est.Sigma);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(est.Sigma);
    est.V.resize(n, n);
    est.lambda.resize(n);
    for (int k = 0; k < n; ++k) {
        est.V.col(k) = eig.eigenvectors().col(n - 1 - k);
        est.lambda[k] = std::max(0.0, eig.eigenvalues()[n - 1 - k]);
    }
    if (llt.info() == Eigen::Success) {
        est.B_full = llt.matrixL();
    } else {
        est.B_full = est.V * est.lambda.cwiseSqrt().asDiagonal();
    }

    est.n_v = n_v;
    std::tie(est.B_truncated, est.captured_variance) = reduce_dimension(est.Sigma, n_v);
    return est;
}

DynamicUncertaintySet make_set(const VarEstimate& est, double gamma, double rho,
                               NormKind norm, const Eigen::MatrixXd& p_max) {
    DynamicUncertaintySet set;
    set.f = est.f;
    set.g = est.g;
    set.A = est.A;
    set.B = est.B_truncated;
    set.gamma = gamma;
    set.rho = rho;
    set.p_max = p_max;
    set.norm_kind = norm;
    if (!est.A.empty())
        set.u_init = Eigen::MatrixXd::Zero(est.f.rows(), static_cast<int>(est.A.size()));
    set.validate();
    return set;
}

}  // namespace robuc::uncertainty
