// SPDX-License-Identifier: Apache-2.0
#include "robuc/uncertainty/simulate.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace robuc::uncertainty {

namespace {

Eigen::MatrixXd run_recursion(const std::vector<Eigen::MatrixXd>& A,
                              const Eigen::MatrixXd& innovations) {
    const int n = static_cast<int>(innovations.rows());
    const int T = static_cast<int>(innovations.cols());
    const int L = static_cast<int>(A.size());
    Eigen::MatrixXd u(n, T);
    for (int t = 0; t < T; ++t) {
        Eigen::VectorXd ut = innovations.col(t);
        for (int l = 1; l <= std::min(L, t); ++l) ut += A[l - 1] * u.col(t - l);
        u.col(t) = ut;
    }
    return u;
}

Eigen::MatrixXd map_and_clip(const Eigen::MatrixXd& u, const Eigen::MatrixXd& f,
                             const Eigen::MatrixXd& g, const Eigen::MatrixXd& p_max) {
    const int n = static_cast<int>(u.rows());
    const int T = static_cast<int>(u.cols());
    Eigen::MatrixXd p(n, T);
    for (int t = 0; t < T; ++t) {
        const int hf = t % static_cast<int>(f.cols());
        const int hb = t % static_cast<int>(p_max.cols());
        for (int i = 0; i < n; ++i)
            p(i, t) = std::clamp(f(i, hf) + g(i, hf) * u(i, t), 0.0, p_max(i, hb));
    }
    return p;
}

}  // namespace

std::vector<ScenarioPath> simulate_paths(const VarEstimate& est,
                                         const Eigen::MatrixXd& p_max, int N, int T,
                                         std::uint64_t seed) {
    const int n = static_cast<int>(est.f.rows());
    if (p_max.rows() != n) throw std::invalid_argument("bound matrix dimension mismatch");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal(0.0, 1.0);

    std::vector<ScenarioPath> paths;
    paths.reserve(N);
    for (int k = 0; k < N; ++k) {
        Eigen::MatrixXd eps(n, T);
        for (int t = 0; t < T; ++t) {
            Eigen::VectorXd w(est.B_full.cols());
            for (int j = 0; j < w.size(); ++j) w[j] = normal(rng);
            eps.col(t) = est.B_full * w;
        }
        Eigen::MatrixXd u = run_recursion(est.A, eps);
        ScenarioPath path;
        path.pbar = map_and_clip(u, est.f, est.g, p_max);
        path.u = u;
        paths.push_back(std::move(path));
    }
    return paths;
}

Eigen::MatrixXd forecast_path(const VarEstimate& est, const Eigen::MatrixXd& p_max, int T) {
    const int n = static_cast<int>(est.f.rows());
    Eigen::MatrixXd u = run_recursion(est.A, Eigen::MatrixXd::Zero(n, T));
    return map_and_clip(u, est.f, est.g, p_max);
}

VarEstimate world_from_set(const DynamicUncertaintySet& set) {
    VarEstimate est;
    est.f = set.f;
    est.g = set.g;
    est.A = set.A;
    est.B_full = set.B;
    est.Sigma = set.B * set.B.transpose();
    est.n_v = set.num_factors();
    est.B_truncated = set.B;
    return est;
}

Eigen::MatrixXd conditional_mean(const DynamicUncertaintySet& set,
                                 const Eigen::MatrixXd& realized, int from_t) {
    set.validate();
    const int n = set.num_units();
    const int T = set.horizon();
    if (from_t < 0 || from_t > T) throw std::out_of_range("forecast start out of range");
    if (realized.rows() != n || realized.cols() < from_t)
        throw std::invalid_argument("realized history must cover periods before from_t");

    const int L = set.lag();
    Eigen::MatrixXd u(n, T);
    for (int tau = 0; tau < from_t; ++tau)
        for (int i = 0; i < n; ++i) {
            const double gi = set.g(i, tau);
            const double p = std::clamp(realized(i, tau), 0.0, set.p_max(i, tau));
            u(i, tau) = gi > 0 ? (p - set.f(i, tau)) / gi : 0.0;
        }
    Eigen::MatrixXd out(n, T - from_t);
    for (int t = from_t; t < T; ++t) {
        Eigen::VectorXd ut = Eigen::VectorXd::Zero(n);
        for (int l = 1; l <= L; ++l) {
            const int tau = t - l;
            if (tau >= 0)
                ut += set.A[l - 1] * u.col(tau);
            else if (-tau - 1 < set.u_init.cols())
                ut += set.A[l - 1] * set.u_init.col(-tau - 1);
        }
        u.col(t) = ut;
        for (int i = 0; i < n; ++i)
            out(i, t - from_t) =
                std::clamp(set.f(i, t) + set.g(i, t) * ut[i], 0.0, set.p_max(i, t));
    }
    return out;
}

}  // namespace robuc::uncertainty
