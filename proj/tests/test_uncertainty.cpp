// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <vector>

#include "robuc/core/system_io.hpp"
#include "robuc/uncertainty/dynamic_set.hpp"
#include "robuc/uncertainty/estimation.hpp"
#include "robuc/uncertainty/set_io.hpp"
#include "robuc/uncertainty/simulate.hpp"

using namespace robuc::uncertainty;

namespace {

// ---- independent oracles -------------------------------------------------

// u recursion replay for a given innovation path (ground truth for the set's
// dynamics; written without reference to the production recursion code).
Eigen::MatrixXd replay_u(const DynamicUncertaintySet& set, const Eigen::MatrixXd& v) {
    const int n = set.num_units();
    const int T = set.horizon();
    Eigen::MatrixXd u(n, T);
    for (int t = 0; t < T; ++t) {
        Eigen::VectorXd ut = set.B * v.col(t);
        for (int l = 1; l <= set.lag(); ++l) {
            if (t - l >= 0)
                ut += set.A[l - 1] * u.col(t - l);
            else if (l - t - 1 < set.u_init.cols())
                ut += set.A[l - 1] * set.u_init.col(l - t - 1);
        }
        u.col(t) = ut;
    }
    return u;
}

double objective_of_v(const DynamicUncertaintySet& set, const Eigen::MatrixXd& w,
                      const Eigen::MatrixXd& v, bool clip_to_bounds) {
    Eigen::MatrixXd u = replay_u(set, v);
    double val = 0.0;
    for (int t = 0; t < set.horizon(); ++t)
        for (int i = 0; i < set.num_units(); ++i) {
            double p = set.f(i, t) + set.g(i, t) * u(i, t);
            if (clip_to_bounds) p = std::clamp(p, 0.0, set.p_max(i, t));
            val += w(i, t) * p;
        }
    return val;
}

// Vertex oracle for linf norm with rho = 1 and inactive pbar bounds: the
// maximum sits at a sign pattern v in {-gamma, +gamma}^(nv*T).
double vertex_oracle_linf(const DynamicUncertaintySet& set, const Eigen::MatrixXd& w) {
    const int nv = set.num_factors();
    const int T = set.horizon();
    const int dim = nv * T;
    REQUIRE(dim <= 16);
    double best = -1e300;
    for (int mask = 0; mask < (1 << dim); ++mask) {
        Eigen::MatrixXd v(nv, T);
        for (int b = 0; b < dim; ++b)
            v(b % nv, b / nv) = ((mask >> b) & 1) ? set.gamma : -set.gamma;
        best = std::max(best, objective_of_v(set, w, v, false));
    }
    return best;
}

// Greedy dual-norm budget oracle: valid for any polyhedral cap norm when the
// pbar box is inactive.  The objective is linear in v, so the value of one
// unit of s_t equals the dual norm of that period's coefficient, and the
// budget is allocated greedily.
double dual_norm(NormKind kind, Eigen::VectorXd c) {
    const int nv = static_cast<int>(c.size());
    c = c.cwiseAbs();
    switch (kind) {
        case NormKind::L1: return c.maxCoeff();
        case NormKind::Linf: return c.sum();
        case NormKind::L1Linf: {
            // max c.v over {||v||_1 <= sqrt(nv), ||v||_inf <= 1}
            std::sort(c.data(), c.data() + nv, std::greater<double>());
            double budget = std::sqrt(static_cast<double>(nv));
            double val = 0.0;
            for (int k = 0; k < nv && budget > 0; ++k) {
                const double take = std::min(1.0, budget);
                val += take * c[k];
                budget -= take;
            }
            return val;
        }
        default: throw std::logic_error("not polyhedral");
    }
}

double greedy_budget_oracle(const DynamicUncertaintySet& set, const Eigen::MatrixXd& w) {
    const int n = set.num_units();
    const int nv = set.num_factors();
    const int T = set.horizon();
    // sensitivity of u_t to v_tau: M[t][tau], built from the recursion
    std::vector<std::vector<Eigen::MatrixXd>> M(T);
    for (int t = 0; t < T; ++t) {
        M[t].resize(t + 1);
        for (int tau = 0; tau <= t; ++tau) {
            Eigen::MatrixXd m =
                tau == t ? set.B : Eigen::MatrixXd::Zero(n, nv).eval();
            for (int l = 1; l <= set.lag() && t - l >= tau; ++l)
                m += set.A[l - 1] * M[t - l][tau];
            M[t][tau] = m;
        }
    }
    // coefficient of v_tau in the objective, plus the v-independent constant
    double constant = 0.0;
    std::vector<double> rate(T);
    for (int tau = 0; tau < T; ++tau) {
        Eigen::VectorXd c = Eigen::VectorXd::Zero(nv);
        for (int t = tau; t < T; ++t)
            c += M[t][tau].transpose() * (w.col(t).cwiseProduct(set.g.col(t)));
        rate[tau] = dual_norm(set.norm_kind, c);
    }
    Eigen::MatrixXd u0 = replay_u(set, Eigen::MatrixXd::Zero(nv, T));
    for (int t = 0; t < T; ++t)
        constant +=
            w.col(t).dot(set.f.col(t) + set.g.col(t).cwiseProduct(u0.col(t)));

    std::vector<int> order(T);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return rate[a] > rate[b]; });
    double budget = set.rho * set.gamma * T;
    double val = constant;
    for (int tau : order) {
        const double s = std::min(set.gamma, budget);
        if (rate[tau] <= 0) break;
        val += s * rate[tau];
        budget -= s;
    }
    return val;
}

DynamicUncertaintySet small_dynamic_set(NormKind norm, double rho = 1.0,
                                        double bound = 1e4) {
    // 2 units, 2 periods, L=1, A=0.5 I, B=I
    DynamicUncertaintySet set;
    set.f = Eigen::MatrixXd::Constant(2, 2, 50.0);
    set.g.resize(2, 2);
    set.g << 4.0, 6.0, 5.0, 3.0;
    set.A = {0.5 * Eigen::MatrixXd::Identity(2, 2)};
    set.B = Eigen::MatrixXd::Identity(2, 2);
    set.gamma = 1.0;
    set.rho = rho;
    set.p_max = Eigen::MatrixXd::Constant(2, 2, bound);
    set.norm_kind = norm;
    set.u_init = Eigen::MatrixXd::Zero(2, 1);
    set.validate();
    return set;
}

}  // namespace

TEST_CASE("static box: maximum is f + gamma g") {
    Eigen::MatrixXd f(1, 1), g(1, 1), bound(1, 1);
    f << 10.0;
    g << 2.0;
    bound << 20.0;
    auto set = DynamicUncertaintySet::make_static(f, g, 1.0, bound);
    Eigen::MatrixXd w = Eigen::MatrixXd::Ones(1, 1);
    auto [val, path] = maximize_linear(set, w);
    CHECK(val == doctest::Approx(12.0));
    CHECK(path.pbar(0, 0) == doctest::Approx(12.0));
    auto [neg, path2] = maximize_linear(set, -w);
    CHECK(neg == doctest::Approx(-8.0));
    // tight bound clips the box
    bound << 11.0;
    auto clipped = DynamicUncertaintySet::make_static(f, g, 1.0, bound);
    CHECK(maximize_linear(clipped, w).first == doctest::Approx(11.0));
}

TEST_CASE("l2 sets are rejected by the LP oracle") {
    auto set = small_dynamic_set(NormKind::L2);
    CHECK_THROWS_AS(maximize_linear(set, Eigen::MatrixXd::Ones(2, 2)),
                    std::invalid_argument);
}

TEST_CASE("maximize_linear matches the sign-pattern vertex oracle (linf)") {
    auto set = small_dynamic_set(NormKind::Linf);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> ud(-1.0, 1.0);
    for (int rep = 0; rep < 25; ++rep) {
        Eigen::MatrixXd w(2, 2);
        for (int i = 0; i < 2; ++i)
            for (int t = 0; t < 2; ++t) w(i, t) = ud(rng);
        const double lp = maximize_linear(set, w).first;
        const double oracle = vertex_oracle_linf(set, w);
        CHECK(lp == doctest::Approx(oracle).epsilon(1e-6));
    }
}

TEST_CASE("maximize_linear matches the greedy budget oracle (l1linf, l1)") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> ud(-1.0, 1.0);
    for (NormKind norm : {NormKind::L1Linf, NormKind::L1, NormKind::Linf}) {
        for (double rho : {1.0, 0.6, 0.3}) {
            auto set = small_dynamic_set(norm, rho);
            for (int rep = 0; rep < 15; ++rep) {
                Eigen::MatrixXd w(2, 2);
                for (int i = 0; i < 2; ++i)
                    for (int t = 0; t < 2; ++t) w(i, t) = ud(rng);
                const double lp = maximize_linear(set, w).first;
                const double oracle = greedy_budget_oracle(set, w);
                CHECK(lp == doctest::Approx(oracle).epsilon(1e-6));
            }
        }
    }
}

TEST_CASE("argmax replays through the recursion and lies in the set") {
    for (NormKind norm : {NormKind::Linf, NormKind::L1Linf}) {
        auto set = small_dynamic_set(norm, 0.7, 56.0);  // active bounds too
        Eigen::MatrixXd w(2, 2);
        w << 1.0, -0.5, 0.25, 2.0;
        auto [val, path] = maximize_linear(set, w);
        std::string why;
        CHECK_MESSAGE(set_contains(set, path.pbar, 1e-7, &why), why);
        REQUIRE(path.u);
        REQUIRE(path.v);
        Eigen::MatrixXd u_replayed = replay_u(set, *path.v);
        CHECK((u_replayed - *path.u).lpNorm<Eigen::Infinity>() < 1e-7);
    }
}

TEST_CASE("set_extrema: static box totals and ordering invariants") {
    Eigen::MatrixXd f(2, 3), g(2, 3), bound(2, 3);
    f << 10, 12, 8, 20, 18, 25;
    g << 2, 3, 1, 4, 2, 5;
    bound.setConstant(23.0);
    auto set = DynamicUncertaintySet::make_static(f, g, 1.5, bound);
    auto ex = set_extrema(set);
    for (int t = 0; t < 3; ++t) {
        double lo = 0.0, hi = 0.0;
        for (int i = 0; i < 2; ++i) {
            lo += std::max(0.0, f(i, t) - 1.5 * g(i, t));
            hi += std::min(23.0, f(i, t) + 1.5 * g(i, t));
        }
        CHECK(ex.total_min[t] == doctest::Approx(lo));
        CHECK(ex.total_max[t] == doctest::Approx(hi));
        CHECK(ex.total_min[t] <= ex.total_max[t] + 1e-9);
    }
    for (int t = 0; t < 2; ++t) CHECK(ex.delta_max[t] >= ex.delta_min[t] - 1e-9);

    // dynamic case against the vertex oracle
    auto dyn = small_dynamic_set(NormKind::Linf);
    auto dex = set_extrema(dyn);
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(2, 2);
    w.col(1).setOnes();
    w.col(0) = -Eigen::VectorXd::Ones(2);
    CHECK(dex.delta_max[0] == doctest::Approx(vertex_oracle_linf(dyn, w)).epsilon(1e-6));
}

TEST_CASE("unit extrema bound every vertex the LP oracle returns") {
    auto set = small_dynamic_set(NormKind::Linf, 1.0, 60.0);
    auto box = unit_extrema(set);
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> ud(-1.0, 1.0);
    for (int rep = 0; rep < 10; ++rep) {
        Eigen::MatrixXd w(2, 2);
        for (int i = 0; i < 2; ++i)
            for (int t = 0; t < 2; ++t) w(i, t) = ud(rng);
        auto [val, path] = maximize_linear(set, w);
        for (int i = 0; i < 2; ++i)
            for (int t = 0; t < 2; ++t) {
                CHECK(path.pbar(i, t) >= box.lo(i, t) - 1e-7);
                CHECK(path.pbar(i, t) <= box.hi(i, t) + 1e-7);
            }
    }
}

TEST_CASE("monotonicity in gamma") {
    auto prev_lo = Eigen::VectorXd();
    auto prev_hi = Eigen::VectorXd();
    for (double gamma : {0.25, 0.5, 1.0, 2.0}) {
        auto set = small_dynamic_set(NormKind::L1Linf, 0.8);
        set.gamma = gamma;
        auto ex = set_extrema(set);
        if (prev_lo.size() > 0) {
            for (int t = 0; t < 2; ++t) {
                CHECK(ex.total_max[t] >= prev_hi[t] - 1e-8);
                CHECK(ex.total_min[t] <= prev_lo[t] + 1e-8);
            }
        }
        prev_lo = ex.total_min;
        prev_hi = ex.total_max;
    }
}

TEST_CASE("conditioning with L=0 reproduces the one-period slice") {
    Eigen::MatrixXd f(2, 3), g(2, 3), bound(2, 3);
    f << 10, 12, 8, 20, 18, 25;
    g << 2, 3, 1, 4, 2, 5;
    bound.setConstant(40.0);
    auto set = DynamicUncertaintySet::make_static(f, g, 1.0, bound);
    Eigen::MatrixXd realized = Eigen::MatrixXd::Constant(2, 2, 15.0);
    auto cond = condition_on_history(set, realized, 2);
    CHECK(cond.horizon() == 1);
    CHECK(cond.f.col(0).isApprox(f.col(2)));
    CHECK(cond.g.col(0).isApprox(g.col(2)));
    CHECK(cond.lag() == 0);
}

TEST_CASE("conditioning with L=1 is interval arithmetic in one dimension") {
    DynamicUncertaintySet set;
    set.f = Eigen::MatrixXd::Constant(1, 3, 10.0);
    set.g = Eigen::MatrixXd::Constant(1, 3, 2.0);
    set.A = {Eigen::MatrixXd::Constant(1, 1, 0.5)};
    set.B = Eigen::MatrixXd::Identity(1, 1);
    set.gamma = 1.0;
    set.rho = 1.0;
    set.p_max = Eigen::MatrixXd::Constant(1, 3, 100.0);
    set.norm_kind = NormKind::Linf;
    set.u_init = Eigen::MatrixXd::Zero(1, 1);

    // realized u_1 = 2  =>  u_2 in [0.5*2 - 1, 0.5*2 + 1] = [0, 2]
    Eigen::MatrixXd realized(1, 1);
    realized << 10.0 + 2.0 * 2.0;
    auto cond = condition_on_history(set, realized, 1);
    auto [hi, p1] = maximize_linear(cond, Eigen::MatrixXd::Ones(1, 1));
    auto [lo_neg, p2] = maximize_linear(cond, -Eigen::MatrixXd::Ones(1, 1));
    CHECK(hi == doctest::Approx(10.0 + 2.0 * 2.0));   // f + 2g
    CHECK(-lo_neg == doctest::Approx(10.0 + 0.0));    // f + 0g

    // inconsistent history with g = 0
    set.g.setZero();
    CHECK_THROWS_AS(condition_on_history(set, realized, 1), std::invalid_argument);
}

TEST_CASE("multi-unit conditioned extrema match the sign-pattern oracle") {
    auto set = small_dynamic_set(NormKind::Linf);
    Eigen::MatrixXd realized(2, 1);
    realized << 57.0, 42.0;  // u_1 = (7/4, -8/5)
    auto cond = condition_on_history(set, realized, 1);
    REQUIRE(cond.horizon() == 1);
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> ud(-1.0, 1.0);
    for (int rep = 0; rep < 10; ++rep) {
        Eigen::MatrixXd w(2, 1);
        w << ud(rng), ud(rng);
        CHECK(maximize_linear(cond, w).first ==
              doctest::Approx(vertex_oracle_linf(cond, w)).epsilon(1e-6));
    }
}

TEST_CASE("conditioning clips out-of-bound history and flags it") {
    auto set = small_dynamic_set(NormKind::Linf, 1.0, 55.0);
    Eigen::MatrixXd realized(2, 1);
    realized << 70.0, 50.0;  // first unit above the 55 MW cap
    bool clipped = false;
    auto cond = condition_on_history(set, realized, 1, &clipped);
    CHECK(clipped);
    Eigen::MatrixXd ok(2, 1);
    ok << 54.0, 50.0;
    condition_on_history(set, ok, 1, &clipped);
    CHECK_FALSE(clipped);
}

// ---- estimation ------------------------------------------------------------

TEST_CASE("seasonal fit: constant history gives the mean and the floor") {
    std::vector<Eigen::MatrixXd> hist = {Eigen::MatrixXd::Constant(1, 48, 5.0)};
    auto fit = estimate_seasonal(hist, 24, 24);
    CHECK(fit.f(0, 7) == doctest::Approx(5.0));
    CHECK(fit.g(0, 7) == doctest::Approx(1e-6 * 5.0));
    CHECK(fit.g_floored);
}

TEST_CASE("seasonal fit: two-day {4,6} gives mean 5 and std sqrt(2)") {
    Eigen::MatrixXd days(1, 48);
    for (int t = 0; t < 24; ++t) {
        days(0, t) = 4.0;
        days(0, 24 + t) = 6.0;
    }
    auto fit = estimate_seasonal({days}, 24, 24);
    CHECK(fit.f(0, 11) == doctest::Approx(5.0));
    CHECK(fit.g(0, 11) == doctest::Approx(std::sqrt(2.0)));
    CHECK_THROWS_AS(estimate_seasonal({Eigen::MatrixXd::Constant(1, 24, 5.0)}, 24, 24),
                    std::invalid_argument);
}

TEST_CASE("seasonal fit recovers known parameters from synthetic data") {
    const int cycle = 24, days = 200;
    std::mt19937_64 rng(17);
    std::normal_distribution<double> noise(0.0, 1.0);
    Eigen::VectorXd f_true(cycle), g_true(cycle);
    for (int h = 0; h < cycle; ++h) {
        f_true[h] = 40.0 + 15.0 * std::sin(2 * M_PI * h / cycle);
        g_true[h] = 3.0 + std::cos(2 * M_PI * h / cycle);
    }
    Eigen::MatrixXd hist(1, cycle * days);
    for (int t = 0; t < hist.cols(); ++t)
        hist(0, t) = f_true[t % cycle] + g_true[t % cycle] * noise(rng);
    auto fit = estimate_seasonal({hist}, cycle, cycle);
    for (int h = 0; h < cycle; ++h)
        CHECK(std::abs(fit.f(0, h) - f_true[h]) < 0.05 * f_true[h]);
}

TEST_CASE("fit_var recovers an AR(1) coefficient") {
    std::mt19937_64 rng(23);
    std::normal_distribution<double> noise(0.0, 1.0);
    const int n_samples = 10000;
    Eigen::MatrixXd u(1, n_samples);
    u(0, 0) = 0.0;
    for (int t = 1; t < n_samples; ++t) u(0, t) = 0.5 * u(0, t - 1) + noise(rng);

    std::vector<Eigen::MatrixXd> A;
    Eigen::MatrixXd Sigma;
    fit_var(u, 1, &A, &Sigma);
    CHECK(A[0](0, 0) > 0.45);
    CHECK(A[0](0, 0) < 0.55);
    CHECK(Sigma(0, 0) == doctest::Approx(1.0).epsilon(0.05));

    // white noise: coefficient near zero
    for (int t = 0; t < n_samples; ++t) u(0, t) = noise(rng);
    fit_var(u, 1, &A, &Sigma);
    CHECK(std::abs(A[0](0, 0)) <= 3.0 / std::sqrt(static_cast<double>(n_samples)));

    // noiseless decay: exact recovery
    for (int t = 0; t < 100; ++t) u(0, t) = std::pow(0.9, t);
    std::vector<Eigen::MatrixXd> A2;
    fit_var(u.leftCols(100), 1, &A2, &Sigma);
    CHECK(A2[0](0, 0) == doctest::Approx(0.9).epsilon(1e-10));
    CHECK(std::abs(Sigma(0, 0)) < 1e-10);
}

TEST_CASE("fit_var flags rank-deficient regressors") {
    // two identical units make Z Z^T singular
    std::mt19937_64 rng(29);
    std::normal_distribution<double> noise(0.0, 1.0);
    Eigen::MatrixXd u(2, 500);
    for (int t = 0; t < 500; ++t) {
        u(0, t) = noise(rng);
        u(1, t) = u(0, t);
    }
    std::vector<Eigen::MatrixXd> A;
    Eigen::MatrixXd Sigma;
    bool regularized = false;
    fit_var(u, 1, &A, &Sigma, &regularized);
    CHECK(regularized);
    CHECK_THROWS_AS(fit_var(Eigen::MatrixXd::Zero(2, 3), 2, &A, &Sigma),
                    std::invalid_argument);
}

TEST_CASE("reduce_dimension") {
    auto [B_id, cap_id] = reduce_dimension(Eigen::MatrixXd::Identity(2, 2), 2);
    CHECK(cap_id == doctest::Approx(1.0));
    CHECK((B_id * B_id.transpose() - Eigen::MatrixXd::Identity(2, 2)).norm() < 1e-10);

    Eigen::MatrixXd D = Eigen::Vector2d(4.0, 1.0).asDiagonal();
    auto [B1, cap1] = reduce_dimension(D, 1);
    CHECK(std::abs(B1(0, 0)) == doctest::Approx(2.0));
    CHECK(B1(1, 0) == doctest::Approx(0.0));
    CHECK(cap1 == doctest::Approx(0.8));

    // random PSD, full rank reconstruction + monotone captured fraction
    std::mt19937_64 rng(31);
    std::normal_distribution<double> noise(0.0, 1.0);
    Eigen::MatrixXd R(4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) R(i, j) = noise(rng);
    Eigen::MatrixXd S = R * R.transpose();
    auto [B4, cap4] = reduce_dimension(S, 4);
    CHECK((B4 * B4.transpose() - S).norm() < 1e-8);
    double prev = 0.0;
    for (int k = 1; k <= 4; ++k) {
        auto [B, cap] = reduce_dimension(S, k);
        CHECK(cap >= prev - 1e-12);
        prev = cap;
    }
    CHECK_THROWS_AS(reduce_dimension(S, 0), std::invalid_argument);
    CHECK_THROWS_AS(reduce_dimension(S, 5), std::invalid_argument);
}

TEST_CASE("estimate_model pipeline invariants") {
    std::mt19937_64 rng(37);
    std::normal_distribution<double> noise(0.0, 1.0);
    const int cycle = 6, T_hist = 600;
    Eigen::MatrixXd hist(2, T_hist);
    Eigen::Vector2d u = Eigen::Vector2d::Zero();
    for (int t = 0; t < T_hist; ++t) {
        Eigen::Vector2d eps(noise(rng), 0.5 * noise(rng));
        u = 0.4 * u + eps;
        hist(0, t) = 30.0 + 5.0 * (t % cycle) + 2.0 * u[0];
        hist(1, t) = 50.0 - 3.0 * (t % cycle) + 4.0 * u[1];
    }
    auto est = estimate_model({hist}, cycle, cycle, 1, 2);
    CHECK((est.B_full * est.B_full.transpose() - est.Sigma).norm() < 1e-8);
    CHECK((est.B_truncated * est.B_truncated.transpose() - est.Sigma).norm() < 1e-8);
    CHECK(est.captured_variance == doctest::Approx(1.0));
    auto set = make_set(est, 1.0, 0.8, NormKind::L1Linf,
                        Eigen::MatrixXd::Constant(2, cycle, 500.0));
    CHECK(set.lag() == 1);
    CHECK(set.num_factors() == 2);
}

// ---- simulation ------------------------------------------------------------

TEST_CASE("zero covariance reproduces the deterministic recursion") {
    VarEstimate est;
    est.f = Eigen::MatrixXd::Constant(1, 4, 12.0);
    est.g = Eigen::MatrixXd::Constant(1, 4, 3.0);
    est.A = {Eigen::MatrixXd::Constant(1, 1, 0.7)};
    est.B_full = Eigen::MatrixXd::Zero(1, 1);
    auto paths = simulate_paths(est, Eigen::MatrixXd::Constant(1, 4, 100.0), 3, 4, 42);
    REQUIRE(paths.size() == 3);
    for (const auto& p : paths) CHECK((p.pbar.array() == 12.0).all());
}

TEST_CASE("unit-variance innovations have unit sample std") {
    VarEstimate est;
    est.f = Eigen::MatrixXd::Zero(1, 1);
    est.g = Eigen::MatrixXd::Ones(1, 1);
    est.A = {};
    est.B_full = Eigen::MatrixXd::Identity(1, 1);
    auto paths = simulate_paths(est, Eigen::MatrixXd::Constant(1, 1, 1e6), 10000, 1, 99);
    double sum = 0.0, sumsq = 0.0;
    for (const auto& p : paths) {
        REQUIRE(p.u);
        sum += (*p.u)(0, 0);
        sumsq += (*p.u)(0, 0) * (*p.u)(0, 0);
    }
    const double mean = sum / 10000;
    const double sd = std::sqrt((sumsq - 10000 * mean * mean) / 9999);
    CHECK(sd > 0.97);
    CHECK(sd < 1.03);
}

TEST_CASE("simulated output respects clipping and determinism") {
    VarEstimate est;
    est.f = Eigen::MatrixXd::Constant(1, 2, 1.0);
    est.g = Eigen::MatrixXd::Constant(1, 2, 10.0);
    est.A = {};
    est.B_full = Eigen::MatrixXd::Identity(1, 1);
    Eigen::MatrixXd bound = Eigen::MatrixXd::Constant(1, 2, 2.0);
    auto a = simulate_paths(est, bound, 200, 2, 7);
    auto b = simulate_paths(est, bound, 200, 2, 7);
    for (int k = 0; k < 200; ++k) {
        CHECK((a[k].pbar.array() >= 0.0).all());
        CHECK((a[k].pbar.array() <= 2.0).all());
        CHECK(a[k].pbar.isApprox(b[k].pbar));
    }
    auto c = simulate_paths(est, bound, 1, 2, 8);
    CHECK_FALSE(a[0].pbar.isApprox(c[0].pbar));
}

TEST_CASE("conditional mean extends realized history by the recursion") {
    auto set = small_dynamic_set(NormKind::Linf);
    Eigen::MatrixXd realized(2, 1);
    realized << 54.0, 45.0;  // u_1 = (1, -1)
    Eigen::MatrixXd fc = conditional_mean(set, realized, 1);
    REQUIRE(fc.cols() == 1);
    // u_2 mean = 0.5 * u_1; pbar = f + g .* u
    CHECK(fc(0, 0) == doctest::Approx(50.0 + 6.0 * 0.5));
    CHECK(fc(1, 0) == doctest::Approx(50.0 + 3.0 * -0.5));
    // and matches the midpoint of the conditioned set for B = I
    auto cond = condition_on_history(set, realized, 1);
    CHECK(fc(0, 0) == doctest::Approx(cond.f(0, 0)));
}

// ---- serialization ---------------------------------------------------------

TEST_CASE("set file round trip preserves the polyhedron") {
    auto set = small_dynamic_set(NormKind::L1Linf, 0.75, 64.0);
    set.u_init(0, 0) = 0.3;
    std::stringstream buf;
    write_set(buf, set);
    auto back = read_set(buf, "roundtrip");
    CHECK(back.f.isApprox(set.f, 1e-12));
    CHECK(back.g.isApprox(set.g, 1e-12));
    CHECK(back.A[0].isApprox(set.A[0], 1e-12));
    CHECK(back.B.isApprox(set.B, 1e-12));
    CHECK(back.u_init.isApprox(set.u_init, 1e-12));
    CHECK(back.gamma == doctest::Approx(set.gamma).epsilon(1e-12));
    CHECK(back.rho == doctest::Approx(set.rho).epsilon(1e-12));
    CHECK(back.norm_kind == set.norm_kind);
    // identical oracle results
    Eigen::MatrixXd w(2, 2);
    w << 1, -1, 0.5, 2;
    CHECK(maximize_linear(back, w).first ==
          doctest::Approx(maximize_linear(set, w).first).epsilon(1e-10));

    std::istringstream bad("uncertainty_set\n  units = 1\n  bogus = 3\n");
    CHECK_THROWS_AS(read_set(bad, "bad"), robuc::core::ParseError);
}

TEST_CASE("time series round trip and validation") {
    std::vector<Eigen::MatrixXd> paths = {
        (Eigen::MatrixXd(2, 3) << 1, 2, 3, 4, 5, 6).finished(),
        (Eigen::MatrixXd(2, 2) << 7, 8, 9, 10).finished()};
    std::stringstream buf;
    write_time_series(buf, paths, {"w1", "w2"});
    std::vector<std::string> ids;
    auto back = read_time_series(buf, &ids, "roundtrip");
    REQUIRE(back.size() == 2);
    CHECK(ids == std::vector<std::string>{"w1", "w2"});
    CHECK(back[0].isApprox(paths[0]));
    CHECK(back[1].isApprox(paths[1]));

    std::istringstream missing("0 w1 5.0\n0 w2 6.0\n1 w1 7.0\n");
    CHECK_THROWS_AS(read_time_series(missing, nullptr, "bad"), robuc::core::ParseError);
}
