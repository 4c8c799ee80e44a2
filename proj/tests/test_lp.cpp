// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <functional>
#include <numeric>

#include <Eigen/Dense>

#include "robuc/lp/backend.hpp"
#include "robuc/lp/model_io.hpp"

using namespace robuc::lp;

namespace {

SolveResult run(const MathProgram& p) {
    SolverBackend be;
    return be.solve(p);
}

// independent oracle for tiny LPs: enumerate candidate vertices as
// intersections of n active constraints (rows and variable bounds)
double brute_force_lp_min(const MathProgram& p) {
    const int n = p.num_vars();
    std::vector<std::vector<double>> A;
    std::vector<double> rhs;
    std::vector<int> eq;  // 1 if equality
    for (int r = 0; r < p.num_rows(); ++r) {
        std::vector<double> a(n, 0.0);
        for (const auto& t : p.row(r).terms) a[t.var] += t.coef;
        A.push_back(a);
        rhs.push_back(p.row(r).rhs);
        eq.push_back(p.row(r).sense == RowSense::EQ ? 1 : 0);
    }
    for (int j = 0; j < n; ++j) {
        if (std::isfinite(p.var(j).lb)) {
            std::vector<double> a(n, 0.0);
            a[j] = 1.0;
            A.push_back(a);
            rhs.push_back(p.var(j).lb);
            eq.push_back(0);
        }
        if (std::isfinite(p.var(j).ub)) {
            std::vector<double> a(n, 0.0);
            a[j] = 1.0;
            A.push_back(a);
            rhs.push_back(p.var(j).ub);
            eq.push_back(0);
        }
    }
    const int m = static_cast<int>(A.size());
    auto feasible = [&](const std::vector<double>& x) {
        for (int r = 0; r < p.num_rows(); ++r) {
            double v = 0;
            for (const auto& t : p.row(r).terms) v += t.coef * x[t.var];
            const double d = v - p.row(r).rhs;
            if (p.row(r).sense == RowSense::LE && d > 1e-7) return false;
            if (p.row(r).sense == RowSense::GE && d < -1e-7) return false;
            if (p.row(r).sense == RowSense::EQ && std::abs(d) > 1e-7) return false;
        }
        for (int j = 0; j < n; ++j) {
            if (x[j] < p.var(j).lb - 1e-7) return false;
            if (x[j] > p.var(j).ub + 1e-7) return false;
        }
        return true;
    };
    double best = std::numeric_limits<double>::infinity();
    std::vector<int> idx(m);
    for (int i = 0; i < m; ++i) idx[i] = i;
    std::vector<int> comb(n);
    std::function<void(int, int)> rec = [&](int start, int k) {
        if (k == n) {
            Eigen::MatrixXd M(n, n);
            Eigen::VectorXd b(n);
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) M(i, j) = A[comb[i]][j];
                b[i] = rhs[comb[i]];
            }
            Eigen::FullPivLU<Eigen::MatrixXd> lu(M);
            if (!lu.isInvertible()) return;
            Eigen::VectorXd x = lu.solve(b);
            std::vector<double> xv(x.data(), x.data() + n);
            if (!feasible(xv)) return;
            double obj = 0;
            for (int j = 0; j < n; ++j) obj += p.objective()[j] * xv[j];
            best = std::min(best, obj);
            return;
        }
        for (int i = start; i < m; ++i) {
            comb[k] = i;
            rec(i + 1, k + 1);
        }
    };
    rec(0, 0);
    return best;
}

}  // namespace

TEST_CASE("min x subject to x >= 3") {
    MathProgram p;
    int x = p.add_var("x", -kInf, kInf);
    p.set_objective(x, 1.0);
    p.add_row({{{x, 1.0}}, RowSense::GE, 3.0, "lb"});
    auto r = run(p);
    REQUIRE(r.status == SolveStatus::Optimal);
    CHECK(r.objective == doctest::Approx(3.0));
    REQUIRE(r.duals.size() == 1);
    CHECK(r.duals[0] == doctest::Approx(1.0));
}

TEST_CASE("binary min x+y with x+y >= 1") {
    MathProgram p;
    int x = p.add_var("x", 0, 1, VarKind::Binary);
    int y = p.add_var("y", 0, 1, VarKind::Binary);
    p.set_objective(x, 1.0);
    p.set_objective(y, 1.0);
    p.add_row({{{x, 1.0}, {y, 1.0}}, RowSense::GE, 1.0, ""});
    auto r = run(p);
    REQUIRE(r.status == SolveStatus::Optimal);
    CHECK(r.objective == doctest::Approx(1.0));
}

TEST_CASE("knapsack vs exhaustive enumeration") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> U(1.0, 10.0);
    const int n = 10;
    std::vector<double> value(n), weight(n);
    for (int i = 0; i < n; ++i) {
        value[i] = U(rng);
        weight[i] = U(rng);
    }
    const double cap = 0.4 * std::accumulate(weight.begin(), weight.end(), 0.0);
    double best = 0.0;
    for (int mask = 0; mask < (1 << n); ++mask) {
        double v = 0, w = 0;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) {
                v += value[i];
                w += weight[i];
            }
        if (w <= cap) best = std::max(best, v);
    }
    MathProgram p;
    LinRow capr;
    capr.sense = RowSense::LE;
    capr.rhs = cap;
    for (int i = 0; i < n; ++i) {
        int xi = p.add_var("x", 0, 1, VarKind::Binary);
        p.set_objective(xi, -value[i]);
        capr.terms.push_back({xi, weight[i]});
    }
    p.add_row(capr);
    SolverBackend be({.gap = 1e-9});
    auto r = be.solve(p);
    REQUIRE(r.status == SolveStatus::Optimal);
    CHECK(-r.objective == doctest::Approx(best).epsilon(1e-9));
}

TEST_CASE("transportation LP strong duality") {
    // supplies {3,5}, demands {4,4}, costs [[1,4],[2,3]]
    MathProgram p;
    int x11 = p.add_var("x11", 0, kInf), x12 = p.add_var("x12", 0, kInf);
    int x21 = p.add_var("x21", 0, kInf), x22 = p.add_var("x22", 0, kInf);
    p.set_objective(x11, 1);
    p.set_objective(x12, 4);
    p.set_objective(x21, 2);
    p.set_objective(x22, 3);
    p.add_row({{{x11, 1.0}, {x12, 1.0}}, RowSense::EQ, 3.0, "s1"});
    p.add_row({{{x21, 1.0}, {x22, 1.0}}, RowSense::EQ, 5.0, "s2"});
    p.add_row({{{x11, 1.0}, {x21, 1.0}}, RowSense::EQ, 4.0, "d1"});
    p.add_row({{{x12, 1.0}, {x22, 1.0}}, RowSense::EQ, 4.0, "d2"});
    auto r = run(p);
    REQUIRE(r.status == SolveStatus::Optimal);
    // primal optimum: x11=3, x21=1, x22=4 -> 3+2+12=17
    CHECK(r.objective == doctest::Approx(17.0));
    const double dual_obj =
        3 * r.duals[0] + 5 * r.duals[1] + 4 * r.duals[2] + 4 * r.duals[3];
    CHECK(dual_obj == doctest::Approx(r.objective).epsilon(1e-8));
}

TEST_CASE("degenerate LP yields feasible duals") {
    // redundant constraints meeting at the optimum
    MathProgram p;
    int x = p.add_var("x", 0, kInf);
    int y = p.add_var("y", 0, kInf);
    p.set_objective(x, 1);
    p.set_objective(y, 1);
    p.add_row({{{x, 1.0}, {y, 1.0}}, RowSense::GE, 2.0, ""});
    p.add_row({{{x, 1.0}, {y, 1.0}}, RowSense::GE, 2.0, ""});
    p.add_row({{{x, 2.0}, {y, 2.0}}, RowSense::GE, 4.0, ""});
    auto r = run(p);
    REQUIRE(r.status == SolveStatus::Optimal);
    CHECK(r.objective == doctest::Approx(2.0));
    // dual feasibility: all >= 0 (GE rows), reduced costs of x,y nonnegative
    double yx = r.duals[0] + r.duals[1] + 2 * r.duals[2];
    CHECK(r.duals[0] >= -1e-9);
    CHECK(r.duals[1] >= -1e-9);
    CHECK(r.duals[2] >= -1e-9);
    CHECK(1.0 - yx >= -1e-9);
}

TEST_CASE("infeasible and unbounded detection") {
    MathProgram p;
    int x = p.add_var("x", 0, 1);
    p.add_row({{{x, 1.0}}, RowSense::GE, 2.0, ""});
    CHECK(run(p).status == SolveStatus::Infeasible);

    MathProgram q;
    int z = q.add_var("z", -kInf, kInf);
    q.set_objective(z, 1.0);
    q.add_row({{{z, 1.0}}, RowSense::LE, 5.0, ""});
    CHECK(run(q).status == SolveStatus::Unbounded);
}

TEST_CASE("random small LPs match vertex enumeration oracle") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> U(-2.0, 2.0);
    int solved = 0;
    for (int rep = 0; rep < 60; ++rep) {
        MathProgram p;
        const int n = 3;
        for (int j = 0; j < n; ++j) {
            int v = p.add_var("v", -3.0, 3.0);
            p.set_objective(v, U(rng));
        }
        for (int r = 0; r < 5; ++r) {
            LinRow row;
            for (int j = 0; j < n; ++j) row.terms.push_back({j, U(rng)});
            row.sense = rng() % 2 ? RowSense::LE : RowSense::GE;
            row.rhs = U(rng);
            p.add_row(std::move(row));
        }
        auto r = run(p);
        const double oracle = brute_force_lp_min(p);
        if (r.status == SolveStatus::Infeasible) {
            CHECK(std::isinf(oracle));
            continue;
        }
        REQUIRE(r.status == SolveStatus::Optimal);
        CHECK(r.objective ==
              doctest::Approx(oracle).epsilon(1e-6).scale(
                  std::max(1.0, std::abs(oracle))));
        ++solved;
    }
    CHECK(solved > 20);
}

TEST_CASE("determinism: identical program, identical objective") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> U(0.0, 4.0);
    MathProgram p;
    LinRow row;
    row.sense = RowSense::GE;
    row.rhs = 10.0;
    for (int j = 0; j < 12; ++j) {
        int v = p.add_var("v", 0, 1, VarKind::Binary);
        p.set_objective(v, U(rng));
        row.terms.push_back({v, U(rng)});
    }
    p.add_row(row);
    auto a = run(p);
    auto b = run(p);
    REQUIRE(a.status == SolveStatus::Optimal);
    CHECK(a.objective == b.objective);
}

TEST_CASE("LP format round trip solves identically") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> U(-3.0, 3.0);
    MathProgram p;
    for (int j = 0; j < 4; ++j) {
        int v = p.add_var("v", j % 2 ? 0.0 : -1.5, 2.5,
                          j == 3 ? VarKind::Binary : VarKind::Continuous);
        p.set_objective(v, U(rng));
    }
    for (int r = 0; r < 4; ++r) {
        LinRow row;
        for (int j = 0; j < 4; ++j) row.terms.push_back({j, U(rng)});
        row.sense = r % 2 ? RowSense::LE : RowSense::GE;
        row.rhs = U(rng);
        p.add_row(std::move(row));
    }
    std::stringstream ss;
    write_lp_format(p, ss);
    MathProgram q = read_lp_format(ss);
    auto ra = run(p);
    auto rb = run(q);
    REQUIRE(ra.status == rb.status);
    if (ra.status == SolveStatus::Optimal)
        CHECK(ra.objective == doctest::Approx(rb.objective).epsilon(1e-9));
}

TEST_CASE("lazy constraints: incumbent satisfies injected rows") {
    // min -x-y over binaries scaled to [0,10] via continuous vars tied to
    // binaries; cb cuts off any candidate with x+y > 1 (i.e. forces x+y <= 1)
    MathProgram p;
    int x = p.add_var("x", 0, 1, VarKind::Binary);
    int y = p.add_var("y", 0, 1, VarKind::Binary);
    p.set_objective(x, -2.0);
    p.set_objective(y, -1.0);
    int calls = 0;
    SolverBackend be({.gap = 1e-9});
    CHECK(be.capability().supports_lazy_constraints);
    auto r = be.solve(p, [&](const std::vector<double>& v) {
        ++calls;
        std::vector<LinRow> cuts;
        if (v[x] + v[y] > 1.0 + 1e-6)
            cuts.push_back({{{x, 1.0}, {y, 1.0}}, RowSense::LE, 1.0, "cut"});
        return cuts;
    });
    REQUIRE(r.status == SolveStatus::Optimal);
    CHECK(calls >= 2);  // violated candidate seen, then the repaired one
    CHECK(r.objective == doctest::Approx(-2.0));
    CHECK(r.x[x] + r.x[y] <= 1.0 + 1e-6);
}

TEST_CASE("dual extraction rejected on MILP") {
    MathProgram p;
    int x = p.add_var("x", 0, 1, VarKind::Binary);
    p.set_objective(x, 1.0);
    SolverBackend be;
    CHECK_THROWS_AS(be.solve_lp_dual(p), BackendError);
}

TEST_CASE("unknown backend name is rejected") {
    CHECK_THROWS_AS(SolverBackend({.name = "cplex"}), BackendError);
}
