// SPDX-License-Identifier: Apache-2.0
#include "robuc/uncertainty/dynamic_set.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "robuc/lp/backend.hpp"

namespace robuc::uncertainty {

std::string norm_name(NormKind k) {
    switch (k) {
        case NormKind::L1: return "l1";
        case NormKind::L2: return "l2";
        case NormKind::Linf: return "linf";
        case NormKind::L1Linf: return "l1linf";
    }
    return "?";
}

NormKind norm_from_name(const std::string& name) {
    if (name == "l1") return NormKind::L1;
    if (name == "l2") return NormKind::L2;
    if (name == "linf") return NormKind::Linf;
    if (name == "l1linf" || name == "l1_linf") return NormKind::L1Linf;
    throw std::invalid_argument("unknown norm kind: " + name);
}

double budget_norm(NormKind kind, const Eigen::VectorXd& x) {
    switch (kind) {
        case NormKind::L1: return x.lpNorm<1>();
        case NormKind::L2: return x.norm();
        case NormKind::Linf: return x.lpNorm<Eigen::Infinity>();
        case NormKind::L1Linf:
            return std::max(x.lpNorm<1>() / std::sqrt(static_cast<double>(x.size())),
                            x.lpNorm<Eigen::Infinity>());
    }
    return 0.0;
}

void DynamicUncertaintySet::validate() const {
    const int n = num_units();
    const int T = horizon();
    if (n == 0 || T == 0) throw std::invalid_argument("uncertainty set is empty");
    if (g.rows() != n || g.cols() != T) throw std::invalid_argument("g dimension mismatch");
    if ((g.array() < 0).any()) throw std::invalid_argument("g must be nonnegative");
    if (p_max.rows() != n || p_max.cols() != T)
        throw std::invalid_argument("p_max dimension mismatch");
    if ((p_max.array() < 0).any()) throw std::invalid_argument("p_max must be nonnegative");
    if (B.rows() != n) throw std::invalid_argument("B row count must match unit count");
    if (B.cols() < 1 || B.cols() > n)
        throw std::invalid_argument("factor count must be in [1, units]");
    for (const auto& Al : A)
        if (Al.rows() != n || Al.cols() != n)
            throw std::invalid_argument("lag matrix dimension mismatch");
    if (gamma < 0) throw std::invalid_argument("gamma must be nonnegative");
    if (rho <= 0 || rho > 1) throw std::invalid_argument("rho must be in (0,1]");
    if (!A.empty() &&
        (u_init.rows() != n || u_init.cols() != static_cast<int>(A.size())))
        throw std::invalid_argument("initial lag values must be unit x lag");
}

DynamicUncertaintySet DynamicUncertaintySet::make_static(const Eigen::MatrixXd& f,
                                                         const Eigen::MatrixXd& g,
                                                         double gamma,
                                                         const Eigen::MatrixXd& p_max,
                                                         NormKind norm) {
    DynamicUncertaintySet s;
    s.f = f;
    s.g = g;
    s.B = Eigen::MatrixXd::Identity(f.rows(), f.rows());
    s.gamma = gamma;
    s.rho = 1.0;
    s.p_max = p_max;
    s.norm_kind = norm;
    s.validate();
    return s;
}

namespace {

// lag value u_{tau} for tau < 0 (0-based periods): u_init column -tau-1
Eigen::VectorXd lag_value(const DynamicUncertaintySet& set, int tau) {
    if (-tau - 1 < set.u_init.cols()) return set.u_init.col(-tau - 1);
    return Eigen::VectorXd::Zero(set.num_units());
}

}  // namespace

SetPolyhedron build_set_polyhedron(const DynamicUncertaintySet& set, bool bounds_as_rows) {
    set.validate();
    if (set.norm_kind == NormKind::L2)
        throw std::invalid_argument(
            "l2 norm is not polyhedral; LP oracles support l1, linf, l1linf");

    SetPolyhedron poly;
    const int n = poly.n = set.num_units();
    const int T = poly.T = set.horizon();
    const int nv = poly.nv = set.num_factors();
    const bool with_y = set.norm_kind == NormKind::L1 || set.norm_kind == NormKind::L1Linf;
    lp::MathProgram& prog = poly.prog;

    const double inf = lp::kInf;
    for (int t = 0; t < T; ++t)
        for (int i = 0; i < n; ++i)
            prog.add_var("pbar", bounds_as_rows ? -inf : 0.0,
                         bounds_as_rows ? inf : set.p_max(i, t));
    for (int t = 0; t < T; ++t)
        for (int i = 0; i < n; ++i) prog.add_var("u", -inf, inf);
    for (int t = 0; t < T; ++t)
        for (int k = 0; k < nv; ++k) prog.add_var("v", -inf, inf);
    int y_base = prog.num_vars();
    if (with_y)
        for (int t = 0; t < T; ++t)
            for (int k = 0; k < nv; ++k)
                prog.add_var("y", bounds_as_rows ? -inf : 0.0, inf);
    poly.s_base = prog.num_vars();
    for (int t = 0; t < T; ++t)
        prog.add_var("s", bounds_as_rows ? -inf : 0.0,
                     bounds_as_rows ? inf : set.gamma);
    auto y = [&](int k, int t) { return y_base + k + nv * t; };

    // pbar = f + g .* u
    for (int t = 0; t < T; ++t)
        for (int i = 0; i < n; ++i)
            prog.add_row({{{poly.pbar(i, t), 1.0}, {poly.u(i, t), -set.g(i, t)}},
                          lp::RowSense::EQ, set.f(i, t), "link"});

    // u_t = sum_l A_l u_{t-l} + B v_t (pre-horizon lags folded into the rhs)
    for (int t = 0; t < T; ++t)
        for (int i = 0; i < n; ++i) {
            lp::LinRow row;
            row.sense = lp::RowSense::EQ;
            row.name = "recursion";
            row.terms.push_back({poly.u(i, t), 1.0});
            double rhs = 0.0;
            for (int l = 1; l <= set.lag(); ++l) {
                const Eigen::MatrixXd& Al = set.A[l - 1];
                if (t - l >= 0) {
                    for (int j = 0; j < n; ++j)
                        if (Al(i, j) != 0.0) row.terms.push_back({poly.u(j, t - l), -Al(i, j)});
                } else {
                    rhs += Al.row(i).dot(lag_value(set, t - l));
                }
            }
            for (int k = 0; k < nv; ++k)
                if (set.B(i, k) != 0.0) row.terms.push_back({poly.v(k, t), -set.B(i, k)});
            row.rhs = rhs;
            prog.add_row(row);
        }

    // norm epigraph: per-period cap via s_t
    for (int t = 0; t < T; ++t) {
        if (set.norm_kind == NormKind::Linf || set.norm_kind == NormKind::L1Linf) {
            for (int k = 0; k < nv; ++k) {
                prog.add_row({{{poly.v(k, t), 1.0}, {poly.s(t), -1.0}},
                              lp::RowSense::LE, 0.0, "vcap+"});
                prog.add_row({{{poly.v(k, t), -1.0}, {poly.s(t), -1.0}},
                              lp::RowSense::LE, 0.0, "vcap-"});
            }
        }
        if (with_y) {
            for (int k = 0; k < nv; ++k) {
                prog.add_row({{{poly.v(k, t), 1.0}, {y(k, t), -1.0}},
                              lp::RowSense::LE, 0.0, "yabs+"});
                prog.add_row({{{poly.v(k, t), -1.0}, {y(k, t), -1.0}},
                              lp::RowSense::LE, 0.0, "yabs-"});
            }
            lp::LinRow sum;
            sum.sense = lp::RowSense::LE;
            sum.rhs = 0.0;
            sum.name = "l1cap";
            for (int k = 0; k < nv; ++k) sum.terms.push_back({y(k, t), 1.0});
            const double scale =
                set.norm_kind == NormKind::L1Linf ? std::sqrt(static_cast<double>(nv)) : 1.0;
            sum.terms.push_back({poly.s(t), -scale});
            prog.add_row(sum);
        }
    }

    // budget over time periods
    {
        lp::LinRow budget;
        budget.sense = lp::RowSense::LE;
        budget.rhs = set.rho * set.gamma * T;
        budget.name = "budget";
        for (int t = 0; t < T; ++t) budget.terms.push_back({poly.s(t), 1.0});
        prog.add_row(budget);
    }

    if (bounds_as_rows) {
        for (int t = 0; t < T; ++t) {
            for (int i = 0; i < n; ++i) {
                prog.add_row({{{poly.pbar(i, t), 1.0}}, lp::RowSense::LE,
                              set.p_max(i, t), "pbar_ub"});
                prog.add_row({{{poly.pbar(i, t), -1.0}}, lp::RowSense::LE, 0.0, "pbar_lb"});
            }
            prog.add_row({{{poly.s(t), 1.0}}, lp::RowSense::LE, set.gamma, "s_ub"});
            prog.add_row({{{poly.s(t), -1.0}}, lp::RowSense::LE, 0.0, "s_lb"});
            if (with_y)
                for (int k = 0; k < nv; ++k)
                    prog.add_row({{{y(k, t), -1.0}}, lp::RowSense::LE, 0.0, "y_lb"});
        }
    }
    return poly;
}

std::pair<double, ScenarioPath> maximize_linear(const DynamicUncertaintySet& set,
                                                const Eigen::MatrixXd& weights) {
    const int n = set.num_units();
    const int T = set.horizon();
    if (weights.rows() != n || weights.cols() != T)
        throw std::invalid_argument("weight matrix dimension mismatch");

    SetPolyhedron poly = build_set_polyhedron(set);
    for (int t = 0; t < T; ++t)
        for (int i = 0; i < n; ++i)
            poly.prog.set_objective(poly.pbar(i, t), -weights(i, t));

    lp::SolverBackend backend{{}};
    lp::SolveResult res = backend.solve_lp(poly.prog);
    if (res.status == lp::SolveStatus::Infeasible)
        throw std::runtime_error("uncertainty set is empty (infeasible LP oracle)");
    if (res.status != lp::SolveStatus::Optimal)
        throw std::runtime_error("uncertainty-set LP oracle failed");

    ScenarioPath path;
    path.pbar.resize(n, T);
    Eigen::MatrixXd u(n, T), v(set.num_factors(), T);
    for (int t = 0; t < T; ++t) {
        for (int i = 0; i < n; ++i) {
            path.pbar(i, t) = res.x[poly.pbar(i, t)];
            u(i, t) = res.x[poly.u(i, t)];
        }
        for (int k = 0; k < set.num_factors(); ++k) v(k, t) = res.x[poly.v(k, t)];
    }
    path.u = u;
    path.v = v;
    return {-res.objective, path};
}

TotalExtrema set_extrema(const DynamicUncertaintySet& set) {
    const int n = set.num_units();
    const int T = set.horizon();
    TotalExtrema ex;
    ex.total_min.resize(T);
    ex.total_max.resize(T);
    ex.delta_min.resize(std::max(0, T - 1));
    ex.delta_max.resize(std::max(0, T - 1));

    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, T);
    for (int t = 0; t < T; ++t) {
        w.col(t).setOnes();
        ex.total_max[t] = maximize_linear(set, w).first;
        w.col(t) = -Eigen::VectorXd::Ones(n);
        ex.total_min[t] = -maximize_linear(set, w).first;
        w.col(t).setZero();
    }
    for (int t = 0; t + 1 < T; ++t) {
        w.col(t + 1).setOnes();
        w.col(t) = -Eigen::VectorXd::Ones(n);
        ex.delta_max[t] = maximize_linear(set, w).first;
        w.col(t + 1) = -Eigen::VectorXd::Ones(n);
        w.col(t).setOnes();
        ex.delta_min[t] = -maximize_linear(set, w).first;
        w.col(t).setZero();
        w.col(t + 1).setZero();
    }
    return ex;
}

UnitExtrema unit_extrema(const DynamicUncertaintySet& set) {
    const int n = set.num_units();
    const int T = set.horizon();
    UnitExtrema ex;
    ex.lo.resize(n, T);
    ex.hi.resize(n, T);
    Eigen::MatrixXd w = Eigen::MatrixXd::Zero(n, T);
    for (int t = 0; t < T; ++t)
        for (int i = 0; i < n; ++i) {
            w(i, t) = 1.0;
            ex.hi(i, t) = maximize_linear(set, w).first;
            w(i, t) = -1.0;
            ex.lo(i, t) = -maximize_linear(set, w).first;
            w(i, t) = 0.0;
        }
    return ex;
}

DynamicUncertaintySet condition_on_history(const DynamicUncertaintySet& set,
                                           const Eigen::MatrixXd& realized, int t,
                                           bool* clipped) {
    set.validate();
    const int n = set.num_units();
    if (t < 0 || t >= set.horizon())
        throw std::out_of_range("conditioning period out of range");
    if (realized.rows() != n || realized.cols() < t)
        throw std::invalid_argument("realized history must cover periods 1..t");
    if (clipped) *clipped = false;

    // invert pbar = f + g .* u over the realized window
    Eigen::MatrixXd u_hist(n, t);
    for (int tau = 0; tau < t; ++tau)
        for (int i = 0; i < n; ++i) {
            double p = realized(i, tau);
            const double hi = set.p_max(i, tau);
            if (p < 0.0 || p > hi) {
                p = std::clamp(p, 0.0, hi);
                if (clipped) *clipped = true;
            }
            const double gi = set.g(i, tau);
            if (gi <= 0.0) {
                if (std::abs(p - set.f(i, tau)) > 1e-6 * std::max(1.0, std::abs(set.f(i, tau))))
                    throw std::invalid_argument(
                        "history inconsistent with a degenerate (g=0) component");
                u_hist(i, tau) = 0.0;
            } else {
                u_hist(i, tau) = (p - set.f(i, tau)) / gi;
            }
        }

    // conditional drift c = sum_l A_l u_{t+1-l}
    Eigen::VectorXd c = Eigen::VectorXd::Zero(n);
    for (int l = 1; l <= set.lag(); ++l) {
        const int tau = t - l;  // 0-based index of u_{t+1-l}
        c += set.A[l - 1] * (tau >= 0 ? u_hist.col(tau).eval() : lag_value(set, tau));
    }

    DynamicUncertaintySet cond;
    cond.f = set.f.col(t) + set.g.col(t).cwiseProduct(c);
    cond.g = set.g.col(t);
    cond.B = set.B;
    cond.gamma = set.gamma;
    cond.rho = 1.0;  // only the per-period cap survives conditioning
    cond.p_max = set.p_max.col(t);
    cond.norm_kind = set.norm_kind;
    cond.validate();
    return cond;
}

bool set_contains(const DynamicUncertaintySet& set, const Eigen::MatrixXd& pbar,
                  double tol, std::string* why) {
    set.validate();
    const int n = set.num_units();
    const int T = set.horizon();
    auto reject = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (pbar.rows() != n || pbar.cols() != T) return reject("dimension mismatch");

    Eigen::MatrixXd u(n, T);
    for (int t = 0; t < T; ++t)
        for (int i = 0; i < n; ++i) {
            const double p = pbar(i, t);
            if (p < -tol || p > set.p_max(i, t) + tol)
                return reject("bound violation at unit " + std::to_string(i));
            const double gi = set.g(i, t);
            if (gi <= 0.0) {
                if (std::abs(p - set.f(i, t)) > tol) return reject("g=0 component off its mean");
                u(i, t) = 0.0;
            } else {
                u(i, t) = (p - set.f(i, t)) / gi;
            }
        }

    const auto Bsolve = set.B.completeOrthogonalDecomposition();
    double total = 0.0;
    for (int t = 0; t < T; ++t) {
        Eigen::VectorXd eps = u.col(t);
        for (int l = 1; l <= set.lag(); ++l) {
            const int tau = t - l;
            eps -= set.A[l - 1] * (tau >= 0 ? u.col(tau).eval() : lag_value(set, tau));
        }
        Eigen::VectorXd v = Bsolve.solve(eps);
        if ((set.B * v - eps).lpNorm<Eigen::Infinity>() > tol * std::max(1.0, eps.norm()))
            return reject("innovation outside the factor range at t=" + std::to_string(t));
        const double nv = budget_norm(set.norm_kind, v);
        if (nv > set.gamma + tol) return reject("per-period cap violated at t=" + std::to_string(t));
        total += nv;
    }
    if (total > set.rho * set.gamma * T + tol) return reject("budget violated");
    return true;
}

}  // namespace robuc::uncertainty
