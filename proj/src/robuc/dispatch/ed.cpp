// SPDX-License-Identifier: Apache-2.0
#include "robuc/dispatch/ed.hpp"

#include <algorithm>
#include <vector>

#include "robuc/lp/backend.hpp"
#include "robuc/uncertainty/simulate.hpp"

namespace robuc::dispatch {

namespace {

struct PlanVars {
    // variable indices per plan period (offset 0 = real-time period t)
    std::vector<std::vector<int>> gen, ren, dis, chg;
    std::vector<int> penalty;  // slack variables, priced in the objective
};

// Dispatch rows over plan periods [t, te] with availability column k for
// plan offset k; period t couples to the realized history, later periods to
// the plan itself.  Balance and line rows carry priced slack variables.
PlanVars build_plan(lp::MathProgram& prog, const core::PowerSystem& sys,
                    const core::CommitmentSchedule& sch, const DispatchState& st,
                    const Eigen::MatrixXd& avail, const EdOptions& opts) {
    const int t0 = st.t;
    const int len = static_cast<int>(avail.cols());
    const double dt = sys.period_hours;
    const int ng = sys.num_gen(), nr = sys.num_ren(), ns = sys.num_sto();
    const Eigen::VectorXd prev_gen = st.prev_gen_output(sys);
    const Eigen::VectorXd q0 = st.stored_energy(sys);

    PlanVars v;
    v.gen.assign(len, std::vector<int>(ng));
    v.ren.assign(len, std::vector<int>(nr));
    v.dis.assign(len, std::vector<int>(ns));
    v.chg.assign(len, std::vector<int>(ns));
    for (int k = 0; k < len; ++k) {
        const int t = t0 + k;
        for (int i = 0; i < ng; ++i) {
            v.gen[k][i] = prog.add_var("pg", 0.0, lp::kInf);
            prog.set_objective(v.gen[k][i], sys.generators[i].variable_cost * dt);
        }
        for (int j = 0; j < nr; ++j) v.ren[k][j] = prog.add_var("pr", 0.0, avail(j, k));
        for (int i = 0; i < ns; ++i) {
            v.dis[k][i] = prog.add_var("pd", sys.storages[i].discharge_min[t],
                                       sys.storages[i].discharge_max[t]);
            v.chg[k][i] = prog.add_var("pc", sys.storages[i].charge_min[t],
                                       sys.storages[i].charge_max[t]);
        }
    }
    auto slack = [&](const std::string& name) {
        const int s = prog.add_var(name, 0.0, lp::kInf);
        prog.set_objective(s, opts.penalty_price * dt);
        v.penalty.push_back(s);
        return s;
    };

    for (int k = 0; k < len; ++k) {
        const int t = t0 + k;
        for (int i = 0; i < ng; ++i) {
            const core::Generator& g = sys.generators[i];
            prog.add_row({{{v.gen[k][i], 1.0}}, lp::RowSense::LE,
                          sch.on(i, t) * g.p_max[t], "gen_max"});
            prog.add_row({{{v.gen[k][i], 1.0}}, lp::RowSense::GE,
                          sch.on(i, t) * g.p_min[t], "gen_min"});
            const double on_prev = t == 0 ? (g.initial_on ? 1.0 : 0.0)
                                          : static_cast<double>(sch.on(i, t - 1));
            const double up = g.ramp_up[t] * dt * on_prev +
                              g.startup_ramp[t] * dt * sch.start(i, t);
            const double dn = g.ramp_down[t] * dt * sch.on(i, t) +
                              g.shutdown_ramp[t] * dt * sch.shut(i, t);
            std::vector<lp::LinTerm> diff = {{v.gen[k][i], 1.0}};
            double rhs_up = up, rhs_dn = -dn;
            if (k == 0) {
                rhs_up += prev_gen[i];
                rhs_dn += prev_gen[i];
            } else {
                diff.push_back({v.gen[k - 1][i], -1.0});
            }
            prog.add_row({diff, lp::RowSense::LE, rhs_up, "ramp_up"});
            prog.add_row({diff, lp::RowSense::GE, rhs_dn, "ramp_down"});
        }
        for (int i = 0; i < ns; ++i) {
            const core::StorageUnit& s = sys.storages[i];
            std::vector<lp::LinTerm> energy;
            for (int kk = 0; kk <= k; ++kk) {
                energy.push_back({v.chg[kk][i], s.efficiency * dt});
                energy.push_back({v.dis[kk][i], -dt});
            }
            prog.add_row({energy, lp::RowSense::LE, s.energy_capacity - q0[i],
                          "energy_max"});
            prog.add_row({energy, lp::RowSense::GE, -q0[i], "energy_min"});
        }
        for (int l = 0; l < sys.num_lines(); ++l) {
            const core::TransmissionLine& line = sys.lines[l];
            std::vector<lp::LinTerm> terms;
            for (int i = 0; i < ng; ++i)
                terms.push_back({v.gen[k][i], line.alpha_generator[i]});
            for (int j = 0; j < nr; ++j)
                terms.push_back({v.ren[k][j], line.alpha_renewable[j]});
            for (int i = 0; i < ns; ++i) {
                terms.push_back({v.dis[k][i], line.alpha_storage[i]});
                terms.push_back({v.chg[k][i], -line.alpha_storage[i]});
            }
            const double d = line.alpha_demand.dot(sys.demand.col(t));
            auto hi = terms;
            hi.push_back({slack("line+"), -1.0});
            prog.add_row({hi, lp::RowSense::LE, line.flow_limit + d, "flow_max"});
            auto lo = terms;
            lo.push_back({slack("line-"), 1.0});
            prog.add_row({lo, lp::RowSense::GE, -line.flow_limit + d, "flow_min"});
        }
        std::vector<lp::LinTerm> bal;
        for (int i = 0; i < ng; ++i) bal.push_back({v.gen[k][i], 1.0});
        for (int j = 0; j < nr; ++j) bal.push_back({v.ren[k][j], 1.0});
        for (int i = 0; i < ns; ++i) {
            bal.push_back({v.dis[k][i], 1.0});
            bal.push_back({v.chg[k][i], -1.0});
        }
        bal.push_back({slack("shortfall"), 1.0});
        bal.push_back({slack("surplus"), -1.0});
        prog.add_row({bal, lp::RowSense::EQ, sys.total_demand(t), "balance"});
    }
    return v;
}

// The plan availability matrix: realized availability at t, the conditioned
// forecast afterwards.
Eigen::MatrixXd plan_availability(const core::PowerSystem& sys,
                                  const DispatchState& st,
                                  const Eigen::MatrixXd& forecast, int len) {
    Eigen::MatrixXd avail(sys.num_ren(), len);
    avail.col(0) = st.avail_hist.col(st.t);
    for (int k = 1; k < len; ++k) avail.col(k) = forecast.col(st.t + k);
    return avail;
}

// The policy is only certified on the uncertainty set: evaluating it at a
// total outside the set's per-period projection can demand outputs beyond
// unit limits and make the hard consistency rows unsatisfiable.  Realized
// totals (and conditioned extrema under an out-of-set history) are therefore
// projected onto that range before the policy is queried.
double clamp_total(const uncertainty::TotalExtrema& range, int t, double total) {
    return std::min(range.total_max(t), std::max(range.total_min(t), total));
}

// Robust ramping from t to t+1: the policy's period-(t+1) output, taken over
// the conditioned one-period set's total extremes, must be reachable.
void add_robust_ramp_rows(lp::MathProgram& prog, const core::PowerSystem& sys,
                          const core::CommitmentSchedule& sch,
                          const robust::AffinePolicy& policy,
                          const uncertainty::DynamicUncertaintySet& set,
                          const DispatchState& st, const PlanVars& v) {
    const int t = st.t;
    if (t + 1 >= sys.horizon) return;  // nothing left to ramp into
    const double dt = sys.period_hours;
    const uncertainty::TotalExtrema range = uncertainty::set_extrema(set);
    uncertainty::TotalExtrema ex;
    ex.total_min = Eigen::VectorXd::Zero(1);
    ex.total_max = Eigen::VectorXd::Zero(1);
    try {
        const uncertainty::DynamicUncertaintySet cond =
            uncertainty::condition_on_history(set, st.avail_hist, t + 1);
        ex = uncertainty::set_extrema(cond);
        ex.total_min(0) = clamp_total(range, t + 1, ex.total_min(0));
        ex.total_max(0) = clamp_total(range, t + 1, ex.total_max(0));
    } catch (const std::runtime_error&) {
        // A history outside the set can make the conditioned set empty; the
        // policy is still certified over the unconditional range, so use it.
        ex.total_min(0) = range.total_min(t + 1);
        ex.total_max(0) = range.total_max(t + 1);
    }

    for (int i = 0; i < sys.num_gen(); ++i) {
        const core::Generator& g = sys.generators[i];
        const double up = g.ramp_up[t + 1] * dt * sch.on(i, t) +
                          g.startup_ramp[t + 1] * dt * sch.start(i, t + 1);
        const double dn = g.ramp_down[t + 1] * dt * sch.on(i, t + 1) +
                          g.shutdown_ramp[t + 1] * dt * sch.shut(i, t + 1);
        for (double total : {ex.total_min(0), ex.total_max(0)}) {
            const double next = policy.gen_at(i, t + 1, total);
            prog.add_row({{{v.gen[0][i], 1.0}}, lp::RowSense::GE, next - up,
                          "robust_ramp_up"});
            prog.add_row({{{v.gen[0][i], 1.0}}, lp::RowSense::LE, next + dn,
                          "robust_ramp_down"});
        }
    }
}

// Storage levels of the plan follow the affine policy under the forecast.
// Each row pins the plan's level at horizon step k to the level the policy
// itself reaches there (realized totals up to t, forecast totals beyond): a
// plan net charge from the actual level equal to the policy's level minus
// that actual level.  When earlier periods implemented the policy exactly
// this is the plain cumulative match from period t; when they deviated, the
// anchored form steers the level back instead of compounding the drift.
void add_storage_match_rows(lp::MathProgram& prog, const core::PowerSystem& sys,
                            const robust::AffinePolicy& policy,
                            const uncertainty::DynamicUncertaintySet& set,
                            const Eigen::MatrixXd& avail, const DispatchState& st,
                            const PlanVars& v) {
    const int len = static_cast<int>(avail.cols());
    const Eigen::VectorXd level = st.stored_energy(sys);
    const double dt = sys.period_hours;
    const uncertainty::TotalExtrema range = uncertainty::set_extrema(set);
    for (int i = 0; i < sys.num_sto(); ++i) {
        const double eff = sys.storages[i].efficiency;
        // policy's net charge (MW) over the already-realized periods 0..t-1
        double policy_net = 0.0;
        for (int j = 0; j < st.t; ++j) {
            const double total = clamp_total(range, j, st.avail_hist.col(j).sum());
            policy_net += eff * policy.charge_at(i, j, total) -
                          policy.discharge_at(i, j, total);
        }
        // implemented net charge so far, in the same MW units
        const double actual_net =
            (level(i) - sys.storages[i].initial_level) / dt;
        std::vector<lp::LinTerm> plan_net;
        plan_net.push_back({v.chg[0][i], eff});
        plan_net.push_back({v.dis[0][i], -1.0});
        for (int k = 1; k < len; ++k) {
            const double total =
                clamp_total(range, st.t + k - 1, avail.col(k - 1).sum());
            policy_net += eff * policy.charge_at(i, st.t + k - 1, total) -
                          policy.discharge_at(i, st.t + k - 1, total);
            const double total_k =
                clamp_total(range, st.t + k, avail.col(k).sum());
            const double rhs = policy_net +
                               eff * policy.charge_at(i, st.t + k, total_k) -
                               policy.discharge_at(i, st.t + k, total_k) -
                               actual_net;
            auto row = plan_net;
            row.push_back({v.chg[k][i], eff});
            row.push_back({v.dis[k][i], -1.0});
            prog.add_row({row, lp::RowSense::EQ, rhs, "storage_match"});
            plan_net.push_back({v.chg[k][i], eff});
            plan_net.push_back({v.dis[k][i], -1.0});
        }
    }
}

EdResult solve_plan(const core::PowerSystem& sys, lp::MathProgram& prog,
                    const PlanVars& v, const EdOptions& opts, int len) {
    const lp::SolveResult res = lp::SolverBackend().solve_lp(prog);
    if (res.status != lp::SolveStatus::Optimal)
        throw DispatchError(
            "economic dispatch infeasible despite penalty slacks; the hard "
            "ramping or storage rows cannot be met");
    EdResult out;
    const int ng = sys.num_gen(), nr = sys.num_ren(), ns = sys.num_sto();
    out.gen.resize(ng, len);
    out.ren.resize(nr, len);
    out.dis.resize(ns, len);
    out.chg.resize(ns, len);
    for (int k = 0; k < len; ++k) {
        for (int i = 0; i < ng; ++i) out.gen(i, k) = res.x[v.gen[k][i]];
        for (int j = 0; j < nr; ++j) out.ren(j, k) = res.x[v.ren[k][j]];
        for (int i = 0; i < ns; ++i) {
            out.dis(i, k) = res.x[v.dis[k][i]];
            out.chg(i, k) = res.x[v.chg[k][i]];
        }
    }
    const double dt = sys.period_hours;
    for (int i = 0; i < ng; ++i)
        out.cost_t += sys.generators[i].variable_cost * out.gen(i, 0) * dt;
    // penalty slacks were declared per period in order; the first period's
    // block is everything before the second period's first slack
    const int per_period = static_cast<int>(v.penalty.size()) / len;
    for (int s = 0; s < per_period; ++s) out.penalty_mw_t += res.x[v.penalty[s]];
    out.penalty_t = out.penalty_mw_t * opts.penalty_price * dt;
    out.objective = res.objective;
    return out;
}

}  // namespace

DispatchState DispatchState::initial(const core::PowerSystem& sys, int lookahead) {
    DispatchState st;
    st.gen_hist.resize(sys.num_gen(), 0);
    st.ren_hist.resize(sys.num_ren(), 0);
    st.dis_hist.resize(sys.num_sto(), 0);
    st.chg_hist.resize(sys.num_sto(), 0);
    st.avail_hist.resize(sys.num_ren(), 0);
    st.t = 0;
    st.lookahead = lookahead;
    return st;
}

void DispatchState::record(const Eigen::VectorXd& gen, const Eigen::VectorXd& ren,
                           const Eigen::VectorXd& dis, const Eigen::VectorXd& chg) {
    auto append = [](Eigen::MatrixXd& m, const Eigen::VectorXd& col) {
        m.conservativeResize(Eigen::NoChange, m.cols() + 1);
        m.col(m.cols() - 1) = col;
    };
    append(gen_hist, gen);
    append(ren_hist, ren);
    append(dis_hist, dis);
    append(chg_hist, chg);
    ++t;
}

void DispatchState::reveal(const Eigen::VectorXd& available) {
    avail_hist.conservativeResize(Eigen::NoChange, avail_hist.cols() + 1);
    avail_hist.col(avail_hist.cols() - 1) = available;
}

void DispatchState::validate(const core::PowerSystem& sys) const {
    if (t < 0 || t >= sys.horizon)
        throw std::invalid_argument("dispatch period out of range");
    if (lookahead < 0) throw std::invalid_argument("negative look-ahead");
    if (gen_hist.cols() != t || ren_hist.cols() != t || dis_hist.cols() != t ||
        chg_hist.cols() != t)
        throw std::invalid_argument("dispatch history length mismatch");
    if (avail_hist.cols() != t + 1)
        throw std::invalid_argument("availability must be revealed through t");
    if (gen_hist.rows() != sys.num_gen() || ren_hist.rows() != sys.num_ren() ||
        dis_hist.rows() != sys.num_sto() || chg_hist.rows() != sys.num_sto() ||
        avail_hist.rows() != sys.num_ren())
        throw std::invalid_argument("dispatch history unit-count mismatch");
    for (int k = 0; k <= t; ++k)
        for (int j = 0; j < sys.num_ren(); ++j)
            if (avail_hist(j, k) < 0 ||
                avail_hist(j, k) > sys.renewables[j].p_max_profile[k] + 1e-9)
                throw std::invalid_argument("availability outside [0, capacity]");
}

Eigen::VectorXd DispatchState::prev_gen_output(const core::PowerSystem& sys) const {
    if (t == 0) {
        Eigen::VectorXd out(sys.num_gen());
        for (int i = 0; i < sys.num_gen(); ++i)
            out[i] = sys.generators[i].initial_output;
        return out;
    }
    return gen_hist.col(t - 1);
}

Eigen::VectorXd DispatchState::stored_energy(const core::PowerSystem& sys) const {
    Eigen::VectorXd level(sys.num_sto());
    const double dt = sys.period_hours;
    for (int i = 0; i < sys.num_sto(); ++i) {
        level[i] = sys.storages[i].initial_level;
        for (int k = 0; k < t; ++k)
            level[i] += dt * (sys.storages[i].efficiency * chg_hist(i, k) -
                              dis_hist(i, k));
    }
    return level;
}

EdResult policy_guided_laed(const core::PowerSystem& sys,
                            const core::CommitmentSchedule& schedule,
                            const robust::AffinePolicy& policy,
                            const uncertainty::DynamicUncertaintySet& set,
                            const DispatchState& state, const EdOptions& opts) {
    state.validate(sys);
    const int len = std::min(state.lookahead, sys.horizon - 1 - state.t) + 1;
    Eigen::MatrixXd forecast(sys.num_ren(), sys.horizon);
    forecast.setZero();
    if (len > 1)
        forecast.rightCols(sys.horizon - state.t - 1) =
            uncertainty::conditional_mean(set, state.avail_hist, state.t + 1);
    const Eigen::MatrixXd avail = plan_availability(sys, state, forecast, len);

    lp::MathProgram prog;
    PlanVars v = build_plan(prog, sys, schedule, state, avail, opts);
    add_robust_ramp_rows(prog, sys, schedule, policy, set, state, v);
    add_storage_match_rows(prog, sys, policy, set, avail, state, v);
    return solve_plan(sys, prog, v, opts, len);
}

EdResult policy_enforcement_ed(const core::PowerSystem& sys,
                               const core::CommitmentSchedule& schedule,
                               const robust::AffinePolicy& policy,
                               const uncertainty::DynamicUncertaintySet& set,
                               const DispatchState& state, const EdOptions& opts) {
    state.validate(sys);
    const Eigen::MatrixXd avail = state.avail_hist.col(state.t);
    lp::MathProgram prog;
    PlanVars v = build_plan(prog, sys, schedule, state, avail, opts);
    add_robust_ramp_rows(prog, sys, schedule, policy, set, state, v);
    return solve_plan(sys, prog, v, opts, 1);
}

EdResult deterministic_laed(const core::PowerSystem& sys,
                            const core::CommitmentSchedule& schedule,
                            const DispatchState& state,
                            const Eigen::MatrixXd& forecast, const EdOptions& opts) {
    state.validate(sys);
    if (forecast.rows() != sys.num_ren() || forecast.cols() != sys.horizon)
        throw std::invalid_argument("forecast must be renewable x horizon");
    const int len = std::min(state.lookahead, sys.horizon - 1 - state.t) + 1;
    const Eigen::MatrixXd avail = plan_availability(sys, state, forecast, len);
    lp::MathProgram prog;
    PlanVars v = build_plan(prog, sys, schedule, state, avail, opts);
    return solve_plan(sys, prog, v, opts, len);
}

}  // namespace robuc::dispatch
