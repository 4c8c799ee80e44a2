// SPDX-License-Identifier: Apache-2.0
#include "robuc/robust/master.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace robuc::robust {

namespace {
std::string tag(const std::string& base, const std::string& id, int t) {
    return base + "[" + id + "," + std::to_string(t) + "]";
}

Eigen::MatrixXi add_matrix_vars(lp::MathProgram& prog, const std::string& base,
                                int rows, int T) {
    Eigen::MatrixXi idx(rows, T);
    for (int i = 0; i < rows; ++i)
        for (int t = 0; t < T; ++t)
            idx(i, t) = prog.add_var(
                base + "[" + std::to_string(i) + "," + std::to_string(t) + "]",
                -lp::kInf, lp::kInf);
    return idx;
}

Eigen::MatrixXd matrix_values(const Eigen::MatrixXi& idx,
                              const std::vector<double>& x) {
    Eigen::MatrixXd out(idx.rows(), idx.cols());
    for (int i = 0; i < idx.rows(); ++i)
        for (int t = 0; t < idx.cols(); ++t) out(i, t) = x[idx(i, t)];
    return out;
}
}  // namespace

PolicyVars add_policy_vars(lp::MathProgram& prog, const core::PowerSystem& sys) {
    PolicyVars pv;
    const int T = sys.horizon;
    pv.w_gen = add_matrix_vars(prog, "wg", sys.num_gen(), T);
    pv.W_gen = add_matrix_vars(prog, "Wg", sys.num_gen(), T);
    pv.w_dis = add_matrix_vars(prog, "wsd", sys.num_sto(), T);
    pv.W_dis = add_matrix_vars(prog, "Wsd", sys.num_sto(), T);
    pv.w_chg = add_matrix_vars(prog, "wsc", sys.num_sto(), T);
    pv.W_chg = add_matrix_vars(prog, "Wsc", sys.num_sto(), T);
    pv.w_ren = add_matrix_vars(prog, "wr", sys.num_ren(), T);
    pv.W_ren.resize(T);
    for (int t = 0; t < T; ++t)
        pv.W_ren(t) = prog.add_var("Wr[" + std::to_string(t) + "]", -lp::kInf, lp::kInf);
    return pv;
}

AffinePolicy extract_policy(const PolicyVars& pv, const std::vector<double>& x) {
    AffinePolicy p;
    p.w_gen = matrix_values(pv.w_gen, x);
    p.W_gen = matrix_values(pv.W_gen, x);
    p.w_dis = matrix_values(pv.w_dis, x);
    p.W_dis = matrix_values(pv.W_dis, x);
    p.w_chg = matrix_values(pv.w_chg, x);
    p.W_chg = matrix_values(pv.W_chg, x);
    p.w_ren = matrix_values(pv.w_ren, x);
    p.W_ren.resize(pv.W_ren.size());
    for (int t = 0; t < pv.W_ren.size(); ++t) p.W_ren(t) = x[pv.W_ren(t)];
    return p;
}

core::CommitmentSchedule extract_schedule(const core::CommitmentVars& cv,
                                          const std::vector<double>& x) {
    const int ng = static_cast<int>(cv.on.size());
    const int T = ng > 0 ? static_cast<int>(cv.on[0].size()) : 0;
    core::CommitmentSchedule s;
    s.on.resize(ng, T);
    s.start.resize(ng, T);
    s.shut.resize(ng, T);
    for (int i = 0; i < ng; ++i)
        for (int t = 0; t < T; ++t) {
            s.on(i, t) = x[cv.on[i][t]] > 0.5 ? 1 : 0;
            s.start(i, t) = x[cv.start[i][t]] > 0.5 ? 1 : 0;
            s.shut(i, t) = x[cv.shut[i][t]] > 0.5 ? 1 : 0;
        }
    return s;
}

Eigen::MatrixXd scenario_coefficients(const RobustRow& row,
                                      const std::vector<double>& x, int n, int T) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, T);
    for (const ScenarioTerm& st : row.scenario) {
        const double c = st.coef * x[st.var];
        if (st.unit < 0)
            a.col(st.t).array() += c;
        else
            a(st.unit, st.t) += c;
    }
    return a;
}

double fixed_value(const RobustRow& row, const std::vector<double>& x) {
    double v = 0.0;
    for (const auto& term : row.fixed) v += term.coef * x[term.var];
    return v;
}

lp::LinRow instantiate(const RobustRow& row, const Eigen::MatrixXd& pbar) {
    std::map<int, double> coef;
    for (const auto& term : row.fixed) coef[term.var] += term.coef;
    for (const ScenarioTerm& st : row.scenario) {
        const double value = st.unit < 0 ? pbar.col(st.t).sum() : pbar(st.unit, st.t);
        coef[st.var] += st.coef * value;
    }
    lp::LinRow out;
    out.name = row.name + "@" + std::to_string(row.pool.size());
    out.sense = lp::RowSense::LE;
    out.rhs = row.rhs;
    for (const auto& [var, c] : coef)
        if (c != 0.0) out.terms.push_back({var, c});
    return out;
}

double interval_upper_bound(const Eigen::MatrixXd& a,
                            const uncertainty::UnitExtrema& boxes) {
    double ub = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int t = 0; t < a.cols(); ++t)
            ub += a(i, t) * (a(i, t) > 0.0 ? boxes.hi(i, t) : boxes.lo(i, t));
    return ub;
}

void add_oa_dual_block(lp::MathProgram& prog, const IntertemporalRow& row,
                       const uncertainty::TotalExtrema& ex) {
    if (row.t1 > row.t2) throw std::invalid_argument("empty span in " + row.name);
    const int m = row.t2 - row.t1 + 1;

    std::vector<int> pi_hi(m), pi_lo(m), phi_hi(m, -1), phi_lo(m, -1);
    for (int k = 0; k < m; ++k) {
        const std::string suf = row.name + ":" + std::to_string(row.t1 + k);
        pi_hi[k] = prog.add_var("pi+" + suf, 0.0, lp::kInf);
        pi_lo[k] = prog.add_var("pi-" + suf, 0.0, lp::kInf);
        if (k > 0) {  // change multipliers live on interior period boundaries
            phi_hi[k] = prog.add_var("phi+" + suf, 0.0, lp::kInf);
            phi_lo[k] = prog.add_var("phi-" + suf, 0.0, lp::kInf);
        }
    }

    // Budget row: the dual objective of the relaxation must stay under rhs.
    lp::LinRow budget;
    budget.name = row.name + ":dual";
    budget.sense = lp::RowSense::LE;
    budget.rhs = row.rhs;
    budget.terms = row.fixed;
    for (int k = 0; k < m; ++k) {
        const int t = row.t1 + k;
        budget.terms.push_back({pi_hi[k], ex.total_max(t)});
        budget.terms.push_back({pi_lo[k], -ex.total_min(t)});
        if (k > 0) {
            budget.terms.push_back({phi_hi[k], ex.delta_max(t - 1)});
            budget.terms.push_back({phi_lo[k], -ex.delta_min(t - 1)});
        }
    }
    prog.add_row(std::move(budget));

    // Stationarity: the multipliers absorb the period's total-power
    // coefficient a_t, which is itself linear in the policy variables.
    for (int k = 0; k < m; ++k) {
        lp::LinRow st;
        st.name = row.name + ":stat" + std::to_string(row.t1 + k);
        st.sense = lp::RowSense::EQ;
        st.rhs = 0.0;
        st.terms.push_back({pi_hi[k], 1.0});
        st.terms.push_back({pi_lo[k], -1.0});
        if (k > 0) {
            st.terms.push_back({phi_hi[k], 1.0});
            st.terms.push_back({phi_lo[k], -1.0});
        }
        if (k + 1 < m) {
            st.terms.push_back({phi_hi[k + 1], -1.0});
            st.terms.push_back({phi_lo[k + 1], 1.0});
        }
        for (const auto& term : row.a[k]) st.terms.push_back({term.var, -term.coef});
        prog.add_row(std::move(st));
    }
}

RobustRow to_robust_row(const IntertemporalRow& row) {
    RobustRow out;
    out.name = row.name;
    out.fixed = row.fixed;
    out.rhs = row.rhs;
    for (int k = 0; k < static_cast<int>(row.a.size()); ++k)
        for (const auto& term : row.a[k])
            out.scenario.push_back({term.var, term.coef, row.t1 + k, -1});
    return out;
}

void add_dualized_robust_row(lp::MathProgram& prog, const RobustRow& row,
                             const uncertainty::SetPolyhedron& poly) {
    const int nrows = poly.prog.num_rows();
    const int ncols = poly.prog.num_vars();

    // One multiplier per set-polyhedron row; >= rows are negated so all
    // inequality multipliers are nonnegative, equality multipliers free.
    std::vector<int> lam(nrows);
    std::vector<double> sign(nrows, 1.0);
    for (int r = 0; r < nrows; ++r) {
        const lp::RowSense sense = poly.prog.row(r).sense;
        const double lb = sense == lp::RowSense::EQ ? -lp::kInf : 0.0;
        if (sense == lp::RowSense::GE) sign[r] = -1.0;
        lam[r] = prog.add_var(row.name + ":lam" + std::to_string(r), lb, lp::kInf);
    }

    // Column rows: G' lam = c, where c is nonzero only on availability
    // coordinates and linear in the policy variables there.
    std::vector<std::vector<lp::LinTerm>> col(ncols);
    for (int r = 0; r < nrows; ++r)
        for (const auto& term : poly.prog.row(r).terms)
            col[term.var].push_back({lam[r], sign[r] * term.coef});
    for (const ScenarioTerm& st : row.scenario) {
        if (st.unit >= 0) {
            col[poly.pbar(st.unit, st.t)].push_back({st.var, -st.coef});
        } else {
            for (int i = 0; i < poly.n; ++i)
                col[poly.pbar(i, st.t)].push_back({st.var, -st.coef});
        }
    }
    for (int j = 0; j < ncols; ++j) {
        if (col[j].empty()) continue;
        lp::LinRow eq;
        eq.name = row.name + ":col" + std::to_string(j);
        eq.sense = lp::RowSense::EQ;
        eq.rhs = 0.0;
        eq.terms = std::move(col[j]);
        prog.add_row(std::move(eq));
    }

    // Weak duality: fixed' x + h' lam bounds the worst case from above.
    lp::LinRow bound;
    bound.name = row.name + ":dual";
    bound.sense = lp::RowSense::LE;
    bound.rhs = row.rhs;
    bound.terms = row.fixed;
    for (int r = 0; r < nrows; ++r) {
        const double h = sign[r] * poly.prog.row(r).rhs;
        if (h != 0.0) bound.terms.push_back({lam[r], h});
    }
    prog.add_row(std::move(bound));
}

std::vector<lp::LinRow> generation_limit_rows(const core::PowerSystem& sys,
                                              const core::CommitmentVars& cv,
                                              const PolicyVars& pv,
                                              const uncertainty::TotalExtrema& ex,
                                              const uncertainty::UnitExtrema& boxes) {
    std::vector<lp::LinRow> rows;
    const int T = sys.horizon;
    for (int t = 0; t < T; ++t) {
        const double exts[2] = {ex.total_min(t), ex.total_max(t)};
        for (int i = 0; i < sys.num_gen(); ++i) {
            const core::Generator& g = sys.generators[i];
            for (double e : exts) {
                rows.push_back({{{pv.w_gen(i, t), 1.0},
                                 {pv.W_gen(i, t), e},
                                 {cv.on[i][t], -g.p_max[t]}},
                                lp::RowSense::LE, 0.0, tag("gen_max", g.id, t)});
                rows.push_back({{{pv.w_gen(i, t), 1.0},
                                 {pv.W_gen(i, t), e},
                                 {cv.on[i][t], -g.p_min[t]}},
                                lp::RowSense::GE, 0.0, tag("gen_min", g.id, t)});
            }
        }
        for (int i = 0; i < sys.num_sto(); ++i) {
            const core::StorageUnit& s = sys.storages[i];
            for (double e : exts) {
                rows.push_back({{{pv.w_dis(i, t), 1.0}, {pv.W_dis(i, t), e}},
                                lp::RowSense::LE, s.discharge_max[t],
                                tag("dis_max", s.id, t)});
                rows.push_back({{{pv.w_dis(i, t), 1.0}, {pv.W_dis(i, t), e}},
                                lp::RowSense::GE, s.discharge_min[t],
                                tag("dis_min", s.id, t)});
                rows.push_back({{{pv.w_chg(i, t), 1.0}, {pv.W_chg(i, t), e}},
                                lp::RowSense::LE, s.charge_max[t],
                                tag("chg_max", s.id, t)});
                rows.push_back({{{pv.w_chg(i, t), 1.0}, {pv.W_chg(i, t), e}},
                                lp::RowSense::GE, s.charge_min[t],
                                tag("chg_min", s.id, t)});
            }
        }
        // Renewable output responds to the unit's own availability, so its
        // limits bind at the per-unit interval ends rather than the totals.
        for (int j = 0; j < sys.num_ren(); ++j) {
            const core::RenewableUnit& r = sys.renewables[j];
            for (double e : {boxes.lo(j, t), boxes.hi(j, t)}) {
                rows.push_back({{{pv.w_ren(j, t), 1.0}, {pv.W_ren(t), e}},
                                lp::RowSense::GE, 0.0, tag("ren_min", r.id, t)});
                rows.push_back({{{pv.w_ren(j, t), 1.0}, {pv.W_ren(t), e}},
                                lp::RowSense::LE, e, tag("ren_avail", r.id, t)});
            }
        }
    }
    return rows;
}

bool balance_is_reformulable(const uncertainty::DynamicUncertaintySet& set) {
    return set.gamma > 0.0 && (set.g.array() > 0.0).all();
}

namespace {
// Balance terms of period t: the intercepts as fixed terms, the slopes as
// scenario terms (storage and generators on the total, renewables on their
// own availability).
void balance_parts(const core::PowerSystem& sys, const PolicyVars& pv, int t,
                   double s, std::vector<lp::LinTerm>& fixed,
                   std::vector<ScenarioTerm>& scen) {
    for (int i = 0; i < sys.num_gen(); ++i) {
        fixed.push_back({pv.w_gen(i, t), s});
        scen.push_back({pv.W_gen(i, t), s, t, -1});
    }
    for (int i = 0; i < sys.num_sto(); ++i) {
        fixed.push_back({pv.w_dis(i, t), s});
        fixed.push_back({pv.w_chg(i, t), -s});
        scen.push_back({pv.W_dis(i, t), s, t, -1});
        scen.push_back({pv.W_chg(i, t), -s, t, -1});
    }
    for (int j = 0; j < sys.num_ren(); ++j) {
        fixed.push_back({pv.w_ren(j, t), s});
        scen.push_back({pv.W_ren(t), s, t, j});
    }
}
}  // namespace

std::vector<lp::LinRow> balance_rows(const core::PowerSystem& sys,
                                     const PolicyVars& pv) {
    std::vector<lp::LinRow> rows;
    for (int t = 0; t < sys.horizon; ++t) {
        lp::LinRow intercept;
        intercept.name = "balance_w[" + std::to_string(t) + "]";
        intercept.sense = lp::RowSense::EQ;
        intercept.rhs = sys.total_demand(t);
        lp::LinRow slope;
        slope.name = "balance_W[" + std::to_string(t) + "]";
        slope.sense = lp::RowSense::EQ;
        slope.rhs = 0.0;
        for (int i = 0; i < sys.num_gen(); ++i) {
            intercept.terms.push_back({pv.w_gen(i, t), 1.0});
            slope.terms.push_back({pv.W_gen(i, t), 1.0});
        }
        for (int i = 0; i < sys.num_sto(); ++i) {
            intercept.terms.push_back({pv.w_dis(i, t), 1.0});
            intercept.terms.push_back({pv.w_chg(i, t), -1.0});
            slope.terms.push_back({pv.W_dis(i, t), 1.0});
            slope.terms.push_back({pv.W_chg(i, t), -1.0});
        }
        for (int j = 0; j < sys.num_ren(); ++j)
            intercept.terms.push_back({pv.w_ren(j, t), 1.0});
        slope.terms.push_back({pv.W_ren(t), 1.0});
        rows.push_back(std::move(intercept));
        rows.push_back(std::move(slope));
    }
    return rows;
}

std::vector<RobustRow> balance_robust_rows(const core::PowerSystem& sys,
                                           const PolicyVars& pv) {
    std::vector<RobustRow> rows;
    for (int t = 0; t < sys.horizon; ++t) {
        for (double s : {1.0, -1.0}) {
            RobustRow r;
            r.name = std::string(s > 0 ? "balance_hi[" : "balance_lo[") +
                     std::to_string(t) + "]";
            r.rhs = s * sys.total_demand(t);
            balance_parts(sys, pv, t, s, r.fixed, r.scenario);
            rows.push_back(std::move(r));
        }
    }
    return rows;
}

std::vector<RobustRow> transmission_robust_rows(const core::PowerSystem& sys,
                                                const PolicyVars& pv) {
    std::vector<RobustRow> rows;
    for (int l = 0; l < sys.num_lines(); ++l) {
        const core::TransmissionLine& line = sys.lines[l];
        for (int t = 0; t < sys.horizon; ++t) {
            const double demand_part = line.alpha_demand.dot(sys.demand.col(t));
            for (double s : {1.0, -1.0}) {
                RobustRow r;
                r.name = tag(s > 0 ? "flow_max" : "flow_min", line.id, t);
                r.transmission = true;
                r.rhs = line.flow_limit + s * demand_part;
                for (int i = 0; i < sys.num_gen(); ++i) {
                    const double c = s * line.alpha_generator[i];
                    r.fixed.push_back({pv.w_gen(i, t), c});
                    r.scenario.push_back({pv.W_gen(i, t), c, t, -1});
                }
                for (int i = 0; i < sys.num_sto(); ++i) {
                    const double c = s * line.alpha_storage[i];
                    r.fixed.push_back({pv.w_dis(i, t), c});
                    r.fixed.push_back({pv.w_chg(i, t), -c});
                    r.scenario.push_back({pv.W_dis(i, t), c, t, -1});
                    r.scenario.push_back({pv.W_chg(i, t), -c, t, -1});
                }
                for (int j = 0; j < sys.num_ren(); ++j) {
                    const double c = s * line.alpha_renewable[j];
                    r.fixed.push_back({pv.w_ren(j, t), c});
                    r.scenario.push_back({pv.W_ren(t), c, t, j});
                }
                rows.push_back(std::move(r));
            }
        }
    }
    return rows;
}

std::vector<IntertemporalRow> intertemporal_rows(const core::PowerSystem& sys,
                                                 const core::CommitmentVars& cv,
                                                 const PolicyVars& pv, int z_var) {
    std::vector<IntertemporalRow> rows;
    const int T = sys.horizon;
    const double dt = sys.period_hours;

    // Worst-case dispatch cost: z bounds the policy cost over the whole set.
    {
        IntertemporalRow cost;
        cost.name = "cost";
        cost.t1 = 0;
        cost.t2 = T - 1;
        cost.rhs = 0.0;
        cost.fixed.push_back({z_var, -1.0});
        cost.a.resize(T);
        for (int t = 0; t < T; ++t)
            for (int i = 0; i < sys.num_gen(); ++i) {
                const double c = sys.generators[i].variable_cost * dt;
                cost.fixed.push_back({pv.w_gen(i, t), c});
                cost.a[t].push_back({pv.W_gen(i, t), c});
            }
        rows.push_back(std::move(cost));
    }

    for (int i = 0; i < sys.num_gen(); ++i) {
        const core::Generator& g = sys.generators[i];
        for (int t = 0; t < T; ++t) {
            IntertemporalRow up;
            up.name = tag("ramp_up", g.id, t);
            up.t1 = std::max(0, t - 1);
            up.t2 = t;
            up.a.resize(up.t2 - up.t1 + 1);
            up.fixed.push_back({pv.w_gen(i, t), 1.0});
            up.fixed.push_back({cv.start[i][t], -g.startup_ramp[t] * dt});
            up.a.back().push_back({pv.W_gen(i, t), 1.0});
            IntertemporalRow down;
            down.name = tag("ramp_down", g.id, t);
            down.t1 = up.t1;
            down.t2 = t;
            down.a.resize(up.a.size());
            down.fixed.push_back({pv.w_gen(i, t), -1.0});
            down.fixed.push_back({cv.on[i][t], -g.ramp_down[t] * dt});
            down.fixed.push_back({cv.shut[i][t], -g.shutdown_ramp[t] * dt});
            down.a.back().push_back({pv.W_gen(i, t), -1.0});
            if (t == 0) {
                const double on0 = g.initial_on ? 1.0 : 0.0;
                up.rhs = g.initial_output + g.ramp_up[t] * dt * on0;
                down.rhs = -g.initial_output;
            } else {
                up.rhs = 0.0;
                up.fixed.push_back({pv.w_gen(i, t - 1), -1.0});
                up.fixed.push_back({cv.on[i][t - 1], -g.ramp_up[t] * dt});
                up.a.front().push_back({pv.W_gen(i, t - 1), -1.0});
                down.rhs = 0.0;
                down.fixed.push_back({pv.w_gen(i, t - 1), 1.0});
                down.a.front().push_back({pv.W_gen(i, t - 1), 1.0});
            }
            rows.push_back(std::move(up));
            rows.push_back(std::move(down));
        }
    }

    // Stored energy stays in [0, capacity] for every prefix of the horizon.
    for (int i = 0; i < sys.num_sto(); ++i) {
        const core::StorageUnit& s = sys.storages[i];
        for (int t = 0; t < T; ++t) {
            for (double sign : {1.0, -1.0}) {
                IntertemporalRow r;
                r.name = tag(sign > 0 ? "energy_max" : "energy_min", s.id, t);
                r.t1 = 0;
                r.t2 = t;
                r.rhs = sign > 0 ? s.energy_capacity - s.initial_level
                                 : s.initial_level;
                r.a.resize(t + 1);
                for (int tau = 0; tau <= t; ++tau) {
                    r.fixed.push_back({pv.w_chg(i, tau), sign * s.efficiency * dt});
                    r.fixed.push_back({pv.w_dis(i, tau), -sign * dt});
                    r.a[tau].push_back({pv.W_chg(i, tau), sign * s.efficiency * dt});
                    r.a[tau].push_back({pv.W_dis(i, tau), -sign * dt});
                }
                rows.push_back(std::move(r));
            }
        }
    }
    return rows;
}

MasterProblem build_master(const core::PowerSystem& sys,
                           const uncertainty::DynamicUncertaintySet& set,
                           const uncertainty::TotalExtrema& ex,
                           const uncertainty::UnitExtrema& boxes,
                           const MasterOptions& opts) {
    MasterProblem m;
    m.commit = core::add_commitment_vars(m.prog, sys);
    for (auto& row : core::build_commitment_constraints(sys, m.commit))
        m.prog.add_row(std::move(row));
    core::add_commitment_cost(m.prog, sys, m.commit);

    m.pol = add_policy_vars(m.prog, sys);
    m.z = m.prog.add_var("z", -lp::kInf, lp::kInf);
    m.prog.set_objective(m.z, 1.0);

    for (auto& row : generation_limit_rows(sys, m.commit, m.pol, ex, boxes))
        m.prog.add_row(std::move(row));

    if (balance_is_reformulable(set)) {
        for (auto& row : balance_rows(sys, m.pol)) m.prog.add_row(std::move(row));
    } else {
        m.balance_via_cg = true;
        m.warnings.push_back(
            "uncertainty set is degenerate (zero spread or zero gamma); "
            "energy balance enforced by constraint generation");
        for (auto& row : balance_robust_rows(sys, m.pol))
            m.robust_rows.push_back(std::move(row));
    }

    for (auto& row : intertemporal_rows(sys, m.commit, m.pol, m.z)) {
        if (opts.oa)
            add_oa_dual_block(m.prog, row, ex);
        else
            m.robust_rows.push_back(to_robust_row(row));
    }

    for (auto& row : transmission_robust_rows(sys, m.pol))
        m.robust_rows.push_back(std::move(row));
    return m;
}

}  // namespace robuc::robust
