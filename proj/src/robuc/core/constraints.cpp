// SPDX-License-Identifier: Apache-2.0
#include "robuc/core/constraints.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace robuc::core {

namespace {
std::string tag(const std::string& base, const std::string& id, int t) {
    return base + "[" + id + "," + std::to_string(t) + "]";
}
}  // namespace

CommitmentVars add_commitment_vars(lp::MathProgram& prog, const PowerSystem& sys) {
    CommitmentVars v;
    const int ng = sys.num_gen();
    const int T = sys.horizon;
    v.on.resize(ng);
    v.start.resize(ng);
    v.shut.resize(ng);
    for (int i = 0; i < ng; ++i) {
        const std::string& id = sys.generators[i].id;
        for (int t = 0; t < T; ++t) {
            v.on[i].push_back(prog.add_var(tag("on", id, t), 0.0, 1.0, lp::VarKind::Binary));
            v.start[i].push_back(prog.add_var(tag("start", id, t), 0.0, 1.0, lp::VarKind::Binary));
            v.shut[i].push_back(prog.add_var(tag("shut", id, t), 0.0, 1.0, lp::VarKind::Binary));
        }
    }
    return v;
}

std::vector<lp::LinRow> build_commitment_constraints(const PowerSystem& sys,
                                                     const CommitmentVars& v) {
    std::vector<lp::LinRow> rows;
    const int T = sys.horizon;
    for (int i = 0; i < sys.num_gen(); ++i) {
        const Generator& gen = sys.generators[i];
        const double on0 = gen.initial_on ? 1.0 : 0.0;
        for (int t = 0; t < T; ++t) {
            // State transition: start - shut = on_t - on_{t-1}.
            lp::LinRow tr;
            tr.name = tag("transition", gen.id, t);
            tr.sense = lp::RowSense::EQ;
            tr.terms = {{v.start[i][t], 1.0}, {v.shut[i][t], -1.0}, {v.on[i][t], -1.0}};
            if (t == 0) {
                tr.rhs = -on0;
            } else {
                tr.terms.push_back({v.on[i][t - 1], 1.0});
                tr.rhs = 0.0;
            }
            rows.push_back(std::move(tr));

            lp::LinRow ex;
            ex.name = tag("start_shut_excl", gen.id, t);
            ex.sense = lp::RowSense::LE;
            ex.rhs = 1.0;
            ex.terms = {{v.start[i][t], 1.0}, {v.shut[i][t], 1.0}};
            rows.push_back(std::move(ex));

            // Minimum up: a start at t pins the unit on through its window.
            for (int tau = t + 1; tau < std::min(T, t + gen.min_up); ++tau) {
                lp::LinRow r;
                r.name = tag("min_up", gen.id, t) + ":" + std::to_string(tau);
                r.sense = lp::RowSense::LE;
                r.rhs = 0.0;
                r.terms = {{v.start[i][t], 1.0}, {v.on[i][tau], -1.0}};
                rows.push_back(std::move(r));
            }
            // Minimum down: a shutdown at t keeps the unit off through its window.
            for (int tau = t + 1; tau < std::min(T, t + gen.min_down); ++tau) {
                lp::LinRow r;
                r.name = tag("min_down", gen.id, t) + ":" + std::to_string(tau);
                r.sense = lp::RowSense::LE;
                r.rhs = 1.0;
                r.terms = {{v.shut[i][t], 1.0}, {v.on[i][tau], 1.0}};
                rows.push_back(std::move(r));
            }
        }
        // Carry-over of the initial state: if the unit entered the horizon
        // mid-way through a minimum up/down window, the remainder is forced.
        const int remaining = gen.initial_on
                                  ? gen.min_up - gen.initial_hours_in_state
                                  : gen.min_down - gen.initial_hours_in_state;
        for (int t = 0; t < std::min(T, remaining); ++t) {
            lp::LinRow r;
            r.name = tag("initial_state", gen.id, t);
            r.sense = lp::RowSense::EQ;
            r.rhs = on0;
            r.terms = {{v.on[i][t], 1.0}};
            rows.push_back(std::move(r));
        }
    }
    return rows;
}

void add_commitment_cost(lp::MathProgram& prog, const PowerSystem& sys,
                         const CommitmentVars& v) {
    for (int i = 0; i < sys.num_gen(); ++i) {
        const Generator& gen = sys.generators[i];
        for (int t = 0; t < sys.horizon; ++t) {
            prog.add_objective(v.on[i][t], gen.no_load_cost);
            prog.add_objective(v.start[i][t], gen.startup_cost);
            prog.add_objective(v.shut[i][t], gen.shutdown_cost);
        }
    }
}

DispatchVars add_dispatch_vars(lp::MathProgram& prog, const PowerSystem& sys, int t) {
    DispatchVars v;
    for (const Generator& g : sys.generators)
        v.gen.push_back(prog.add_var(tag("pg", g.id, t), 0.0, g.p_max[t]));
    for (const RenewableUnit& r : sys.renewables)
        v.ren.push_back(prog.add_var(tag("pr", r.id, t), 0.0, r.p_max_profile[t]));
    for (const StorageUnit& s : sys.storages) {
        v.discharge.push_back(prog.add_var(tag("psd", s.id, t), 0.0, s.discharge_max[t]));
        v.charge.push_back(prog.add_var(tag("psc", s.id, t), 0.0, s.charge_max[t]));
    }
    return v;
}

DispatchHistory initial_history(const PowerSystem& sys) {
    DispatchHistory h;
    h.prev_gen_output.resize(sys.num_gen());
    for (int i = 0; i < sys.num_gen(); ++i)
        h.prev_gen_output[i] = sys.generators[i].initial_output;
    h.stored_energy.resize(sys.num_sto());
    for (int i = 0; i < sys.num_sto(); ++i)
        h.stored_energy[i] = sys.storages[i].initial_level;
    return h;
}

CommitmentAt commitment_at(const PowerSystem& sys, const CommitmentSchedule& sch, int t) {
    const int ng = sys.num_gen();
    CommitmentAt c;
    c.on.resize(ng);
    c.start.resize(ng);
    c.shut.resize(ng);
    c.on_prev.resize(ng);
    for (int i = 0; i < ng; ++i) {
        c.on[i] = sch.on(i, t);
        c.start[i] = sch.start(i, t);
        c.shut[i] = sch.shut(i, t);
        c.on_prev[i] = (t == 0) ? (sys.generators[i].initial_on ? 1.0 : 0.0)
                                : static_cast<double>(sch.on(i, t - 1));
    }
    return c;
}

std::vector<lp::LinRow> dispatch_feasible_set(const PowerSystem& sys,
                                              const CommitmentAt& commit, int t,
                                              const DispatchHistory& history,
                                              const Eigen::VectorXd& available_t,
                                              const DispatchVars& v) {
    if (t < 0 || t >= sys.horizon) throw std::out_of_range("dispatch period out of range");
    if (history.prev_gen_output.size() != sys.num_gen() ||
        history.stored_energy.size() != sys.num_sto())
        throw std::invalid_argument("dispatch history dimension mismatch");
    if (available_t.size() != sys.num_ren())
        throw std::invalid_argument("available renewable vector dimension mismatch");

    const double dt = sys.period_hours;
    std::vector<lp::LinRow> rows;

    for (int i = 0; i < sys.num_gen(); ++i) {
        const Generator& g = sys.generators[i];
        rows.push_back({{{v.gen[i], 1.0}}, lp::RowSense::LE, commit.on[i] * g.p_max[t],
                        tag("gen_max", g.id, t)});
        rows.push_back({{{v.gen[i], 1.0}}, lp::RowSense::GE, commit.on[i] * g.p_min[t],
                        tag("gen_min", g.id, t)});
        const double up = g.ramp_up[t] * dt * commit.on_prev[i] +
                          g.startup_ramp[t] * dt * commit.start[i];
        const double down = g.ramp_down[t] * dt * commit.on[i] +
                            g.shutdown_ramp[t] * dt * commit.shut[i];
        rows.push_back({{{v.gen[i], 1.0}}, lp::RowSense::LE,
                        history.prev_gen_output[i] + up, tag("ramp_up", g.id, t)});
        rows.push_back({{{v.gen[i], 1.0}}, lp::RowSense::GE,
                        history.prev_gen_output[i] - down, tag("ramp_down", g.id, t)});
    }

    for (int i = 0; i < sys.num_ren(); ++i) {
        const RenewableUnit& r = sys.renewables[i];
        rows.push_back({{{v.ren[i], 1.0}}, lp::RowSense::LE, available_t[i],
                        tag("ren_avail", r.id, t)});
        rows.push_back({{{v.ren[i], 1.0}}, lp::RowSense::GE, 0.0, tag("ren_min", r.id, t)});
    }

    for (int i = 0; i < sys.num_sto(); ++i) {
        const StorageUnit& s = sys.storages[i];
        rows.push_back({{{v.discharge[i], 1.0}}, lp::RowSense::LE, s.discharge_max[t],
                        tag("dis_max", s.id, t)});
        rows.push_back({{{v.discharge[i], 1.0}}, lp::RowSense::GE, s.discharge_min[t],
                        tag("dis_min", s.id, t)});
        rows.push_back({{{v.charge[i], 1.0}}, lp::RowSense::LE, s.charge_max[t],
                        tag("chg_max", s.id, t)});
        rows.push_back({{{v.charge[i], 1.0}}, lp::RowSense::GE, s.charge_min[t],
                        tag("chg_min", s.id, t)});
        // Stored energy after this period stays within [0, capacity]; the
        // accumulated balance through t-1 is a constant in history.
        const double q_prev = history.stored_energy[i];
        std::vector<lp::LinTerm> terms = {{v.charge[i], s.efficiency * dt},
                                          {v.discharge[i], -dt}};
        rows.push_back({terms, lp::RowSense::LE, s.energy_capacity - q_prev,
                        tag("energy_max", s.id, t)});
        rows.push_back({terms, lp::RowSense::GE, -q_prev, tag("energy_min", s.id, t)});
    }

    for (int l = 0; l < sys.num_lines(); ++l) {
        const TransmissionLine& line = sys.lines[l];
        std::vector<lp::LinTerm> terms;
        for (int i = 0; i < sys.num_gen(); ++i)
            terms.push_back({v.gen[i], line.alpha_generator[i]});
        for (int i = 0; i < sys.num_ren(); ++i)
            terms.push_back({v.ren[i], line.alpha_renewable[i]});
        for (int i = 0; i < sys.num_sto(); ++i) {
            terms.push_back({v.discharge[i], line.alpha_storage[i]});
            terms.push_back({v.charge[i], -line.alpha_storage[i]});
        }
        const double demand_part = line.alpha_demand.dot(sys.demand.col(t));
        rows.push_back({terms, lp::RowSense::LE, line.flow_limit + demand_part,
                        tag("flow_max", line.id, t)});
        rows.push_back({terms, lp::RowSense::GE, -line.flow_limit + demand_part,
                        tag("flow_min", line.id, t)});
    }

    {
        std::vector<lp::LinTerm> terms;
        for (int j : v.gen) terms.push_back({j, 1.0});
        for (int j : v.ren) terms.push_back({j, 1.0});
        for (int i = 0; i < sys.num_sto(); ++i) {
            terms.push_back({v.discharge[i], 1.0});
            terms.push_back({v.charge[i], -1.0});
        }
        rows.push_back({terms, lp::RowSense::EQ, sys.total_demand(t),
                        "balance[" + std::to_string(t) + "]"});
    }
    return rows;
}

double dispatch_cost(const PowerSystem& sys, const Eigen::MatrixXd& gen_output_by_period) {
    double cost = 0.0;
    for (int i = 0; i < gen_output_by_period.rows(); ++i)
        cost += sys.generators[i].variable_cost * gen_output_by_period.row(i).sum();
    return cost * sys.period_hours;
}

double line_flow(const PowerSystem& sys, int l, const Eigen::VectorXd& gen,
                 const Eigen::VectorXd& ren, const Eigen::VectorXd& discharge,
                 const Eigen::VectorXd& charge, int t) {
    const TransmissionLine& line = sys.lines[l];
    double flow = 0.0;
    if (gen.size() > 0) flow += line.alpha_generator.dot(gen);
    if (ren.size() > 0) flow += line.alpha_renewable.dot(ren);
    if (discharge.size() > 0) flow += line.alpha_storage.dot(discharge - charge);
    flow -= line.alpha_demand.dot(sys.demand.col(t));
    return flow;
}

}  // namespace robuc::core
