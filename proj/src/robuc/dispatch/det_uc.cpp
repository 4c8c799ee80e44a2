// SPDX-License-Identifier: Apache-2.0
#include "robuc/dispatch/det_uc.hpp"

#include <cmath>
#include <stdexcept>

#include "robuc/core/constraints.hpp"
#include "robuc/dispatch/ed.hpp"
#include "robuc/lp/backend.hpp"

namespace robuc::dispatch {

ReserveRequirement reserve_rule(const core::PowerSystem& sys,
                                const std::vector<Eigen::MatrixXd>& trajectories,
                                double gamma) {
    const int N = static_cast<int>(trajectories.size());
    if (N < 2)
        throw std::invalid_argument("reserve rule needs at least two trajectories");
    if (gamma < 0) throw std::invalid_argument("gamma must be nonnegative");
    const int T = sys.horizon;
    ReserveRequirement req = ReserveRequirement::zero(T);
    for (int t = 0; t < T; ++t) {
        Eigen::VectorXd net(N);
        for (int k = 0; k < N; ++k)
            net[k] = sys.total_demand(t) - trajectories[k].col(t).sum();
        const double mean = net.mean();
        const double var = (net.array() - mean).square().sum() / (N - 1);
        req.up[t] = req.down[t] = gamma * std::sqrt(var);
    }
    return req;
}

robust::UcSolution solve_deterministic_uc(const core::PowerSystem& sys,
                                          const Eigen::MatrixXd& forecast,
                                          const ReserveRequirement& reserves,
                                          double gap) {
    sys.validate();
    const int T = sys.horizon;
    const int ng = sys.num_gen();
    if (forecast.rows() != sys.num_ren() || forecast.cols() != T)
        throw std::invalid_argument("forecast must be renewable x horizon");
    if (reserves.down.size() != T || reserves.up.size() != T ||
        (reserves.down.array() < 0).any() || (reserves.up.array() < 0).any())
        throw std::invalid_argument("reserve requirements must be >= 0 per period");

    lp::MathProgram prog;
    core::CommitmentVars cv = core::add_commitment_vars(prog, sys);
    for (auto& row : core::build_commitment_constraints(sys, cv))
        prog.add_row(std::move(row));
    core::add_commitment_cost(prog, sys, cv);

    const double dt = sys.period_hours;
    std::vector<std::vector<int>> gen(T), ren(T), dis(T), chg(T);
    std::vector<std::vector<int>> r_up(T), r_dn(T);
    for (int t = 0; t < T; ++t) {
        gen[t].resize(ng);
        r_up[t].resize(ng);
        r_dn[t].resize(ng);
        for (int i = 0; i < ng; ++i) {
            gen[t][i] = prog.add_var("pg", 0.0, lp::kInf);
            prog.set_objective(gen[t][i], sys.generators[i].variable_cost * dt);
            r_up[t][i] = prog.add_var("r+", 0.0, lp::kInf);
            r_dn[t][i] = prog.add_var("r-", 0.0, lp::kInf);
        }
        for (int j = 0; j < sys.num_ren(); ++j)
            ren[t].push_back(prog.add_var("pr", 0.0, forecast(j, t)));
        for (int i = 0; i < sys.num_sto(); ++i) {
            dis[t].push_back(prog.add_var("pd", sys.storages[i].discharge_min[t],
                                          sys.storages[i].discharge_max[t]));
            chg[t].push_back(prog.add_var("pc", sys.storages[i].charge_min[t],
                                          sys.storages[i].charge_max[t]));
        }
    }
    for (int t = 0; t < T; ++t) {
        for (int i = 0; i < ng; ++i) {
            const core::Generator& g = sys.generators[i];
            // reserves carve headroom out of the commitment-gated range
            prog.add_row({{{gen[t][i], 1.0},
                           {r_up[t][i], 1.0},
                           {cv.on[i][t], -g.p_max[t]}},
                          lp::RowSense::LE, 0.0, "gen_max"});
            prog.add_row({{{gen[t][i], 1.0},
                           {r_dn[t][i], -1.0},
                           {cv.on[i][t], -g.p_min[t]}},
                          lp::RowSense::GE, 0.0, "gen_min"});
            std::vector<lp::LinTerm> diff = {{gen[t][i], 1.0}};
            std::vector<lp::LinTerm> up_terms, dn_terms;
            double rhs_up = 0.0, rhs_dn = 0.0;
            if (t == 0) {
                rhs_up = g.initial_output +
                         g.ramp_up[t] * dt * (g.initial_on ? 1.0 : 0.0);
                rhs_dn = -g.initial_output;
            } else {
                diff.push_back({gen[t - 1][i], -1.0});
                up_terms.push_back({cv.on[i][t - 1], -g.ramp_up[t] * dt});
            }
            auto up = diff;
            up.insert(up.end(), up_terms.begin(), up_terms.end());
            up.push_back({cv.start[i][t], -g.startup_ramp[t] * dt});
            prog.add_row({up, lp::RowSense::LE, rhs_up, "ramp_up"});
            auto dn = diff;
            dn.push_back({cv.on[i][t], g.ramp_down[t] * dt});
            dn.push_back({cv.shut[i][t], g.shutdown_ramp[t] * dt});
            prog.add_row({dn, lp::RowSense::GE, rhs_dn, "ramp_down"});
        }
        std::vector<lp::LinTerm> up_req, dn_req;
        for (int i = 0; i < ng; ++i) {
            up_req.push_back({r_up[t][i], 1.0});
            dn_req.push_back({r_dn[t][i], 1.0});
        }
        prog.add_row({up_req, lp::RowSense::GE, reserves.up[t], "reserve_up"});
        prog.add_row({dn_req, lp::RowSense::GE, reserves.down[t], "reserve_down"});

        for (int i = 0; i < sys.num_sto(); ++i) {
            const core::StorageUnit& s = sys.storages[i];
            std::vector<lp::LinTerm> energy;
            for (int k = 0; k <= t; ++k) {
                energy.push_back({chg[k][i], s.efficiency * dt});
                energy.push_back({dis[k][i], -dt});
            }
            prog.add_row({energy, lp::RowSense::LE,
                          s.energy_capacity - s.initial_level, "energy_max"});
            prog.add_row({energy, lp::RowSense::GE, -s.initial_level, "energy_min"});
        }
        for (int l = 0; l < sys.num_lines(); ++l) {
            const core::TransmissionLine& line = sys.lines[l];
            std::vector<lp::LinTerm> terms;
            for (int i = 0; i < ng; ++i)
                terms.push_back({gen[t][i], line.alpha_generator[i]});
            for (int j = 0; j < sys.num_ren(); ++j)
                terms.push_back({ren[t][j], line.alpha_renewable[j]});
            for (int i = 0; i < sys.num_sto(); ++i) {
                terms.push_back({dis[t][i], line.alpha_storage[i]});
                terms.push_back({chg[t][i], -line.alpha_storage[i]});
            }
            const double d = line.alpha_demand.dot(sys.demand.col(t));
            prog.add_row({terms, lp::RowSense::LE, line.flow_limit + d, "flow_max"});
            prog.add_row({terms, lp::RowSense::GE, -line.flow_limit + d, "flow_min"});
        }
        std::vector<lp::LinTerm> bal;
        for (int i = 0; i < ng; ++i) bal.push_back({gen[t][i], 1.0});
        for (int j = 0; j < sys.num_ren(); ++j) bal.push_back({ren[t][j], 1.0});
        for (int i = 0; i < sys.num_sto(); ++i) {
            bal.push_back({dis[t][i], 1.0});
            bal.push_back({chg[t][i], -1.0});
        }
        prog.add_row({bal, lp::RowSense::EQ, sys.total_demand(t), "balance"});
    }

    lp::BackendOptions bo;
    bo.gap = gap;
    const lp::SolveResult res = lp::SolverBackend(bo).solve(prog);
    if (res.status == lp::SolveStatus::Infeasible)
        throw DispatchError(
            "deterministic unit commitment infeasible; reserve levels may "
            "exceed available headroom");
    if (res.x.empty()) throw DispatchError("deterministic unit commitment failed");

    robust::UcSolution sol;
    sol.schedule = robust::extract_schedule(cv, res.x);
    sol.policy = robust::AffinePolicy::zero(sys);
    double dispatch_cost = 0.0;
    for (int t = 0; t < T; ++t) {
        for (int i = 0; i < ng; ++i) {
            sol.policy.w_gen(i, t) = res.x[gen[t][i]];
            dispatch_cost += sys.generators[i].variable_cost * res.x[gen[t][i]] * dt;
        }
        for (int j = 0; j < sys.num_ren(); ++j)
            sol.policy.w_ren(j, t) = res.x[ren[t][j]];
        for (int i = 0; i < sys.num_sto(); ++i) {
            sol.policy.w_dis(i, t) = res.x[dis[t][i]];
            sol.policy.w_chg(i, t) = res.x[chg[t][i]];
        }
    }
    sol.worst_case_cost = dispatch_cost;
    sol.commitment_cost = 0.0;
    for (int i = 0; i < ng; ++i)
        for (int t = 0; t < T; ++t)
            sol.commitment_cost +=
                sys.generators[i].no_load_cost * sol.schedule.on(i, t) +
                sys.generators[i].startup_cost * sol.schedule.start(i, t) +
                sys.generators[i].shutdown_cost * sol.schedule.shut(i, t);
    sol.objective = sol.commitment_cost + dispatch_cost;
    sol.stats.certified = true;
    sol.stats.iterations = 1;
    return sol;
}

}  // namespace robuc::dispatch
