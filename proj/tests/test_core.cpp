// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>
#include <sstream>
#include <vector>

#include "robuc/core/constraints.hpp"
#include "robuc/core/system.hpp"
#include "robuc/core/system_io.hpp"
#include "robuc/lp/backend.hpp"

using namespace robuc;

namespace {

core::Generator make_gen(const std::string& id, int T, double pmin, double pmax,
                         double ramp, int min_up, int min_down, bool on0,
                         double out0, int hours0) {
    core::Generator g;
    g.id = id;
    g.node = "n1";
    g.variable_cost = 10.0;
    g.p_min = core::Profile::Constant(T, pmin);
    g.p_max = core::Profile::Constant(T, pmax);
    g.ramp_up = core::Profile::Constant(T, ramp);
    g.ramp_down = core::Profile::Constant(T, ramp);
    g.startup_ramp = core::Profile::Constant(T, pmax);
    g.shutdown_ramp = core::Profile::Constant(T, pmax);
    g.min_up = min_up;
    g.min_down = min_down;
    g.initial_on = on0;
    g.initial_output = out0;
    g.initial_hours_in_state = hours0;
    return g;
}

core::PowerSystem single_bus(int T, std::vector<core::Generator> gens, double demand) {
    core::PowerSystem sys;
    sys.horizon = T;
    sys.generators = std::move(gens);
    sys.demand_nodes = {"n1"};
    sys.demand = Eigen::MatrixXd::Constant(1, T, demand);
    sys.validate();
    return sys;
}

// Independent legality check for one generator's on/off pattern, written
// directly from the minimum up/down definitions (no shared code with the
// constraint builder).
bool pattern_legal(const core::Generator& g, const std::vector<int>& on, int T) {
    auto on_at = [&](int t) { return t < 0 ? (g.initial_on ? 1 : 0) : on[t]; };
    for (int t = 0; t < T; ++t) {
        if (on_at(t) == 1 && on_at(t - 1) == 0) {          // start at t
            for (int k = t; k < std::min(T, t + g.min_up); ++k)
                if (on[k] == 0) return false;
        }
        if (on_at(t) == 0 && on_at(t - 1) == 1) {          // shut at t
            for (int k = t; k < std::min(T, t + g.min_down); ++k)
                if (on[k] == 1) return false;
        }
    }
    // portion of the initial up/down window still binding inside the horizon
    const int remaining = (g.initial_on ? g.min_up : g.min_down) - g.initial_hours_in_state;
    for (int t = 0; t < std::min(T, remaining); ++t)
        if (on[t] != (g.initial_on ? 1 : 0)) return false;
    return true;
}

bool rows_satisfied(const std::vector<lp::LinRow>& rows, const std::vector<double>& x,
                    double tol = 1e-9) {
    for (const lp::LinRow& row : rows) {
        double lhs = 0.0;
        for (const lp::LinTerm& term : row.terms) lhs += term.coef * x[term.var];
        switch (row.sense) {
            case lp::RowSense::LE:
                if (lhs > row.rhs + tol) return false;
                break;
            case lp::RowSense::GE:
                if (lhs < row.rhs - tol) return false;
                break;
            case lp::RowSense::EQ:
                if (std::abs(lhs - row.rhs) > tol) return false;
                break;
        }
    }
    return true;
}

// Enumerates all on/off patterns; start/shut follow from the transitions.
// Returns the set of legal patterns per the oracle above.
std::vector<std::vector<int>> oracle_patterns(const core::PowerSystem& sys) {
    const int ng = sys.num_gen();
    const int T = sys.horizon;
    std::vector<std::vector<int>> legal;
    for (int mask = 0; mask < (1 << (ng * T)); ++mask) {
        std::vector<int> on(ng * T);
        for (int b = 0; b < ng * T; ++b) on[b] = (mask >> b) & 1;
        bool ok = true;
        for (int i = 0; i < ng && ok; ++i) {
            std::vector<int> pi(on.begin() + i * T, on.begin() + (i + 1) * T);
            ok = pattern_legal(sys.generators[i], pi, T);
        }
        if (ok) legal.push_back(on);
    }
    return legal;
}

std::vector<std::vector<int>> block_patterns(const core::PowerSystem& sys) {
    const int ng = sys.num_gen();
    const int T = sys.horizon;
    lp::MathProgram prog;
    core::CommitmentVars v = core::add_commitment_vars(prog, sys);
    std::vector<lp::LinRow> rows = core::build_commitment_constraints(sys, v);

    std::vector<std::vector<int>> feasible;
    for (int mask = 0; mask < (1 << (ng * T)); ++mask) {
        std::vector<int> on(ng * T);
        for (int b = 0; b < ng * T; ++b) on[b] = (mask >> b) & 1;
        std::vector<double> x(prog.num_vars(), 0.0);
        for (int i = 0; i < ng; ++i) {
            int prev = sys.generators[i].initial_on ? 1 : 0;
            for (int t = 0; t < T; ++t) {
                const int cur = on[i * T + t];
                x[v.on[i][t]] = cur;
                x[v.start[i][t]] = (cur == 1 && prev == 0) ? 1.0 : 0.0;
                x[v.shut[i][t]] = (cur == 0 && prev == 1) ? 1.0 : 0.0;
                prev = cur;
            }
        }
        if (rows_satisfied(rows, x)) feasible.push_back(on);
    }
    return feasible;
}

}  // namespace

TEST_CASE("unconstrained single generator allows all patterns over T=2") {
    auto sys = single_bus(2, {make_gen("g1", 2, 0, 100, 100, 1, 1, false, 0, 5)}, 50);
    CHECK(block_patterns(sys).size() == 4);
}

TEST_CASE("min_up=2 forbids a one-period run") {
    auto sys = single_bus(3, {make_gen("g1", 3, 0, 100, 100, 2, 1, false, 0, 5)}, 50);
    auto pats = block_patterns(sys);
    // (1,0,x) starts at t=0 but shuts after one period
    for (const auto& p : pats) CHECK_FALSE((p[0] == 1 && p[1] == 0));
}

TEST_CASE("commitment block matches brute-force enumeration") {
    // single generator, min_up=2, min_down=2, off for 2 h before the horizon
    auto sys = single_bus(4, {make_gen("g1", 4, 0, 100, 100, 2, 2, false, 0, 2)}, 50);
    CHECK(block_patterns(sys) == oracle_patterns(sys));

    // mid-window initial condition: on for 1 h of a 3 h minimum up time
    auto sys2 = single_bus(5, {make_gen("g1", 5, 0, 100, 100, 3, 2, true, 40, 1)}, 50);
    CHECK(block_patterns(sys2) == oracle_patterns(sys2));

    // two generators with different windows, T=6
    auto sys3 = single_bus(
        6,
        {make_gen("g1", 6, 0, 100, 100, 3, 2, false, 0, 1),
         make_gen("g2", 6, 0, 100, 100, 2, 4, true, 30, 2)},
        50);
    auto got = block_patterns(sys3);
    auto want = oracle_patterns(sys3);
    REQUIRE(got.size() == want.size());
    CHECK(got == want);
}

TEST_CASE("non-canonical start/shut assignments are cut off") {
    auto sys = single_bus(2, {make_gen("g1", 2, 0, 100, 100, 1, 1, false, 0, 5)}, 50);
    lp::MathProgram prog;
    auto v = core::add_commitment_vars(prog, sys);
    auto rows = core::build_commitment_constraints(sys, v);

    // stay off but claim a simultaneous start+shut at t=0
    std::vector<double> x(prog.num_vars(), 0.0);
    x[v.start[0][0]] = 1.0;
    x[v.shut[0][0]] = 1.0;
    CHECK_FALSE(rows_satisfied(rows, x));

    // turn on without registering the start
    std::fill(x.begin(), x.end(), 0.0);
    x[v.on[0][0]] = 1.0;
    CHECK_FALSE(rows_satisfied(rows, x));
}

TEST_CASE("commitment schedules solved as a MILP are consistent") {
    auto sys = single_bus(
        5,
        {make_gen("g1", 5, 10, 80, 100, 2, 3, true, 40, 2),
         make_gen("g2", 5, 5, 60, 100, 3, 2, false, 0, 1)},
        60);
    lp::MathProgram prog;
    auto v = core::add_commitment_vars(prog, sys);
    for (const auto& row : core::build_commitment_constraints(sys, v)) prog.add_row(row);
    core::add_commitment_cost(prog, sys, v);
    // make turning units on attractive so the solution is nontrivial
    for (int i = 0; i < sys.num_gen(); ++i)
        for (int t = 0; t < sys.horizon; ++t) prog.add_objective(v.on[i][t], -1000.0);

    lp::SolverBackend backend{{}};
    auto res = backend.solve(prog);
    REQUIRE(res.status == lp::SolveStatus::Optimal);

    core::CommitmentSchedule sch;
    sch.on.resize(2, 5);
    sch.start.resize(2, 5);
    sch.shut.resize(2, 5);
    for (int i = 0; i < 2; ++i)
        for (int t = 0; t < 5; ++t) {
            sch.on(i, t) = static_cast<int>(std::lround(res.x[v.on[i][t]]));
            sch.start(i, t) = static_cast<int>(std::lround(res.x[v.start[i][t]]));
            sch.shut(i, t) = static_cast<int>(std::lround(res.x[v.shut[i][t]]));
        }
    std::string why;
    CHECK_MESSAGE(sch.consistent_with(sys, &why), why);
}

TEST_CASE("single-bus dispatch feasibility matches interval logic") {
    auto sys = single_bus(3, {make_gen("g1", 3, 20, 100, 15, 1, 1, true, 50, 5)}, 100);
    core::CommitmentSchedule sch;
    sch.on = Eigen::MatrixXi::Ones(1, 3);
    sch.start = Eigen::MatrixXi::Zero(1, 3);
    sch.shut = Eigen::MatrixXi::Zero(1, 3);

    auto feasible_demand = [&](double d) {
        core::PowerSystem s2 = sys;
        s2.demand.setConstant(d);
        lp::MathProgram prog;
        auto dv = core::add_dispatch_vars(prog, s2, 0);
        auto hist = core::initial_history(s2);
        auto rows = core::dispatch_feasible_set(s2, core::commitment_at(s2, sch, 0), 0,
                                                hist, Eigen::VectorXd(0), dv);
        for (const auto& row : rows) prog.add_row(row);
        lp::SolverBackend backend{{}};
        return backend.solve_lp(prog).status == lp::SolveStatus::Optimal;
    };
    // from 50 MW with ramp 15: reachable band [35, 65] intersected with [20, 100]
    CHECK(feasible_demand(65.0));
    CHECK(feasible_demand(35.0));
    CHECK_FALSE(feasible_demand(66.0));
    CHECK_FALSE(feasible_demand(34.0));
}

TEST_CASE("storage energy arithmetic: charging at 10 MW for 2 h at eta=0.8 stores 16 MWh") {
    const double eta = 0.8;
    double q = 0.0;
    for (int t = 0; t < 2; ++t) q += eta * 10.0 - 0.0;
    CHECK(q == doctest::Approx(16.0));
}

TEST_CASE("storage energy telescoping to 1e-9") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 20.0);
    const double eta = 0.83;
    const int T = 500;
    double q_inc = 12.0;
    std::vector<double> charge(T), discharge(T);
    for (int t = 0; t < T; ++t) {
        charge[t] = u(rng);
        discharge[t] = u(rng);
        q_inc += eta * charge[t] - discharge[t];
    }
    double q_closed = 12.0;
    for (int t = 0; t < T; ++t) q_closed += eta * charge[t] - discharge[t];
    // closed form recomputed with Kahan-style pairwise sum as the oracle
    Eigen::VectorXd delta(T);
    for (int t = 0; t < T; ++t) delta[t] = eta * charge[t] - discharge[t];
    CHECK(std::abs(q_inc - (12.0 + delta.sum())) < 1e-9);
    CHECK(std::abs(q_closed - (12.0 + delta.sum())) < 1e-9);
}

TEST_CASE("storage energy bounds gate the dispatch block") {
    const int T = 2;
    core::PowerSystem sys;
    sys.horizon = T;
    sys.generators = {make_gen("g1", T, 0, 200, 200, 1, 1, true, 100, 5)};
    core::StorageUnit s;
    s.id = "s1";
    s.node = "n1";
    s.discharge_min = core::Profile::Zero(T);
    s.discharge_max = core::Profile::Constant(T, 30.0);
    s.charge_min = core::Profile::Zero(T);
    s.charge_max = core::Profile::Constant(T, 30.0);
    s.energy_capacity = 10.0;
    s.initial_level = 4.0;
    s.efficiency = 0.8;
    sys.storages = {s};
    sys.demand_nodes = {"n1"};
    sys.demand = Eigen::MatrixXd::Constant(1, T, 100.0);
    sys.validate();

    core::CommitmentSchedule sch;
    sch.on = Eigen::MatrixXi::Ones(1, T);
    sch.start = Eigen::MatrixXi::Zero(1, T);
    sch.shut = Eigen::MatrixXi::Zero(1, T);

    lp::MathProgram prog;
    auto dv = core::add_dispatch_vars(prog, sys, 0);
    auto hist = core::initial_history(sys);
    auto rows = core::dispatch_feasible_set(sys, core::commitment_at(sys, sch, 0), 0,
                                            hist, Eigen::VectorXd(0), dv);
    std::vector<double> x(prog.num_vars(), 0.0);
    // discharging 4 MW for one hour empties the store exactly
    x[dv.gen[0]] = 96.0;
    x[dv.discharge[0]] = 4.0;
    CHECK(rows_satisfied(rows, x));
    // discharging 5 MW would drive the level to -1 MWh
    x[dv.gen[0]] = 95.0;
    x[dv.discharge[0]] = 5.0;
    CHECK_FALSE(rows_satisfied(rows, x));
    // charging 7.5 MW adds 6 MWh and hits the 10 MWh cap exactly
    x[dv.discharge[0]] = 0.0;
    x[dv.gen[0]] = 107.5;
    x[dv.charge[0]] = 7.5;
    CHECK(rows_satisfied(rows, x));
    x[dv.gen[0]] = 108.0;
    x[dv.charge[0]] = 8.0;
    CHECK_FALSE(rows_satisfied(rows, x));
}

TEST_CASE("line flows match a DC power flow oracle on a 3-bus network") {
    // 3-bus triangle, reactances x12=0.1, x13=0.2, x23=0.25, slack at bus 1.
    // PTDF computed from the susceptance matrix, independently of the
    // constraint builder.
    const double b12 = 1.0 / 0.1, b13 = 1.0 / 0.2, b23 = 1.0 / 0.25;
    Eigen::Matrix3d Bbus;
    Bbus << b12 + b13, -b12, -b13,
            -b12, b12 + b23, -b23,
            -b13, -b23, b13 + b23;
    // angles for injections at buses 2,3 (slack absorbs the balance)
    Eigen::Matrix2d Bred = Bbus.block(1, 1, 2, 2);
    Eigen::Matrix2d Bred_inv = Bred.inverse();

    auto oracle_flows = [&](double inj2, double inj3) {
        Eigen::Vector2d theta = Bred_inv * Eigen::Vector2d(inj2, inj3);
        Eigen::Vector3d th(0.0, theta[0], theta[1]);
        return Eigen::Vector2d(b12 * (th[0] - th[1]),    // line 1-2
                               b23 * (th[1] - th[2]));   // line 2-3
    };

    // Shift factors for the monitored lines w.r.t. injections at buses 2, 3:
    // columns of the oracle applied to unit injections.
    Eigen::Vector2d ptdf_l12_at2 = oracle_flows(1.0, 0.0);
    Eigen::Vector2d ptdf_l12_at3 = oracle_flows(0.0, 1.0);

    const int T = 1;
    core::PowerSystem sys;
    sys.horizon = T;
    // generator at bus 2, renewable at bus 3, demand at buses 2 and 3
    sys.generators = {make_gen("g2", T, 0, 300, 300, 1, 1, true, 0, 5)};
    sys.generators[0].node = "b2";
    core::RenewableUnit w;
    w.id = "w3";
    w.node = "b3";
    w.kind = "wind";
    w.p_max_profile = core::Profile::Constant(T, 150.0);
    sys.renewables = {w};
    sys.demand_nodes = {"b2", "b3"};
    sys.demand.resize(2, T);
    sys.demand << 80.0, 120.0;

    core::TransmissionLine l12, l23;
    l12.id = "l12";
    l12.flow_limit = 500.0;
    l12.alpha_generator = Eigen::VectorXd::Constant(1, ptdf_l12_at2[0]);
    l12.alpha_renewable = Eigen::VectorXd::Constant(1, ptdf_l12_at3[0]);
    l12.alpha_storage = Eigen::VectorXd(0);
    l12.alpha_demand = Eigen::Vector2d(ptdf_l12_at2[0], ptdf_l12_at3[0]);
    l23.id = "l23";
    l23.flow_limit = 500.0;
    l23.alpha_generator = Eigen::VectorXd::Constant(1, ptdf_l12_at2[1]);
    l23.alpha_renewable = Eigen::VectorXd::Constant(1, ptdf_l12_at3[1]);
    l23.alpha_storage = Eigen::VectorXd(0);
    l23.alpha_demand = Eigen::Vector2d(ptdf_l12_at2[1], ptdf_l12_at3[1]);
    sys.lines = {l12, l23};
    sys.validate();

    // net injections: gen 140 at bus 2, wind 60 at bus 3, less local demand
    Eigen::VectorXd gen(1), ren(1);
    gen << 140.0;
    ren << 60.0;
    Eigen::Vector2d want = oracle_flows(140.0 - 80.0, 60.0 - 120.0);
    CHECK(core::line_flow(sys, 0, gen, ren, Eigen::VectorXd(0), Eigen::VectorXd(0), 0) ==
          doctest::Approx(want[0]).epsilon(1e-10));
    CHECK(core::line_flow(sys, 1, gen, ren, Eigen::VectorXd(0), Eigen::VectorXd(0), 0) ==
          doctest::Approx(want[1]).epsilon(1e-10));

    // the dispatch block's flow rows agree with the helper
    core::CommitmentSchedule sch;
    sch.on = Eigen::MatrixXi::Ones(1, 1);
    sch.start = Eigen::MatrixXi::Zero(1, 1);
    sch.shut = Eigen::MatrixXi::Zero(1, 1);
    lp::MathProgram prog;
    auto dv = core::add_dispatch_vars(prog, sys, 0);
    auto rows = core::dispatch_feasible_set(sys, core::commitment_at(sys, sch, 0), 0,
                                            core::initial_history(sys),
                                            Eigen::VectorXd::Constant(1, 150.0), dv);
    std::vector<double> x(prog.num_vars(), 0.0);
    x[dv.gen[0]] = 140.0;
    x[dv.ren[0]] = 60.0;
    for (const auto& row : rows) {
        double lhs = 0.0;
        for (const auto& term : row.terms) lhs += term.coef * x[term.var];
        if (row.name.rfind("flow_max[l12", 0) == 0)
            CHECK(lhs - (row.rhs - l12.flow_limit) == doctest::Approx(want[0]).epsilon(1e-10));
        if (row.name.rfind("flow_max[l23", 0) == 0)
            CHECK(lhs - (row.rhs - l23.flow_limit) == doctest::Approx(want[1]).epsilon(1e-10));
    }
}

TEST_CASE("dispatch cost") {
    auto sys = single_bus(2, {make_gen("g1", 2, 0, 100, 100, 1, 1, true, 50, 5)}, 50);
    sys.generators[0].variable_cost = 20.0;

    CHECK(core::dispatch_cost(sys, Eigen::MatrixXd(1, 0)) == 0.0);
    CHECK(core::dispatch_cost(sys, Eigen::MatrixXd::Constant(1, 2, 50.0)) ==
          doctest::Approx(2000.0));

    // random instance vs naive double loop
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 90.0);
    core::PowerSystem big = single_bus(
        6,
        {make_gen("a", 6, 0, 100, 100, 1, 1, false, 0, 1),
         make_gen("b", 6, 0, 100, 100, 1, 1, false, 0, 1),
         make_gen("c", 6, 0, 100, 100, 1, 1, false, 0, 1)},
        50);
    big.generators[0].variable_cost = 13.5;
    big.generators[1].variable_cost = 27.25;
    big.generators[2].variable_cost = 8.0;
    Eigen::MatrixXd p(3, 6);
    for (int i = 0; i < 3; ++i)
        for (int t = 0; t < 6; ++t) p(i, t) = u(rng);
    double naive = 0.0;
    for (int t = 0; t < 6; ++t)
        for (int i = 0; i < 3; ++i) naive += big.generators[i].variable_cost * p(i, t);
    CHECK(core::dispatch_cost(big, p) == doctest::Approx(naive).epsilon(1e-12));
}

TEST_CASE("system file round trip") {
    auto sys = single_bus(
        3,
        {make_gen("g1", 3, 10, 100, 30, 2, 2, true, 50, 3)},
        75);
    core::RenewableUnit w;
    w.id = "w1";
    w.node = "n1";
    w.kind = "wind";
    w.p_max_profile = Eigen::Vector3d(10, 20, 30);
    sys.renewables = {w};
    core::StorageUnit s;
    s.id = "s1";
    s.node = "n1";
    s.discharge_min = core::Profile::Zero(3);
    s.discharge_max = core::Profile::Constant(3, 25.0);
    s.charge_min = core::Profile::Zero(3);
    s.charge_max = core::Profile::Constant(3, 25.0);
    s.energy_capacity = 50.0;
    s.initial_level = 20.0;
    s.efficiency = 0.8;
    sys.storages = {s};
    core::TransmissionLine l;
    l.id = "l1";
    l.flow_limit = 40.0;
    l.alpha_demand = Eigen::VectorXd::Constant(1, 0.5);
    l.alpha_generator = Eigen::VectorXd::Constant(1, 0.25);
    l.alpha_renewable = Eigen::VectorXd::Constant(1, -0.125);
    l.alpha_storage = Eigen::VectorXd::Constant(1, 0.75);
    sys.lines = {l};
    sys.validate();

    std::stringstream buf;
    core::write_system(buf, sys);
    core::PowerSystem back = core::read_system(buf, "roundtrip");

    CHECK(back.horizon == sys.horizon);
    CHECK(back.generators.size() == 1);
    CHECK(back.generators[0].p_max.isApprox(sys.generators[0].p_max));
    CHECK(back.generators[0].min_down == 2);
    CHECK(back.generators[0].initial_on);
    CHECK(back.renewables[0].p_max_profile.isApprox(w.p_max_profile));
    CHECK(back.storages[0].efficiency == doctest::Approx(0.8));
    CHECK(back.lines[0].alpha_renewable[0] == doctest::Approx(-0.125));
    CHECK(back.demand.isApprox(sys.demand));
}

TEST_CASE("system parser rejects malformed input") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return core::read_system(in, "test");
    };
    const std::string header = "system\n  horizon = 2\n";

    // scalar broadcast
    auto sys = parse(header +
                     "generator g1\n  node = n1\n  variable_cost = 5\n"
                     "  no_load_cost = 0\n  startup_cost = 0\n  shutdown_cost = 0\n"
                     "  p_min = 0\n  p_max = 100\n  ramp_up = 50\n  ramp_down = 50\n"
                     "  startup_ramp = 50\n  shutdown_ramp = 50\n  min_up = 1\n"
                     "  min_down = 1\n  initial_on = false\n  initial_output = 0\n"
                     "  initial_hours_in_state = 1\n"
                     "demand n1\n  values = 40 60\n");
    CHECK(sys.generators[0].p_max[1] == doctest::Approx(100.0));
    CHECK(sys.demand(0, 1) == doctest::Approx(60.0));

    CHECK_THROWS_AS(parse("system\n  horizon = 2\n  frobnicate = 1\n"),
                    core::ParseError);                          // unknown key
    CHECK_THROWS_AS(parse(header + "widget w\n  a = 1\n"), core::ParseError);
    CHECK_THROWS_AS(parse(header + "demand n1\n  values = 40\n  values = 50\n"),
                    core::ParseError);                          // duplicate key
    CHECK_THROWS_AS(parse(header + "demand n1\n  values = 40 50 60\n"),
                    core::ParseError);                          // length mismatch
    CHECK_THROWS_AS(parse("demand n1\n  values = 1\n"), core::ParseError);
    CHECK_THROWS_AS(parse(header + "renewable w\n  node = n1\n  kind = tidal\n"
                          "  p_max_profile = 0\ndemand n1\n  values = 1\n"),
                    core::ParseError);
    CHECK_THROWS_AS(core::read_system_file("/nonexistent/system.txt"), core::ParseError);
}
