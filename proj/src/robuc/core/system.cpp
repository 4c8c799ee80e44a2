// SPDX-License-Identifier: Apache-2.0
#include "robuc/core/system.hpp"

#include <stdexcept>

namespace robuc::core {

namespace {

void fail(const std::string& what) { throw std::invalid_argument(what); }

void check_profile(const Profile& p, int T, const std::string& what) {
    if (p.size() != T) fail(what + ": expected " + std::to_string(T) + " periods");
}

}  // namespace

void PowerSystem::validate() const {
    if (horizon < 1) fail("horizon must be >= 1");
    if (period_hours <= 0) fail("period length must be positive");
    const int T = horizon;
    for (const auto& g : generators) {
        check_profile(g.p_min, T, g.id + ".p_min");
        check_profile(g.p_max, T, g.id + ".p_max");
        check_profile(g.ramp_up, T, g.id + ".ramp_up");
        check_profile(g.ramp_down, T, g.id + ".ramp_down");
        check_profile(g.startup_ramp, T, g.id + ".startup_ramp");
        check_profile(g.shutdown_ramp, T, g.id + ".shutdown_ramp");
        for (int t = 0; t < T; ++t) {
            if (g.p_min[t] < 0 || g.p_min[t] > g.p_max[t])
                fail(g.id + ": need 0 <= p_min <= p_max");
            if (g.ramp_up[t] < 0 || g.ramp_down[t] < 0 || g.startup_ramp[t] < 0 ||
                g.shutdown_ramp[t] < 0)
                fail(g.id + ": ramp rates must be nonnegative");
        }
        if (g.min_up < 1 || g.min_down < 1)
            fail(g.id + ": min_up and min_down must be >= 1");
        if (g.initial_on) {
            if (g.initial_output < 0 || g.initial_output > g.p_max[0])
                fail(g.id + ": initial_output outside [0, p_max]");
        } else if (g.initial_output != 0.0) {
            fail(g.id + ": initial_output must be 0 when initially off");
        }
    }
    for (const auto& r : renewables) {
        check_profile(r.p_max_profile, T, r.id + ".p_max_profile");
        if ((r.p_max_profile.array() < 0).any())
            fail(r.id + ": p_max_profile must be nonnegative");
    }
    for (const auto& s : storages) {
        check_profile(s.discharge_min, T, s.id + ".discharge_min");
        check_profile(s.discharge_max, T, s.id + ".discharge_max");
        check_profile(s.charge_min, T, s.id + ".charge_min");
        check_profile(s.charge_max, T, s.id + ".charge_max");
        for (int t = 0; t < T; ++t) {
            if (s.discharge_min[t] < 0 || s.discharge_min[t] > s.discharge_max[t])
                fail(s.id + ": need 0 <= discharge_min <= discharge_max");
            if (s.charge_min[t] < 0 || s.charge_min[t] > s.charge_max[t])
                fail(s.id + ": need 0 <= charge_min <= charge_max");
        }
        if (s.initial_level < 0 || s.initial_level > s.energy_capacity)
            fail(s.id + ": initial_level outside [0, capacity]");
        if (s.efficiency <= 0 || s.efficiency > 1)
            fail(s.id + ": efficiency must be in (0, 1]");
    }
    for (const auto& l : lines) {
        if (l.flow_limit <= 0) fail(l.id + ": flow_limit must be positive");
        if (l.alpha_demand.size() != static_cast<int>(demand_nodes.size()))
            fail(l.id + ": alpha_demand size mismatch");
        if (l.alpha_generator.size() != num_gen())
            fail(l.id + ": alpha_generator size mismatch");
        if (l.alpha_renewable.size() != num_ren())
            fail(l.id + ": alpha_renewable size mismatch");
        if (l.alpha_storage.size() != num_sto())
            fail(l.id + ": alpha_storage size mismatch");
    }
    if (demand.rows() != static_cast<int>(demand_nodes.size()) ||
        demand.cols() != T)
        fail("demand matrix must be demand_nodes x horizon");
    if ((demand.array() < 0).any()) fail("demand must be nonnegative");
}

bool CommitmentSchedule::consistent_with(const PowerSystem& sys,
                                         std::string* why) const {
    auto reject = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    const int T = sys.horizon;
    const int G = sys.num_gen();
    if (on.rows() != G || on.cols() != T || start.rows() != G ||
        start.cols() != T || shut.rows() != G || shut.cols() != T)
        return reject("shape mismatch");
    for (int i = 0; i < G; ++i) {
        const auto& g = sys.generators[i];
        int prev = g.initial_on ? 1 : 0;
        for (int t = 0; t < T; ++t) {
            if (start(i, t) - shut(i, t) != on(i, t) - prev)
                return reject(g.id + ": transition identity violated at t=" +
                              std::to_string(t));
            if (start(i, t) + shut(i, t) > 1)
                return reject(g.id + ": simultaneous start and shut");
            prev = on(i, t);
        }
        // min-up/min-down windows, including the initial state carry-over
        for (int t = 0; t < T; ++t) {
            if (start(i, t)) {
                for (int tau = t; tau < std::min(T, t + g.min_up); ++tau)
                    if (!on(i, tau))
                        return reject(g.id + ": min_up violated after start");
            }
            if (shut(i, t)) {
                for (int tau = t; tau < std::min(T, t + g.min_down); ++tau)
                    if (on(i, tau))
                        return reject(g.id + ": min_down violated after shut");
            }
        }
        if (g.initial_on) {
            const int remaining = std::max(0, g.min_up - g.initial_hours_in_state);
            for (int t = 0; t < std::min(T, remaining); ++t)
                if (!on(i, t)) return reject(g.id + ": initial min_up violated");
        } else {
            const int remaining =
                std::max(0, g.min_down - g.initial_hours_in_state);
            for (int t = 0; t < std::min(T, remaining); ++t)
                if (on(i, t)) return reject(g.id + ": initial min_down violated");
        }
    }
    return true;
}

}  // namespace robuc::core
