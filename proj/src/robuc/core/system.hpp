// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

namespace robuc::core {

/// Per-period array of length T.  Scalar inputs are broadcast at load time.
using Profile = Eigen::VectorXd;

struct Generator {
    std::string id;
    std::string node;
    double variable_cost = 0.0;  // $/MWh
    double no_load_cost = 0.0;
    double startup_cost = 0.0;
    double shutdown_cost = 0.0;
    Profile p_min, p_max;        // MW, length T
    Profile ramp_up, ramp_down;  // MW/h
    Profile startup_ramp, shutdown_ramp;
    int min_up = 1, min_down = 1;
    bool initial_on = false;
    double initial_output = 0.0;
    int initial_hours_in_state = 1;
};

struct RenewableUnit {
    std::string id;
    std::string node;
    std::string kind;  // "wind" | "solar"
    Profile p_max_profile;
};

struct StorageUnit {
    std::string id;
    std::string node;
    Profile discharge_min, discharge_max;  // MW
    Profile charge_min, charge_max;        // MW
    double energy_capacity = 0.0;          // MWh
    double initial_level = 0.0;            // MWh
    double efficiency = 1.0;               // (0, 1]
};

struct TransmissionLine {
    std::string id;
    double flow_limit = 0.0;  // MW
    Eigen::VectorXd alpha_demand;
    Eigen::VectorXd alpha_generator;
    Eigen::VectorXd alpha_renewable;
    Eigen::VectorXd alpha_storage;
};

struct PowerSystem {
    std::vector<Generator> generators;
    std::vector<RenewableUnit> renewables;
    std::vector<StorageUnit> storages;
    std::vector<TransmissionLine> lines;
    std::vector<std::string> demand_nodes;
    Eigen::MatrixXd demand;  // demand node x period, MW
    int horizon = 0;
    double period_hours = 1.0;

    int num_gen() const { return static_cast<int>(generators.size()); }
    int num_ren() const { return static_cast<int>(renewables.size()); }
    int num_sto() const { return static_cast<int>(storages.size()); }
    int num_lines() const { return static_cast<int>(lines.size()); }
    double total_demand(int t) const { return demand.col(t).sum(); }

    /// Throws std::invalid_argument describing the first violated invariant.
    void validate() const;
};

struct CommitmentSchedule {
    Eigen::MatrixXi on, start, shut;  // generator x period, {0,1}

    /// Checks the transition identity, start/shut exclusivity and the
    /// min-up/min-down windows against the system's initial conditions.
    bool consistent_with(const PowerSystem& sys, std::string* why = nullptr) const;
};

}  // namespace robuc::core
