// SPDX-License-Identifier: Apache-2.0
#include "robuc/sim/report_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "robuc/core/system_io.hpp"

namespace robuc::sim {

using core::ParseError;

namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12e", v);
    return buf;
}

void put_matrix(std::ostream& out, const std::string& name, const Eigen::MatrixXd& m) {
    out << "matrix " << name << " " << m.rows() << " " << m.cols() << "\n";
    char buf[40];
    for (int i = 0; i < m.rows(); ++i) {
        out << " ";
        for (int j = 0; j < m.cols(); ++j) {
            std::snprintf(buf, sizeof(buf), " %.12e", m(i, j));
            out << buf;
        }
        out << "\n";
    }
}

}  // namespace

void write_report(std::ostream& out, const SimulationReport& report) {
    out << "sim_report\n"
        << "  trajectories = " << report.logs.size() << "\n"
        << "  completed = " << report.completed << "\n"
        << "  partial = " << (report.partial ? "true" : "false") << "\n"
        << "  commitment_cost = " << num(report.commitment_cost) << "\n"
        << "  cost_avg = " << num(report.cost_avg) << "\n"
        << "  cost_std = " << num(report.cost_std) << "\n"
        << "  cost_cvar = " << num(report.cost_cvar) << "\n"
        << "  penalty_cost_avg = " << num(report.penalty_cost_avg) << "\n"
        << "  penalty_freq = " << num(report.penalty_freq) << "\n"
        << "  renewables_util = " << num(report.renewables_util) << "\n"
        << "  stored_avg = " << num(report.stored_avg) << "\n";
    for (std::size_t k = 0; k < report.logs.size(); ++k) {
        const TrajectoryLog& log = report.logs[k];
        out << "\ntrajectory " << k << "\n";
        if (log.failed) {
            out << "  failed_at = " << log.failed_at << "\n";
            out << "# error: " << log.error << "\n";
        }
        put_matrix(out, "avail", log.avail);
        put_matrix(out, "gen", log.gen);
        put_matrix(out, "ren", log.ren);
        put_matrix(out, "dis", log.dis);
        put_matrix(out, "chg", log.chg);
        put_matrix(out, "level", log.level);
        put_matrix(out, "cost", log.cost.transpose());
        put_matrix(out, "penalty", log.penalty.transpose());
    }
}

void write_report_file(const std::string& path, const SimulationReport& report) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open output file: " + path);
    write_report(out, report);
}

SimulationReport read_report(std::istream& in, const std::string& src) {
    SimulationReport report;
    TrajectoryLog* cur = nullptr;
    std::string line;
    int lineno = 0;
    auto fail = [&](const std::string& msg) -> void {
        throw ParseError(src + ":" + std::to_string(lineno) + ": " + msg);
    };
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream iss(line);
        std::string first;
        if (!(iss >> first)) continue;
        if (first == "sim_report") continue;
        if (first == "trajectory") {
            int idx = -1;
            if (!(iss >> idx) || idx != static_cast<int>(report.logs.size()))
                fail("trajectory blocks must be consecutive from 0");
            report.logs.emplace_back();
            cur = &report.logs.back();
            continue;
        }
        if (first == "matrix") {
            if (cur == nullptr) fail("matrix outside a trajectory block");
            std::string name;
            int rows = 0, cols = 0;
            if (!(iss >> name >> rows >> cols) || rows < 0 || cols < 0)
                fail("malformed matrix header");
            Eigen::MatrixXd m(rows, cols);
            for (int i = 0; i < rows; ++i) {
                if (!std::getline(in, line)) fail("truncated matrix " + name);
                ++lineno;
                std::istringstream row(line);
                for (int j = 0; j < cols; ++j)
                    if (!(row >> m(i, j))) fail("bad entry in matrix " + name);
            }
            if (name == "avail") cur->avail = m;
            else if (name == "gen") cur->gen = m;
            else if (name == "ren") cur->ren = m;
            else if (name == "dis") cur->dis = m;
            else if (name == "chg") cur->chg = m;
            else if (name == "level") cur->level = m;
            else if (name == "cost") cur->cost = m.transpose();
            else if (name == "penalty") cur->penalty = m.transpose();
            else fail("unknown matrix '" + name + "'");
            continue;
        }
        std::string eq, value;
        if (!(iss >> eq >> value) || eq != "=") fail("expected 'key = value'");
        if (first == "failed_at") {
            if (cur == nullptr) fail("failed_at outside a trajectory block");
            cur->failed = true;
            cur->failed_at = std::stoi(value);
        } else if (first == "trajectories") {
            // redundant with the block count; checked at the end
        } else if (first == "completed") report.completed = std::stoi(value);
        else if (first == "partial") report.partial = (value == "true");
        else if (first == "commitment_cost") report.commitment_cost = std::stod(value);
        else if (first == "cost_avg") report.cost_avg = std::stod(value);
        else if (first == "cost_std") report.cost_std = std::stod(value);
        else if (first == "cost_cvar") report.cost_cvar = std::stod(value);
        else if (first == "penalty_cost_avg") report.penalty_cost_avg = std::stod(value);
        else if (first == "penalty_freq") report.penalty_freq = std::stod(value);
        else if (first == "renewables_util") report.renewables_util = std::stod(value);
        else if (first == "stored_avg") report.stored_avg = std::stod(value);
        else fail("unknown key '" + first + "'");
    }
    return report;
}

SimulationReport read_report_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    return read_report(in, path);
}

std::string format_summary(const SimulationReport& report) {
    char buf[512];
    std::snprintf(buf, sizeof(buf),
                  "  Cost Avg ($)        %14.2f\n"
                  "  Cost Std ($)        %14.2f\n"
                  "  Cost CVaR 10%% ($)   %14.2f\n"
                  "  Penalty Cost Avg ($)%14.2f\n"
                  "  Penalty Freq        %14.4f\n"
                  "  Renewables Util     %14.4f\n"
                  "  Stored Avg (MWh)    %14.2f\n"
                  "  Trajectories        %7d / %zu%s\n",
                  report.cost_avg, report.cost_std, report.cost_cvar,
                  report.penalty_cost_avg, report.penalty_freq,
                  report.renewables_util, report.stored_avg, report.completed,
                  report.logs.size(), report.partial ? "  (partial)" : "");
    return buf;
}

}  // namespace robuc::sim
