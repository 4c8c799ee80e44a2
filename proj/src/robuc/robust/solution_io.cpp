// SPDX-License-Identifier: Apache-2.0
#include "robuc/robust/solution_io.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "robuc/core/system_io.hpp"

namespace robuc::robust {

using core::ParseError;

namespace {

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

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12e", v);
    return buf;
}

}  // namespace

void write_solution(std::ostream& out, const UcSolution& sol) {
    out << "uc_solution\n"
        << "  worst_case_cost = " << num(sol.worst_case_cost) << "\n"
        << "  commitment_cost = " << num(sol.commitment_cost) << "\n"
        << "  objective = " << num(sol.objective) << "\n"
        << "  iterations = " << sol.stats.iterations << "\n"
        << "  lps_solved = " << sol.stats.lps_solved << "\n"
        << "  lps_screened = " << sol.stats.lps_screened << "\n"
        << "  cuts_added = " << sol.stats.cuts_added << "\n"
        << "  wall_time = " << num(sol.stats.wall_time) << "\n"
        << "  certified = " << (sol.stats.certified ? "true" : "false") << "\n";
    for (const std::string& w : sol.warnings) out << "# warning: " << w << "\n";
    out << "\n";
    put_matrix(out, "on", sol.schedule.on.cast<double>());
    put_matrix(out, "start", sol.schedule.start.cast<double>());
    put_matrix(out, "shut", sol.schedule.shut.cast<double>());
    put_matrix(out, "w_gen", sol.policy.w_gen);
    put_matrix(out, "W_gen", sol.policy.W_gen);
    put_matrix(out, "w_dis", sol.policy.w_dis);
    put_matrix(out, "W_dis", sol.policy.W_dis);
    put_matrix(out, "w_chg", sol.policy.w_chg);
    put_matrix(out, "W_chg", sol.policy.W_chg);
    put_matrix(out, "w_ren", sol.policy.w_ren);
    put_matrix(out, "W_ren", sol.policy.W_ren.transpose());
}

void write_solution_file(const std::string& path, const UcSolution& sol) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open output file: " + path);
    write_solution(out, sol);
}

UcSolution read_solution(std::istream& in, const std::string& src) {
    UcSolution sol;
    std::map<std::string, Eigen::MatrixXd> mats;
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
        if (first == "uc_solution") continue;
        if (first == "matrix") {
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
            if (!mats.emplace(name, std::move(m)).second)
                fail("duplicate matrix " + name);
            continue;
        }
        std::string eq, value;
        if (!(iss >> eq >> value) || eq != "=") fail("expected 'key = value'");
        if (first == "worst_case_cost") sol.worst_case_cost = std::stod(value);
        else if (first == "commitment_cost") sol.commitment_cost = std::stod(value);
        else if (first == "objective") sol.objective = std::stod(value);
        else if (first == "iterations") sol.stats.iterations = std::stoi(value);
        else if (first == "lps_solved") sol.stats.lps_solved = std::stol(value);
        else if (first == "lps_screened") sol.stats.lps_screened = std::stol(value);
        else if (first == "cuts_added") sol.stats.cuts_added = std::stoi(value);
        else if (first == "wall_time") sol.stats.wall_time = std::stod(value);
        else if (first == "certified") sol.stats.certified = (value == "true");
        else fail("unknown key '" + first + "'");
    }
    auto take = [&](const std::string& name) {
        auto it = mats.find(name);
        if (it == mats.end()) throw ParseError(src + ": missing matrix " + name);
        return it->second;
    };
    sol.schedule.on = take("on").cast<int>();
    sol.schedule.start = take("start").cast<int>();
    sol.schedule.shut = take("shut").cast<int>();
    sol.policy.w_gen = take("w_gen");
    sol.policy.W_gen = take("W_gen");
    sol.policy.w_dis = take("w_dis");
    sol.policy.W_dis = take("W_dis");
    sol.policy.w_chg = take("w_chg");
    sol.policy.W_chg = take("W_chg");
    sol.policy.w_ren = take("w_ren");
    sol.policy.W_ren = take("W_ren").transpose();
    return sol;
}

UcSolution read_solution_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    return read_solution(in, path);
}

}  // namespace robuc::robust
