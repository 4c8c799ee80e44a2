// SPDX-License-Identifier: Apache-2.0
#include "robuc/uncertainty/set_io.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "robuc/core/system_io.hpp"

namespace robuc::uncertainty {

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

}  // namespace

void write_set(std::ostream& out, const DynamicUncertaintySet& set) {
    out << "uncertainty_set\n"
        << "  units = " << set.num_units() << "\n"
        << "  horizon = " << set.horizon() << "\n"
        << "  factors = " << set.num_factors() << "\n"
        << "  lag = " << set.lag() << "\n";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12e", set.gamma);
    out << "  gamma = " << buf << "\n";
    std::snprintf(buf, sizeof(buf), "%.12e", set.rho);
    out << "  rho = " << buf << "\n";
    out << "  norm = " << norm_name(set.norm_kind) << "\n\n";
    put_matrix(out, "f", set.f);
    put_matrix(out, "g", set.g);
    for (int l = 1; l <= set.lag(); ++l)
        put_matrix(out, "A" + std::to_string(l), set.A[l - 1]);
    put_matrix(out, "B", set.B);
    put_matrix(out, "p_max", set.p_max);
    if (set.lag() > 0) put_matrix(out, "u_init", set.u_init);
}

void write_set_file(const std::string& path, const DynamicUncertaintySet& set) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open output file: " + path);
    write_set(out, set);
}

DynamicUncertaintySet read_set(std::istream& in, const std::string& src) {
    DynamicUncertaintySet set;
    int units = -1, horizon = -1, factors = -1, lag = -1;
    bool in_header = false;
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
        if (first == "uncertainty_set") {
            in_header = true;
            continue;
        }
        if (first == "matrix") {
            in_header = false;
            std::string name;
            int rows = 0, cols = 0;
            if (!(iss >> name >> rows >> cols) || rows < 0 || cols < 0)
                fail("malformed matrix header");
            Eigen::MatrixXd m(rows, cols);
            for (int i = 0; i < rows; ++i) {
                if (!std::getline(in, line)) fail("truncated matrix block '" + name + "'");
                ++lineno;
                std::istringstream row(line);
                for (int j = 0; j < cols; ++j)
                    if (!(row >> m(i, j))) fail("short row in matrix '" + name + "'");
                double extra;
                if (row >> extra) fail("long row in matrix '" + name + "'");
            }
            if (mats.count(name)) fail("duplicate matrix '" + name + "'");
            mats[name] = std::move(m);
            continue;
        }
        if (!in_header) fail("unexpected content outside a section");
        std::string eq, value;
        if (!(iss >> eq >> value) || eq != "=") fail("expected 'key = value'");
        try {
            if (first == "units") units = std::stoi(value);
            else if (first == "horizon") horizon = std::stoi(value);
            else if (first == "factors") factors = std::stoi(value);
            else if (first == "lag") lag = std::stoi(value);
            else if (first == "gamma") set.gamma = std::stod(value);
            else if (first == "rho") set.rho = std::stod(value);
            else if (first == "norm") set.norm_kind = norm_from_name(value);
            else fail("unknown key '" + first + "'");
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        }
    }
    lineno = 0;
    if (units <= 0 || horizon <= 0 || factors <= 0 || lag < 0)
        throw ParseError(src + ": missing or invalid header fields");

    auto take = [&](const std::string& name, int rows, int cols) {
        auto it = mats.find(name);
        if (it == mats.end()) throw ParseError(src + ": missing matrix '" + name + "'");
        if (it->second.rows() != rows || it->second.cols() != cols)
            throw ParseError(src + ": matrix '" + name + "' has wrong shape");
        Eigen::MatrixXd m = std::move(it->second);
        mats.erase(it);
        return m;
    };
    set.f = take("f", units, horizon);
    set.g = take("g", units, horizon);
    for (int l = 1; l <= lag; ++l)
        set.A.push_back(take("A" + std::to_string(l), units, units));
    set.B = take("B", units, factors);
    set.p_max = take("p_max", units, horizon);
    if (lag > 0) set.u_init = take("u_init", units, lag);
    if (!mats.empty())
        throw ParseError(src + ": unknown matrix '" + mats.begin()->first + "'");
    try {
        set.validate();
    } catch (const std::invalid_argument& e) {
        throw ParseError(src + ": " + e.what());
    }
    return set;
}

DynamicUncertaintySet read_set_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open set file: " + path);
    return read_set(in, path);
}

std::vector<Eigen::MatrixXd> read_time_series(std::istream& in,
                                              std::vector<std::string>* unit_ids,
                                              const std::string& src) {
    std::vector<std::string> units;
    std::map<std::string, int> unit_index;
    std::vector<Eigen::MatrixXd> paths;

    // per-path staging: ordered timestamps and (unit, timestamp) -> value
    std::vector<std::string> stamps;
    std::map<std::string, int> stamp_index;
    std::vector<std::map<int, double>> values;  // per unit

    int lineno = 0;
    auto flush_path = [&]() {
        if (stamps.empty()) return;
        const int n = static_cast<int>(units.size());
        const int T = static_cast<int>(stamps.size());
        Eigen::MatrixXd m(n, T);
        for (int i = 0; i < n; ++i)
            for (int t = 0; t < T; ++t) {
                auto it = values[i].find(t);
                if (it == values[i].end())
                    throw ParseError(src + ": unit '" + units[i] +
                                     "' missing a value at timestamp '" + stamps[t] + "'");
                m(i, t) = it->second;
            }
        paths.push_back(std::move(m));
        stamps.clear();
        stamp_index.clear();
        for (auto& v : values) v.clear();
    };

    std::string line;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream iss(line);
        std::string stamp, unit;
        double mw;
        if (!(iss >> stamp)) {  // blank line: path separator
            flush_path();
            continue;
        }
        if (!(iss >> unit >> mw))
            throw ParseError(src + ":" + std::to_string(lineno) +
                             ": expected 'timestamp unit_id available_mw'");
        std::string extra;
        if (iss >> extra)
            throw ParseError(src + ":" + std::to_string(lineno) + ": trailing tokens");
        if (!unit_index.count(unit)) {
            unit_index[unit] = static_cast<int>(units.size());
            units.push_back(unit);
            values.emplace_back();
        }
        if (!stamp_index.count(stamp)) {
            stamp_index[stamp] = static_cast<int>(stamps.size());
            stamps.push_back(stamp);
        }
        const int i = unit_index[unit];
        const int t = stamp_index[stamp];
        if (values[i].count(t))
            throw ParseError(src + ":" + std::to_string(lineno) + ": duplicate observation");
        values[i][t] = mw;
    }
    flush_path();
    if (paths.empty()) throw ParseError(src + ": no observations found");
    if (unit_ids) *unit_ids = units;
    return paths;
}

std::vector<Eigen::MatrixXd> read_time_series_file(const std::string& path,
                                                   std::vector<std::string>* unit_ids) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open time-series file: " + path);
    return read_time_series(in, unit_ids, path);
}

void write_time_series(std::ostream& out, const std::vector<Eigen::MatrixXd>& paths,
                       const std::vector<std::string>& unit_ids) {
    char buf[40];
    bool first = true;
    for (const Eigen::MatrixXd& m : paths) {
        if (!first) out << "\n";
        first = false;
        for (int t = 0; t < m.cols(); ++t)
            for (int i = 0; i < m.rows(); ++i) {
                std::snprintf(buf, sizeof(buf), "%.12e", m(i, t));
                out << t << " " << unit_ids[i] << " " << buf << "\n";
            }
    }
}

}  // namespace robuc::uncertainty
