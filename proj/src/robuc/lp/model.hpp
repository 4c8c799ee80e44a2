// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace robuc::lp {

constexpr double kInf = std::numeric_limits<double>::infinity();

enum class VarKind { Continuous, Binary };
enum class RowSense { LE, GE, EQ };

struct Variable {
    std::string name;
    double lb = 0.0;
    double ub = kInf;
    VarKind kind = VarKind::Continuous;
};

struct LinTerm {
    int var = -1;
    double coef = 0.0;
};

struct LinRow {
    std::vector<LinTerm> terms;
    RowSense sense = RowSense::LE;
    double rhs = 0.0;
    std::string name;
};

/// Linear (MI)P in minimize form. Rows reference declared variables only.
class MathProgram {
public:
    int add_var(const std::string& name, double lb, double ub,
                VarKind kind = VarKind::Continuous) {
        if (kind == VarKind::Binary) {
            lb = std::max(lb, 0.0);
            ub = std::min(ub, 1.0);
        }
        vars_.push_back({name, lb, ub, kind});
        obj_.push_back(0.0);
        return static_cast<int>(vars_.size()) - 1;
    }

    int add_row(LinRow row) {
        for (const auto& t : row.terms)
            if (t.var < 0 || t.var >= static_cast<int>(vars_.size()))
                throw std::invalid_argument("row '" + row.name +
                                            "' references undeclared variable");
        rows_.push_back(std::move(row));
        return static_cast<int>(rows_.size()) - 1;
    }

    void set_objective(int var, double coef) { obj_.at(var) = coef; }
    void add_objective(int var, double coef) { obj_.at(var) += coef; }

    int num_vars() const { return static_cast<int>(vars_.size()); }
    int num_rows() const { return static_cast<int>(rows_.size()); }
    bool has_binaries() const {
        for (const auto& v : vars_)
            if (v.kind == VarKind::Binary) return true;
        return false;
    }

    const std::vector<Variable>& vars() const { return vars_; }
    const std::vector<LinRow>& rows() const { return rows_; }
    const std::vector<double>& objective() const { return obj_; }
    Variable& var(int j) { return vars_.at(j); }
    const Variable& var(int j) const { return vars_.at(j); }
    const LinRow& row(int r) const { return rows_.at(r); }

    double objective_constant = 0.0;

private:
    std::vector<Variable> vars_;
    std::vector<LinRow> rows_;
    std::vector<double> obj_;
};

enum class SolveStatus { Optimal, Infeasible, Unbounded, Limit };

struct SolveResult {
    SolveStatus status = SolveStatus::Limit;
    double objective = 0.0;
    double best_bound = -kInf;
    std::vector<double> x;
    std::vector<double> duals;  // LP only; >= rows nonneg, <= rows nonpos
    long iterations = 0;
    long nodes = 0;
};

inline const char* to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Optimal: return "optimal";
        case SolveStatus::Infeasible: return "infeasible";
        case SolveStatus::Unbounded: return "unbounded";
        case SolveStatus::Limit: return "limit";
    }
    return "?";
}

}  // namespace robuc::lp
