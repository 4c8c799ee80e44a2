// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>

#include "robuc/lp/model.hpp"

namespace robuc::lp {

/// Bounded-variable primal simplex over a MathProgram (binaries treated as
/// continuous in [lb, ub]).  Supports warm re-solves after bound changes and
/// incremental row addition, which the branch-and-bound and constraint
/// generation loops rely on.
class Simplex {
public:
    explicit Simplex(const MathProgram& p);

    void set_var_bounds(int j, double lb, double ub);
    /// Appends a row; its slack enters the basis, so the next solve() warm
    /// starts from the previous basis.
    void add_row(const LinRow& row);

    SolveStatus solve();

    double objective() const { return obj_value_; }
    std::vector<double> structural_solution() const;
    /// One dual per original row (plus added rows), in the convention where
    /// >= rows have nonnegative duals in a minimization problem.
    std::vector<double> dual_values() const;
    double value(int j) const { return col_value(j); }

    int num_rows() const { return m_; }
    long iterations() const { return iter_total_; }

private:
    enum class ColStatus : unsigned char { Basic, AtLower, AtUpper, NBFree };

    struct SparseCol {
        std::vector<int> row;
        std::vector<double> val;
    };

    int n_struct_ = 0;
    int m_ = 0;  // rows == slack count
    std::vector<SparseCol> cols_;
    std::vector<double> lb_, ub_, cost_;
    std::vector<double> b_;           // scaled rhs
    std::vector<double> row_scale_;   // original row r was multiplied by this
    std::vector<ColStatus> status_;
    std::vector<double> xval_;        // nonbasic values
    std::vector<int> basic_;          // row position -> column
    std::vector<int> basic_pos_;      // column -> row position or -1
    Eigen::MatrixXd binv_;
    Eigen::VectorXd xb_;
    bool binv_valid_ = false;
    bool xb_valid_ = false;
    double obj_value_ = 0.0;
    long iter_total_ = 0;
    int pivots_since_refactor_ = 0;

    int num_cols() const { return static_cast<int>(cols_.size()); }
    double col_value(int j) const {
        return status_[j] == ColStatus::Basic ? xb_[basic_pos_[j]] : xval_[j];
    }
    void ensure_binv();
    void refactorize();
    void compute_xb();
    Eigen::VectorXd ftran(int j) const;  // binv * A_j
    double infeasibility() const;
    SolveStatus run_phase(bool phase1);
    void pivot(int enter, int sgn, const Eigen::VectorXd& w, int leave_pos,
               bool leave_at_upper, double step);
};

}  // namespace robuc::lp
