// SPDX-License-Identifier: Apache-2.0
#include "robuc/lp/simplex.hpp"

#include <algorithm>
#include <cmath>

namespace robuc::lp {

namespace {
constexpr double kFeasTol = 1e-7;
constexpr double kDualTol = 1e-9;
constexpr double kPivotTol = 1e-8;
constexpr int kRefactorEvery = 120;
}  // namespace

Simplex::Simplex(const MathProgram& p) {
    n_struct_ = p.num_vars();
    const int m0 = p.num_rows();
    cols_.resize(n_struct_);
    lb_.reserve(n_struct_ + m0);
    for (int j = 0; j < n_struct_; ++j) {
        lb_.push_back(p.var(j).lb);
        ub_.push_back(p.var(j).ub);
        cost_.push_back(p.objective()[j]);
    }
    // accumulate duplicate terms per (row, col)
    std::vector<std::vector<std::pair<int, double>>> by_col(n_struct_);
    for (int r = 0; r < m0; ++r) {
        const LinRow& row = p.row(r);
        double amax = std::abs(row.rhs);
        for (const auto& t : row.terms) amax = std::max(amax, std::abs(t.coef));
        const double sc = amax > 1e-12 ? 1.0 / amax : 1.0;
        row_scale_.push_back(sc);
        b_.push_back(row.rhs * sc);
        for (const auto& t : row.terms) by_col[t.var].push_back({r, t.coef * sc});
    }
    for (int j = 0; j < n_struct_; ++j) {
        auto& v = by_col[j];
        std::sort(v.begin(), v.end());
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (!cols_[j].row.empty() && cols_[j].row.back() == v[k].first)
                cols_[j].val.back() += v[k].second;
            else {
                cols_[j].row.push_back(v[k].first);
                cols_[j].val.push_back(v[k].second);
            }
        }
    }
    // slacks: row r gets column n_struct_ + r, coefficient 1
    for (int r = 0; r < m0; ++r) {
        SparseCol sc;
        sc.row.push_back(r);
        sc.val.push_back(1.0);
        cols_.push_back(std::move(sc));
        cost_.push_back(0.0);
        switch (p.row(r).sense) {
            case RowSense::LE: lb_.push_back(0.0); ub_.push_back(kInf); break;
            case RowSense::GE: lb_.push_back(-kInf); ub_.push_back(0.0); break;
            case RowSense::EQ: lb_.push_back(0.0); ub_.push_back(0.0); break;
        }
    }
    m_ = m0;
    status_.assign(num_cols(), ColStatus::AtLower);
    xval_.assign(num_cols(), 0.0);
    basic_pos_.assign(num_cols(), -1);
    for (int j = 0; j < n_struct_; ++j) {
        if (std::isfinite(lb_[j])) {
            status_[j] = ColStatus::AtLower;
            xval_[j] = lb_[j];
        } else if (std::isfinite(ub_[j])) {
            status_[j] = ColStatus::AtUpper;
            xval_[j] = ub_[j];
        } else {
            status_[j] = ColStatus::NBFree;
            xval_[j] = 0.0;
        }
    }
    basic_.resize(m_);
    for (int r = 0; r < m_; ++r) {
        const int s = n_struct_ + r;
        basic_[r] = s;
        basic_pos_[s] = r;
        status_[s] = ColStatus::Basic;
    }
    binv_ = Eigen::MatrixXd::Identity(m_, m_);
    binv_valid_ = true;
}

void Simplex::set_var_bounds(int j, double lb, double ub) {
    lb_[j] = lb;
    ub_[j] = ub;
    if (status_[j] != ColStatus::Basic) {
        double v = xval_[j];
        if (std::isfinite(lb) && v <= lb) {
            xval_[j] = lb;
            status_[j] = ColStatus::AtLower;
        } else if (std::isfinite(ub) && v >= ub) {
            xval_[j] = ub;
            status_[j] = ColStatus::AtUpper;
        } else if (status_[j] != ColStatus::NBFree) {
            // stay put only if still on a bound; otherwise snap to nearest
            if (std::isfinite(lb)) {
                xval_[j] = lb;
                status_[j] = ColStatus::AtLower;
            } else if (std::isfinite(ub)) {
                xval_[j] = ub;
                status_[j] = ColStatus::AtUpper;
            } else {
                xval_[j] = 0.0;
                status_[j] = ColStatus::NBFree;
            }
        }
    }
    xb_valid_ = false;
}

void Simplex::add_row(const LinRow& row) {
    ensure_binv();
    if (xb_valid_ == false) compute_xb();
    double amax = std::abs(row.rhs);
    for (const auto& t : row.terms) amax = std::max(amax, std::abs(t.coef));
    const double sc = amax > 1e-12 ? 1.0 / amax : 1.0;
    const int r = m_;
    row_scale_.push_back(sc);
    b_.push_back(row.rhs * sc);
    // coefficients of the new row on current basic columns, in basis order
    Eigen::RowVectorXd z = Eigen::RowVectorXd::Zero(m_);
    for (const auto& t : row.terms) {
        cols_[t.var].row.push_back(r);
        cols_[t.var].val.push_back(t.coef * sc);
        if (basic_pos_[t.var] >= 0) z[basic_pos_[t.var]] += t.coef * sc;
    }
    SparseCol scol;
    scol.row.push_back(r);
    scol.val.push_back(1.0);
    cols_.push_back(std::move(scol));
    cost_.push_back(0.0);
    switch (row.sense) {
        case RowSense::LE: lb_.push_back(0.0); ub_.push_back(kInf); break;
        case RowSense::GE: lb_.push_back(-kInf); ub_.push_back(0.0); break;
        case RowSense::EQ: lb_.push_back(0.0); ub_.push_back(0.0); break;
    }
    const int scolidx = num_cols() - 1;
    status_.push_back(ColStatus::Basic);
    xval_.push_back(0.0);
    basic_pos_.push_back(r);
    basic_.push_back(scolidx);
    binv_.conservativeResize(m_ + 1, m_ + 1);
    binv_.block(0, m_, m_, 1).setZero();
    binv_.block(m_, 0, 1, m_) = -z * binv_.topLeftCorner(m_, m_);
    binv_(m_, m_) = 1.0;
    m_ += 1;
    xb_valid_ = false;
}

void Simplex::refactorize() {
    Eigen::MatrixXd B = Eigen::MatrixXd::Zero(m_, m_);
    for (int k = 0; k < m_; ++k) {
        const SparseCol& c = cols_[basic_[k]];
        for (std::size_t e = 0; e < c.row.size(); ++e) B(c.row[e], k) = c.val[e];
    }
    binv_ = B.partialPivLu().inverse();
    binv_valid_ = true;
    pivots_since_refactor_ = 0;
}

void Simplex::ensure_binv() {
    if (!binv_valid_ || binv_.rows() != m_) refactorize();
}

void Simplex::compute_xb() {
    Eigen::VectorXd rhs(m_);
    for (int r = 0; r < m_; ++r) rhs[r] = b_[r];
    for (int j = 0; j < num_cols(); ++j) {
        if (status_[j] == ColStatus::Basic || xval_[j] == 0.0) continue;
        const SparseCol& c = cols_[j];
        for (std::size_t e = 0; e < c.row.size(); ++e)
            rhs[c.row[e]] -= c.val[e] * xval_[j];
    }
    xb_ = binv_ * rhs;
    xb_valid_ = true;
}

Eigen::VectorXd Simplex::ftran(int j) const {
    const SparseCol& c = cols_[j];
    Eigen::VectorXd w = Eigen::VectorXd::Zero(m_);
    for (std::size_t e = 0; e < c.row.size(); ++e)
        w += c.val[e] * binv_.col(c.row[e]);
    return w;
}

double Simplex::infeasibility() const {
    double s = 0.0;
    for (int k = 0; k < m_; ++k) {
        const int j = basic_[k];
        if (xb_[k] < lb_[j]) s += lb_[j] - xb_[k];
        if (xb_[k] > ub_[j]) s += xb_[k] - ub_[j];
    }
    return s;
}

void Simplex::pivot(int enter, int sgn, const Eigen::VectorXd& w, int leave_pos,
                    bool leave_at_upper, double step) {
    const int leave = basic_[leave_pos];
    const double enter_val = col_value(enter) + sgn * step;
    for (int k = 0; k < m_; ++k) xb_[k] -= sgn * step * w[k];
    // leaving variable exits exactly on its bound
    xval_[leave] = leave_at_upper ? ub_[leave] : lb_[leave];
    status_[leave] = leave_at_upper ? ColStatus::AtUpper : ColStatus::AtLower;
    basic_pos_[leave] = -1;
    basic_[leave_pos] = enter;
    basic_pos_[enter] = leave_pos;
    status_[enter] = ColStatus::Basic;
    xb_[leave_pos] = enter_val;
    // eta update of binv
    const double piv = w[leave_pos];
    Eigen::RowVectorXd prow = binv_.row(leave_pos) / piv;
    for (int k = 0; k < m_; ++k) {
        if (k == leave_pos) continue;
        if (w[k] != 0.0) binv_.row(k) -= w[k] * prow;
    }
    binv_.row(leave_pos) = prow;
    if (++pivots_since_refactor_ >= kRefactorEvery) {
        refactorize();
        compute_xb();
    }
}

SolveStatus Simplex::run_phase(bool phase1) {
    const long iter_limit = 2000 + 200L * (m_ + n_struct_);
    long iters = 0;
    long degenerate_streak = 0;
    while (true) {
        if (++iters > iter_limit) return SolveStatus::Limit;
        ++iter_total_;
        const bool bland = degenerate_streak > 3L * (m_ + 10);
        // phase costs on basic variables
        Eigen::VectorXd db = Eigen::VectorXd::Zero(m_);
        bool feas = true;
        for (int k = 0; k < m_; ++k) {
            const int j = basic_[k];
            if (phase1) {
                if (xb_[k] < lb_[j] - kFeasTol) {
                    db[k] = -1.0;
                    feas = false;
                } else if (xb_[k] > ub_[j] + kFeasTol) {
                    db[k] = 1.0;
                    feas = false;
                }
            } else {
                db[k] = cost_[j];
            }
        }
        if (phase1 && feas) return SolveStatus::Optimal;
        Eigen::VectorXd y = binv_.transpose() * db;
        // pricing
        int enter = -1, sgn = 0;
        double best = bland ? 0.0 : kDualTol;
        for (int j = 0; j < num_cols(); ++j) {
            if (status_[j] == ColStatus::Basic) continue;
            if (lb_[j] == ub_[j] && status_[j] != ColStatus::NBFree) continue;
            const SparseCol& c = cols_[j];
            double rc = phase1 ? 0.0 : cost_[j];
            for (std::size_t e = 0; e < c.row.size(); ++e)
                rc -= y[c.row[e]] * c.val[e];
            double improve = 0.0;
            int dir = 0;
            if (status_[j] == ColStatus::AtLower && rc < -kDualTol) {
                improve = -rc;
                dir = 1;
            } else if (status_[j] == ColStatus::AtUpper && rc > kDualTol) {
                improve = rc;
                dir = -1;
            } else if (status_[j] == ColStatus::NBFree && std::abs(rc) > kDualTol) {
                improve = std::abs(rc);
                dir = rc < 0 ? 1 : -1;
            }
            if (dir == 0) continue;
            if (bland) {  // first eligible index
                enter = j;
                sgn = dir;
                break;
            }
            if (improve > best) {
                best = improve;
                enter = j;
                sgn = dir;
            }
        }
        if (enter < 0) {
            if (phase1) return SolveStatus::Infeasible;
            return SolveStatus::Optimal;
        }
        Eigen::VectorXd w = ftran(enter);
        // ratio test: Δx_enter = sgn t, Δxb = -sgn w t
        double tmax = kInf;
        int leave_pos = -1;
        bool leave_upper = false;
        double best_rate = 0.0;
        if (std::isfinite(ub_[enter]) && std::isfinite(lb_[enter]))
            tmax = ub_[enter] - lb_[enter];  // bound flip
        for (int k = 0; k < m_; ++k) {
            const int j = basic_[k];
            const double rate = -sgn * w[k];
            if (std::abs(rate) < kPivotTol) continue;
            double t = kInf;
            bool upper = false;
            const bool below = xb_[k] < lb_[j] - kFeasTol;
            const bool above = xb_[k] > ub_[j] + kFeasTol;
            if (phase1 && below) {
                if (rate > 0) t = (lb_[j] - xb_[k]) / rate;
                else continue;
            } else if (phase1 && above) {
                if (rate < 0) {
                    t = (xb_[k] - ub_[j]) / (-rate);
                    upper = true;
                } else
                    continue;
            } else if (rate < 0) {
                if (!std::isfinite(lb_[j])) continue;
                t = (xb_[k] - lb_[j]) / (-rate);
            } else {
                if (!std::isfinite(ub_[j])) continue;
                t = (ub_[j] - xb_[k]) / rate;
                upper = true;
            }
            if (t < -kFeasTol) t = 0.0;
            t = std::max(t, 0.0);
            const bool better =
                bland ? (t < tmax - 1e-12 ||
                         (t <= tmax + 1e-12 && leave_pos >= 0 &&
                          basic_[k] < basic_[leave_pos]))
                      : (t < tmax - 1e-12 ||
                         (t < tmax + 1e-12 && std::abs(rate) > best_rate));
            if (better) {
                tmax = t;
                leave_pos = k;
                leave_upper = upper;
                best_rate = std::abs(rate);
            }
        }
        if (!std::isfinite(tmax)) {
            if (phase1) return SolveStatus::Limit;  // cannot happen in theory
            return SolveStatus::Unbounded;
        }
        degenerate_streak = tmax < 1e-11 ? degenerate_streak + 1 : 0;
        if (leave_pos < 0) {
            // bound flip of entering variable
            xval_[enter] = sgn > 0 ? ub_[enter] : lb_[enter];
            status_[enter] =
                sgn > 0 ? ColStatus::AtUpper : ColStatus::AtLower;
            for (int k = 0; k < m_; ++k) xb_[k] -= sgn * tmax * w[k];
        } else {
            if (std::abs(w[leave_pos]) < kPivotTol) {
                refactorize();
                compute_xb();
                continue;
            }
            pivot(enter, sgn, w, leave_pos, leave_upper, tmax);
        }
    }
}

SolveStatus Simplex::solve() {
    ensure_binv();
    compute_xb();
    if (infeasibility() > kFeasTol) {
        SolveStatus s1 = run_phase(true);
        if (s1 != SolveStatus::Optimal) return s1;
    }
    SolveStatus s = run_phase(false);
    if (s == SolveStatus::Optimal || s == SolveStatus::Unbounded) {
        obj_value_ = 0.0;
        for (int j = 0; j < n_struct_; ++j)
            if (cost_[j] != 0.0) obj_value_ += cost_[j] * col_value(j);
    }
    return s;
}

std::vector<double> Simplex::structural_solution() const {
    std::vector<double> x(n_struct_);
    for (int j = 0; j < n_struct_; ++j) x[j] = col_value(j);
    return x;
}

std::vector<double> Simplex::dual_values() const {
    Eigen::VectorXd cb(m_);
    for (int k = 0; k < m_; ++k) cb[k] = cost_[basic_[k]];
    Eigen::VectorXd y = binv_.transpose() * cb;
    std::vector<double> d(m_);
    for (int r = 0; r < m_; ++r) d[r] = y[r] * row_scale_[r];
    return d;
}

}  // namespace robuc::lp
