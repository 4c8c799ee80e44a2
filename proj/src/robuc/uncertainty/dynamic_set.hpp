// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "robuc/lp/model.hpp"

namespace robuc::uncertainty {

enum class NormKind { L1, L2, Linf, L1Linf };

std::string norm_name(NormKind k);
NormKind norm_from_name(const std::string& name);

/// Available renewable power evolves as
///   pbar_t = f_t + g_t .* u_t,
///   u_t    = sum_l A_l u_{t-l} + B v_t,
/// with per-period caps ||v_t|| <= gamma, a budget sum_t ||v_t|| <=
/// rho*gamma*T, and box bounds 0 <= pbar <= p_max.  The L1Linf norm is
/// max(||.||_1 / sqrt(Nv), ||.||_inf).
struct DynamicUncertaintySet {
    Eigen::MatrixXd f, g;            // unit x period, MW
    std::vector<Eigen::MatrixXd> A;  // lag matrices, unit x unit
    Eigen::MatrixXd B;               // unit x Nv
    double gamma = 1.0;
    double rho = 1.0;
    Eigen::MatrixXd p_max;           // unit x period bounds
    NormKind norm_kind = NormKind::Linf;
    Eigen::MatrixXd u_init;          // unit x L; column l-1 holds u_{1-l}

    int num_units() const { return static_cast<int>(f.rows()); }
    int horizon() const { return static_cast<int>(f.cols()); }
    int num_factors() const { return static_cast<int>(B.cols()); }
    int lag() const { return static_cast<int>(A.size()); }

    /// Throws std::invalid_argument on dimension or range violations.
    void validate() const;

    /// The static special case: no dynamics, identity factor loading,
    /// full budget.
    static DynamicUncertaintySet make_static(const Eigen::MatrixXd& f,
                                             const Eigen::MatrixXd& g, double gamma,
                                             const Eigen::MatrixXd& p_max,
                                             NormKind norm = NormKind::Linf);
};

struct ScenarioPath {
    Eigen::MatrixXd pbar;             // unit x period, MW
    std::optional<Eigen::MatrixXd> u; // latent state
    std::optional<Eigen::MatrixXd> v; // factor innovations (Nv x period)
};

/// Explicit LP description of the set over stacked variables
/// (pbar, u, v[, y], s); used by the linear maximization oracle and, with
/// bounds written as rows, by exact dualization.
struct SetPolyhedron {
    lp::MathProgram prog;
    int n = 0, T = 0, nv = 0;

    int pbar(int i, int t) const { return i + n * t; }
    int u(int i, int t) const { return n * T + i + n * t; }
    int v(int k, int t) const { return 2 * n * T + k + nv * t; }
    int s(int t) const { return s_base + t; }
    int s_base = 0;
};

/// Assembles the polyhedron.  With bounds_as_rows, every variable bound
/// (pbar box, s caps, y >= 0) is emitted as an explicit row so the program
/// has free variables only — the shape dualization requires.
SetPolyhedron build_set_polyhedron(const DynamicUncertaintySet& set,
                                   bool bounds_as_rows = false);

/// max sum_{i,t} weights(i,t) * pbar_{it} over the set.  Returns the exact
/// LP optimum and one optimal vertex (with latent u, v attached).
std::pair<double, ScenarioPath> maximize_linear(const DynamicUncertaintySet& set,
                                                const Eigen::MatrixXd& weights);

/// Per-period bounds of total available power and of its one-step change,
/// obtained from 2T + 2(T-1) LP calls.  delta entries are indexed so that
/// delta_*(t) bounds total(t+1) - total(t).
struct TotalExtrema {
    Eigen::VectorXd total_min, total_max;  // length T
    Eigen::VectorXd delta_min, delta_max;  // length T-1
};
TotalExtrema set_extrema(const DynamicUncertaintySet& set);

/// Elementwise bounds pbar_{it} over the set (2nT LP calls); the interval
/// boxes used for constraint screening.
struct UnitExtrema {
    Eigen::MatrixXd lo, hi;  // unit x period
};
UnitExtrema unit_extrema(const DynamicUncertaintySet& set);

/// The one-period set for time t+1 given realizations through t: lags are
/// fixed at u_tau = (pbar_tau - f_tau) / g_tau, only the per-period cap
/// ||v_{t+1}|| <= gamma remains.  `realized` has t columns (may carry more;
/// extra columns are ignored).  Values outside [0, p_max] are clipped and
/// flagged via *clipped.
DynamicUncertaintySet condition_on_history(const DynamicUncertaintySet& set,
                                           const Eigen::MatrixXd& realized, int t,
                                           bool* clipped = nullptr);

/// Whether pbar can be produced by the recursion with norm-feasible
/// innovations.  Reconstructs u and least-squares v; fails if the factor
/// residual exceeds tol or any norm cap is violated beyond tol.
bool set_contains(const DynamicUncertaintySet& set, const Eigen::MatrixXd& pbar,
                  double tol = 1e-7, std::string* why = nullptr);

/// Norm value used by the caps, per norm_kind.
double budget_norm(NormKind kind, const Eigen::VectorXd& x);

}  // namespace robuc::uncertainty
