// SPDX-License-Identifier: Apache-2.0
#include "robuc/lp/milp.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>

#include "robuc/lp/simplex.hpp"

namespace robuc::lp {

namespace {

struct Node {
    std::vector<std::pair<int, int>> fixes;  // (binary var, value)
    double bound;
};

double rel_gap(double incumbent, double bound) {
    return (incumbent - bound) / std::max(1.0, std::abs(incumbent));
}

}  // namespace

SolveResult solve_milp(const MathProgram& p, const MilpOptions& opt,
                       const LazyCallback& lazy) {
    using clock = std::chrono::steady_clock;
    const auto t0 = clock::now();
    auto elapsed = [&] {
        return std::chrono::duration<double>(clock::now() - t0).count();
    };

    std::vector<int> bins;
    for (int j = 0; j < p.num_vars(); ++j)
        if (p.var(j).kind == VarKind::Binary) bins.push_back(j);

    Simplex lp(p);
    SolveResult res;
    if (bins.empty() && !lazy) {
        SolveStatus s = lp.solve();
        res.status = s;
        res.iterations = lp.iterations();
        if (s == SolveStatus::Optimal) {
            res.objective = lp.objective() + p.objective_constant;
            res.best_bound = res.objective;
            res.x = lp.structural_solution();
            res.duals = lp.dual_values();
        }
        return res;
    }

    double incumbent = kInf;
    std::vector<double> best_x;
    long nodes = 0;
    bool hit_limit = false;

    // best-bound node queue; the current node dives depth-first
    std::multimap<double, Node> open;
    open.insert({-kInf, Node{{}, -kInf}});

    auto apply_node = [&](const Node& nd) {
        for (int j : bins) lp.set_var_bounds(j, p.var(j).lb, p.var(j).ub);
        for (auto [j, v] : nd.fixes) lp.set_var_bounds(j, v, v);
    };

    auto frontier_bound = [&]() {
        return open.empty() ? kInf : open.begin()->first;
    };

    while (!open.empty()) {
        if (opt.time_limit > 0 && elapsed() > opt.time_limit) {
            hit_limit = true;
            break;
        }
        if (nodes >= opt.node_limit) {
            hit_limit = true;
            break;
        }
        // stop when the frontier proves the gap
        if (std::isfinite(incumbent) &&
            rel_gap(incumbent, frontier_bound()) <= opt.gap)
            break;
        Node nd = open.begin()->second;
        open.erase(open.begin());
        if (std::isfinite(incumbent) &&
            nd.bound > incumbent - opt.gap * std::max(1.0, std::abs(incumbent)))
            continue;
        apply_node(nd);

        bool dive = true;
        while (dive) {
            dive = false;
            ++nodes;
            SolveStatus s = lp.solve();
            if (s == SolveStatus::Limit) {
                hit_limit = true;
                break;
            }
            if (s == SolveStatus::Infeasible) break;
            if (s == SolveStatus::Unbounded) {
                res.status = SolveStatus::Unbounded;
                res.nodes = nodes;
                return res;
            }
            const double obj = lp.objective() + p.objective_constant;
            if (std::isfinite(incumbent) &&
                obj > incumbent - opt.gap * std::max(1.0, std::abs(incumbent)))
                break;  // pruned by bound
            std::vector<double> x = lp.structural_solution();
            int branch = -1;
            double worst_frac = opt.int_tol;
            for (int j : bins) {
                const double f = std::abs(x[j] - std::round(x[j]));
                if (f > worst_frac) {
                    worst_frac = f;
                    branch = j;
                }
            }
            if (branch < 0) {
                // integer feasible candidate
                if (lazy) {
                    std::vector<LinRow> cuts = lazy(x);
                    if (!cuts.empty()) {
                        for (const auto& c : cuts) lp.add_row(c);
                        dive = true;  // re-solve this node with the new rows
                        continue;
                    }
                }
                if (obj < incumbent) {
                    incumbent = obj;
                    best_x = std::move(x);
                }
                break;
            }
            // dive on the rounded side, queue the other child
            const int up = x[branch] >= 0.5 ? 1 : 0;
            Node other = nd;
            other.fixes.push_back({branch, 1 - up});
            other.bound = obj;
            open.insert({obj, std::move(other)});
            nd.fixes.push_back({branch, up});
            nd.bound = obj;
            lp.set_var_bounds(branch, up, up);
            dive = true;
        }
        if (hit_limit) break;
    }

    res.nodes = nodes;
    res.iterations = lp.iterations();
    if (!std::isfinite(incumbent)) {
        res.status = hit_limit ? SolveStatus::Limit : SolveStatus::Infeasible;
        return res;
    }
    res.objective = incumbent;
    res.best_bound = std::min(incumbent, frontier_bound());
    res.x = std::move(best_x);
    res.status = (!hit_limit || rel_gap(incumbent, res.best_bound) <= opt.gap)
                     ? SolveStatus::Optimal
                     : SolveStatus::Limit;
    return res;
}

}  // namespace robuc::lp
