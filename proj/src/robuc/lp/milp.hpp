// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>

#include "robuc/lp/model.hpp"

namespace robuc::lp {

/// Called at every integer-feasible candidate; returns violated rows to
/// inject (empty = candidate accepted as incumbent).
using LazyCallback =
    std::function<std::vector<LinRow>(const std::vector<double>& x)>;

struct MilpOptions {
    double gap = 0.01;          // relative optimality gap target
    double time_limit = 0.0;    // seconds, 0 = none
    long node_limit = 2000000;
    double int_tol = 1e-6;
};

SolveResult solve_milp(const MathProgram& p, const MilpOptions& opt,
                       const LazyCallback& lazy = nullptr);

}  // namespace robuc::lp
