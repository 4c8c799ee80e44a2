// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <string>

#include "robuc/lp/milp.hpp"
#include "robuc/lp/model.hpp"

namespace robuc::lp {

struct BackendOptions {
    std::string name = "builtin";
    double gap = 0.01;
    double time_limit = 0.0;
    int threads = 1;
    long node_limit = 2000000;
};

struct BackendCapability {
    bool supports_lazy_constraints = false;
    bool supports_dual_values = false;
};

class BackendError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Uniform LP/MILP interface.  "builtin" is a bounded-variable simplex with
/// branch-and-bound and lazy constraint callbacks; other names would bind an
/// external engine and raise BackendError when that engine is not compiled in.
class SolverBackend {
public:
    explicit SolverBackend(BackendOptions opts = {});

    BackendCapability capability() const;
    SolveResult solve(const MathProgram& p,
                      const LazyCallback& lazy = nullptr) const;
    /// LP-only solve returning duals; throws BackendError on a MILP.
    SolveResult solve_lp(const MathProgram& p) const;
    std::vector<double> solve_lp_dual(const MathProgram& p) const;
    const BackendOptions& options() const { return opts_; }

private:
    BackendOptions opts_;
};

}  // namespace robuc::lp
