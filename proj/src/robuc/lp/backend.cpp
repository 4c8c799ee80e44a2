// SPDX-License-Identifier: Apache-2.0
#include "robuc/lp/backend.hpp"

namespace robuc::lp {

SolverBackend::SolverBackend(BackendOptions opts) : opts_(std::move(opts)) {
    if (opts_.name != "builtin")
        throw BackendError("solver backend '" + opts_.name +
                           "' is not compiled in (available: builtin)");
}

BackendCapability SolverBackend::capability() const {
    return {.supports_lazy_constraints = true, .supports_dual_values = true};
}

SolveResult SolverBackend::solve(const MathProgram& p,
                                 const LazyCallback& lazy) const {
    MilpOptions mo;
    mo.gap = opts_.gap;
    mo.time_limit = opts_.time_limit;
    mo.node_limit = opts_.node_limit;
    return solve_milp(p, mo, lazy);
}

SolveResult SolverBackend::solve_lp(const MathProgram& p) const {
    if (p.has_binaries())
        throw BackendError("LP solve requested on a program with binaries");
    return solve(p);
}

std::vector<double> SolverBackend::solve_lp_dual(const MathProgram& p) const {
    SolveResult r = solve_lp(p);
    if (r.status != SolveStatus::Optimal)
        throw BackendError(std::string("dual extraction failed: LP is ") +
                           to_string(r.status));
    return r.duals;
}

}  // namespace robuc::lp
