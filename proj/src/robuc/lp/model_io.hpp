// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>

#include "robuc/lp/model.hpp"

namespace robuc::lp {

/// Debug dump in CPLEX LP text format (variables renamed x0, x1, ...).
void write_lp_format(const MathProgram& p, std::ostream& os);
std::string to_lp_format(const MathProgram& p);

/// Parses the subset of the LP format emitted by write_lp_format.
MathProgram read_lp_format(std::istream& is);

}  // namespace robuc::lp
