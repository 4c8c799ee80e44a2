// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>

#include "robuc/robust/cg.hpp"

namespace robuc::robust {

/// Structured text dump of a solution: header with costs and statistics,
/// then the schedule and policy tensors as matrix blocks.
void write_solution(std::ostream& out, const UcSolution& sol);
void write_solution_file(const std::string& path, const UcSolution& sol);

UcSolution read_solution(std::istream& in, const std::string& source = "<stream>");
UcSolution read_solution_file(const std::string& path);

}  // namespace robuc::robust
