// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>

#include "robuc/sim/simulator.hpp"

namespace robuc::sim {

/// Structured text dump: header with the aggregate metrics, then one block
/// per trajectory with all per-period columns.  Everything the metrics need
/// survives a round trip, so reports can be audited offline.
void write_report(std::ostream& out, const SimulationReport& report);
void write_report_file(const std::string& path, const SimulationReport& report);

SimulationReport read_report(std::istream& in, const std::string& source = "<stream>");
SimulationReport read_report_file(const std::string& path);

/// Plain summary table (one row per metric) for terminal output.
std::string format_summary(const SimulationReport& report);

}  // namespace robuc::sim
