// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "robuc/uncertainty/dynamic_set.hpp"

namespace robuc::uncertainty {

/// Text dump of a set: a scalar header section followed by dense row-major
/// matrix blocks ("matrix <name> <rows> <cols>"), values at 1e-12 precision.
void write_set(std::ostream& out, const DynamicUncertaintySet& set);
void write_set_file(const std::string& path, const DynamicUncertaintySet& set);

DynamicUncertaintySet read_set(std::istream& in, const std::string& source = "<stream>");
DynamicUncertaintySet read_set_file(const std::string& path);

/// Columnar time-series table: "timestamp unit_id available_mw" per line,
/// '#' comments.  Rows are grouped into one matrix (unit x period) per
/// contiguous timestamp run; unit order is first-appearance order, returned
/// via *unit_ids.  A blank line starts a new path (trajectory).
std::vector<Eigen::MatrixXd> read_time_series(std::istream& in,
                                              std::vector<std::string>* unit_ids,
                                              const std::string& source = "<stream>");
std::vector<Eigen::MatrixXd> read_time_series_file(const std::string& path,
                                                   std::vector<std::string>* unit_ids);

void write_time_series(std::ostream& out, const std::vector<Eigen::MatrixXd>& paths,
                       const std::vector<std::string>& unit_ids);

}  // namespace robuc::uncertainty
