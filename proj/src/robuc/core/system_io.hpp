// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "robuc/core/system.hpp"

namespace robuc::core {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Reads a system description in the sectioned key=value text format.
/// Sections open with "system", "generator <id>", "renewable <id>",
/// "storage <id>", "line <id>" or "demand <node>"; scalar values of
/// per-period fields are broadcast to the horizon.  Unknown section kinds
/// or keys raise ParseError.
PowerSystem read_system(std::istream& in, const std::string& source_name = "<stream>");
PowerSystem read_system_file(const std::string& path);

void write_system(std::ostream& out, const PowerSystem& sys);
void write_system_file(const std::string& path, const PowerSystem& sys);

}  // namespace robuc::core
