#pragma once

#include "polyrad/shooting.hpp"

#include <iosfwd>
#include <string>

namespace polyrad {

/// Profile CSV: a comment line echoing the problem parameters and outcome,
/// a column header (r, v0..v{m-1}, v0'..v{m-1}'), then one row per node with
/// 17 significant digits (lossless double round-trip).
void write_profile_csv(const RadialProfile& p, std::ostream& os);
void write_profile_csv(const RadialProfile& p, const std::string& path);

/// Reads a profile written by write_profile_csv. The parameter echo is
/// parsed back; meta counters other than the outcome are not preserved.
RadialProfile read_profile_csv(std::istream& is);
RadialProfile read_profile_csv(const std::string& path);

}  // namespace polyrad
