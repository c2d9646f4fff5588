#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "octa/intmath.hpp"

namespace octa {

// OEIS b-file convention: one "index value" pair per line, single space,
// newline-terminated, no header.

std::vector<std::pair<i64, i64>> parse_bfile(std::istream& in, const std::string& name);
std::vector<std::pair<i64, i64>> parse_bfile_path(const std::string& path);

void write_bfile(std::ostream& out, const std::vector<std::pair<i64, i64>>& terms);

}  // namespace octa
