#include "octa/bfile.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace octa {

std::vector<std::pair<i64, i64>> parse_bfile(std::istream& in, const std::string& name) {
  std::vector<std::pair<i64, i64>> terms;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    // Comment lines (leading '#') and blank lines are tolerated on input.
    std::string::size_type first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    i64 n, value;
    if (!(ls >> n >> value)) {
      std::ostringstream os;
      os << name << ":" << lineno << ": expected two integers, got \"" << line << "\"";
      throw std::runtime_error(os.str());
    }
    std::string extra;
    if (ls >> extra) {
      std::ostringstream os;
      os << name << ":" << lineno << ": trailing content \"" << extra << "\"";
      throw std::runtime_error(os.str());
    }
    terms.emplace_back(n, value);
  }
  return terms;
}

std::vector<std::pair<i64, i64>> parse_bfile_path(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open");
  return parse_bfile(in, path);
}

void write_bfile(std::ostream& out, const std::vector<std::pair<i64, i64>>& terms) {
  for (const auto& [n, value] : terms) out << n << ' ' << value << '\n';
}

}  // namespace octa
