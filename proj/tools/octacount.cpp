// Command-line front end: compute A178797 terms, export the irreducible
// catalog, run the brute-force oracle, cross-verify, and inspect the orbit
// statistics of a single configuration.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "octa/bfile.hpp"
#include "octa/json_io.hpp"
#include "octa/oracle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;     // bad flags, unreadable/malformed input
constexpr int kExitMismatch = 2;  // verification failed

using octa::i64;

std::string format_terms(const std::vector<std::pair<i64, i64>>& terms,
                         const std::string& format) {
  std::ostringstream os;
  if (format == "bfile") {
    octa::write_bfile(os, terms);
  } else if (format == "csv") {
    os << "n,count\n";
    for (const auto& [n, v] : terms) os << n << ',' << v << '\n';
  } else {  // json
    octa::json arr = octa::json::array();
    for (const auto& [n, v] : terms) arr.push_back({n, v});
    os << arr.dump() << '\n';
  }
  return os.str();
}

int emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream out(output_path);
  if (!out) {
    std::cerr << "error: cannot open " << output_path << " for writing\n";
    return kExitUsage;
  }
  out << text;
  return kExitOk;
}

int run_verify(i64 max_n, const std::string& reference_path) {
  auto terms = octa::sequence_terms(max_n);

  const i64 oracle_max = std::min<i64>(max_n, 8);
  for (i64 n = 1; n <= oracle_max; ++n) {
    i64 expect = octa::brute_force_count(n);
    i64 got = terms[static_cast<std::size_t>(n - 1)].second;
    if (got != expect) {
      std::cerr << "mismatch at n=" << n << ": pipeline=" << got
                << " oracle=" << expect << "\n";
      return kExitMismatch;
    }
  }
  std::cout << "oracle agreement on n=1.." << oracle_max << "\n";

  if (!reference_path.empty()) {
    auto reference = octa::parse_bfile_path(reference_path);
    i64 compared = 0;
    for (const auto& [n, value] : reference) {
      if (n < 1 || n > max_n) continue;
      i64 got = terms[static_cast<std::size_t>(n - 1)].second;
      if (got != value) {
        std::cerr << "mismatch at n=" << n << ": pipeline=" << got
                  << " reference=" << value << "\n";
        return kExitMismatch;
      }
      ++compared;
    }
    std::cout << "reference agreement on " << compared << " terms from "
              << reference_path << "\n";
  }
  std::cout << "verify: OK\n";
  return kExitOk;
}

int run_orbit(const std::string& input_path, i64 grid) {
  octa::json j;
  if (input_path.empty()) {
    j = octa::json::parse(std::cin);
  } else {
    std::ifstream in(input_path);
    if (!in) throw std::runtime_error(input_path + ": cannot open");
    j = octa::json::parse(in);
  }
  octa::PointConfig config = octa::config_from_json(j).normalized();
  octa::OrbitStats stats = octa::translation_stats(config);
  std::cout << "omega " << octa::box_orbit(config).omega << "\n"
            << "alpha0 " << stats.alpha0 << "\n"
            << "alpha " << stats.alpha << "\n"
            << "beta " << stats.beta << "\n"
            << "gamma " << stats.gamma << "\n"
            << "count_new " << octa::count_in_cube(config, grid) << "\n"
            << "count_old " << octa::count_in_cube_via_translations(config, grid) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"regular octahedra with vertices in {0..n}^3 (OEIS A178797)"};
  app.require_subcommand(1);

  i64 max_n = 0;
  std::string format = "bfile";
  std::string output_path;
  std::string reference_path;
  std::string input_path;
  i64 grid = 0;
  bool allow_large = false;

  CLI::App* terms = app.add_subcommand("terms", "sequence terms up to --max");
  terms->add_option("--max", max_n, "largest grid size n")->required()->check(CLI::PositiveNumber);
  terms->add_option("--format", format, "bfile, csv or json")
      ->check(CLI::IsMember({"bfile", "csv", "json"}));
  terms->add_option("--output", output_path, "write to a file instead of stdout");

  CLI::App* irr = app.add_subcommand("irreducible", "catalog for horizon --max as JSON");
  irr->add_option("--max", max_n, "catalog horizon")->required()->check(CLI::PositiveNumber);
  irr->add_option("--output", output_path, "write to a file instead of stdout");

  CLI::App* oracle = app.add_subcommand("oracle", "brute-force counts up to --max");
  oracle->add_option("--max", max_n, "largest grid size n")->required()->check(CLI::PositiveNumber);
  oracle->add_flag("--allow-large", allow_large, "override the feasibility bound");
  oracle->add_option("--format", format, "bfile, csv or json")
      ->check(CLI::IsMember({"bfile", "csv", "json"}));
  oracle->add_option("--output", output_path, "write to a file instead of stdout");

  CLI::App* verify = app.add_subcommand(
      "verify", "cross-check pipeline terms against the oracle and a reference b-file");
  verify->add_option("--max", max_n, "largest grid size n")->required()->check(CLI::PositiveNumber);
  verify->add_option("--reference", reference_path, "b-file with expected terms");

  CLI::App* orbit = app.add_subcommand(
      "orbit", "orbit statistics and placement counts of a point config (JSON)");
  orbit->add_option("--grid", grid, "cube size for the placement counts")
      ->required()->check(CLI::PositiveNumber);
  orbit->add_option("--input", input_path, "config file (default: stdin)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (terms->parsed()) return emit(format_terms(octa::sequence_terms(max_n), format), output_path);
    if (irr->parsed())
      return emit(octa::dump_json(octa::catalog_to_json(octa::build_catalog(max_n))), output_path);
    if (oracle->parsed()) {
      std::vector<std::pair<i64, i64>> counts;
      for (i64 n = 1; n <= max_n; ++n) counts.emplace_back(n, octa::brute_force_count(n, allow_large));
      return emit(format_terms(counts, format), output_path);
    }
    if (verify->parsed()) return run_verify(max_n, reference_path);
    if (orbit->parsed()) return run_orbit(input_path, grid);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
