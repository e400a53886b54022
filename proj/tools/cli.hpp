#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace levels::cli {

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;  // word, file and optional sphere, by command
  std::optional<std::string> shape;
  std::optional<int> n;
  std::optional<int> truncation;
  std::uint64_t seed = 0;
  std::size_t budget_cells = 2'000'000;
  std::uint64_t budget_spheres = 1'000'000;
  std::optional<std::string> out;
  bool trace = false;
  std::optional<int> from;
  std::optional<int> to;
  std::optional<int> dom;
  int seeds = 5;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

// Throws CLI::ParseError (or CLI::Success for --help).
RunConfig parse_args(const std::vector<std::string>& args);

// Arguments that parse back to the same config.
std::vector<std::string> print_config(const RunConfig& cfg);

// Exit codes: 0 claim holds / sphere filled, 1 counterexample or no filler,
// 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace levels::cli
