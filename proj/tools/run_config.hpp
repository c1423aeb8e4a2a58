#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace choquet::cli {

// Every setting a subcommand can take. Flags given on the command line win
// over values loaded from a --config file.
struct RunConfig {
  std::string subcommand;
  std::string function = "t";
  std::string distortion = "identity";
  std::string family = "bernstein";
  int degree = 10;
  std::vector<int> ns;
  std::size_t grid = 101;
  std::vector<double> window{0.0, 1.0};
  std::vector<double> interval{0.0, 1.0};
  std::optional<double> domain_max;
  std::size_t cells = 1000;
  int level_grid = 4096;
  std::string c = "estimate";
  std::optional<double> compare_c;
  std::uint64_t seed = 42;
  int trials = 200;
  std::string output;
  std::string summary;
  std::string format;
  unsigned workers = 0;

  void Validate() const;
};

// Keys mirror the long flag names with dashes replaced by underscores.
// Unknown keys are rejected so that typos do not go unnoticed.
void ApplyJson(const nlohmann::json& j, RunConfig& config,
               const std::vector<std::string>& locked);

nlohmann::json ToJson(const RunConfig& config);

}  // namespace choquet::cli
