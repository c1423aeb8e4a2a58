#include "run_config.hpp"

#include <algorithm>

#include "choquet/errors.hpp"

namespace choquet::cli {

namespace {

bool Locked(const std::vector<std::string>& locked, const std::string& key) {
  return std::find(locked.begin(), locked.end(), key) != locked.end();
}

}  // namespace

void RunConfig::Validate() const {
  if (window.size() != 2 || !(window[0] < window[1])) {
    throw ArgumentError("--window needs two increasing values a b");
  }
  if (interval.size() != 2 || !(interval[0] < interval[1])) {
    throw ArgumentError("--interval needs two increasing values a b");
  }
  if (grid < 1) throw ArgumentError("--grid must be >= 1");
  if (cells < 2) throw ArgumentError("--cells must be >= 2");
  if (trials < 1) throw ArgumentError("--trials must be >= 1");
  if (degree < 1) throw ArgumentError("--degree must be >= 1");
  for (int n : ns) {
    if (n < 1) throw ArgumentError("--ns entries must be >= 1");
  }
  if (!format.empty() && format != "csv" && format != "json" && format != "text") {
    throw ArgumentError("--format must be csv, json or text");
  }
}

void ApplyJson(const nlohmann::json& j, RunConfig& config,
               const std::vector<std::string>& locked) {
  if (!j.is_object()) throw ArgumentError("config file must hold a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (Locked(locked, key)) continue;
    if (key == "function") {
      config.function = value.get<std::string>();
    } else if (key == "distortion") {
      config.distortion = value.get<std::string>();
    } else if (key == "family") {
      config.family = value.get<std::string>();
    } else if (key == "degree") {
      config.degree = value.get<int>();
    } else if (key == "ns") {
      config.ns = value.get<std::vector<int>>();
    } else if (key == "grid") {
      config.grid = value.get<std::size_t>();
    } else if (key == "window") {
      config.window = value.get<std::vector<double>>();
    } else if (key == "interval") {
      config.interval = value.get<std::vector<double>>();
    } else if (key == "domain_max") {
      config.domain_max = value.get<double>();
    } else if (key == "cells") {
      config.cells = value.get<std::size_t>();
    } else if (key == "level_grid") {
      config.level_grid = value.get<int>();
    } else if (key == "c") {
      config.c = value.is_number() ? std::to_string(value.get<double>())
                                   : value.get<std::string>();
    } else if (key == "compare_c") {
      config.compare_c = value.get<double>();
    } else if (key == "seed") {
      config.seed = value.get<std::uint64_t>();
    } else if (key == "trials") {
      config.trials = value.get<int>();
    } else if (key == "output") {
      config.output = value.get<std::string>();
    } else if (key == "summary") {
      config.summary = value.get<std::string>();
    } else if (key == "format") {
      config.format = value.get<std::string>();
    } else if (key == "workers") {
      config.workers = value.get<unsigned>();
    } else if (key == "subcommand") {
      // Informational; the command line names the subcommand.
    } else {
      throw ArgumentError("unknown config key '" + key + "'");
    }
  }
}

nlohmann::json ToJson(const RunConfig& c) {
  nlohmann::json j{{"subcommand", c.subcommand}, {"function", c.function},
                   {"distortion", c.distortion}, {"family", c.family},
                   {"degree", c.degree},         {"ns", c.ns},
                   {"grid", c.grid},             {"window", c.window},
                   {"interval", c.interval},     {"cells", c.cells},
                   {"level_grid", c.level_grid}, {"c", c.c},
                   {"seed", c.seed},             {"trials", c.trials}};
  if (c.domain_max) j["domain_max"] = *c.domain_max;
  if (c.compare_c) j["compare_c"] = *c.compare_c;
  return j;
}

}  // namespace choquet::cli
