#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "choquet/errors.hpp"
#include "choquet/expr.hpp"
#include "commands.hpp"
#include "run_config.hpp"

namespace {

using choquet::cli::RunConfig;

// Options registered on a subcommand, keyed by config-file name.
using OptionMap = std::map<std::string, CLI::Option*>;

void AddFunction(CLI::App* cmd, RunConfig& c, OptionMap& m) {
  m["function"] = cmd->add_option("-f,--function", c.function,
                                  "Expression in t, e.g. \"abs(t-0.5)\"")
                      ->capture_default_str();
}

void AddDistortion(CLI::App* cmd, RunConfig& c, OptionMap& m) {
  m["distortion"] =
      cmd->add_option("-d,--distortion", c.distortion,
                      "identity | power:<alpha> | moebius | table:<csv>")
          ->capture_default_str();
}

void AddOutput(CLI::App* cmd, RunConfig& c, OptionMap& m, const char* formats) {
  m["output"] = cmd->add_option("-o,--output", c.output, "Write output to a file");
  m["format"] = cmd->add_option("--format", c.format, formats)
                    ->check(CLI::IsMember({"csv", "json", "text"}));
}

void AddWorkers(CLI::App* cmd, RunConfig& c, OptionMap& m) {
  m["workers"] = cmd->add_option(
      "--workers", c.workers, "Worker threads (0: CHOQUET_WORKERS or hardware)");
}

// Subcommands share one RunConfig, so per-command defaults are applied
// after parsing; `points` is only shown in --help here.
void AddGrid(CLI::App* cmd, RunConfig& c, OptionMap& m, std::size_t points) {
  m["grid"] = cmd->add_option("--grid", c.grid, "Number of evaluation points")
                  ->default_str(std::to_string(points));
  m["window"] = cmd->add_option("--window", c.window, "Evaluation window a b")
                    ->expected(2)
                    ->capture_default_str();
  m["domain_max"] = cmd->add_option(
      "--domain-max", c.domain_max,
      "Right end B of the window f may be sampled on (szasz, baskakov)");
}

void PrintParseError(const choquet::expr::ParseError& e, const std::string& text) {
  std::cerr << "error: " << e.what() << '\n'
            << "  " << text << '\n'
            << "  " << std::string(e.offset(), ' ') << "^\n";
}

}  // namespace

int main(int argc, char** argv) {
  using namespace choquet::cli;
  CLI::App app{"Choquet integrals, Kantorovich-Choquet operators and checks"};
  app.require_subcommand(1);
  app.fallthrough();  // --config may follow the subcommand
  std::string config_path;
  app.add_option("--config", config_path,
                 "JSON file with settings; keys are long flag names with '_'")
      ->check(CLI::ExistingFile);

  RunConfig config;
  std::map<CLI::App*, OptionMap> options;

  auto* integrate = app.add_subcommand("integrate", "Choquet integral and its oracle");
  {
    auto& m = options[integrate];
    AddFunction(integrate, config, m);
    AddDistortion(integrate, config, m);
    m["interval"] = integrate->add_option("-i,--interval", config.interval, "Interval a b")
                        ->expected(2)
                        ->capture_default_str();
    m["cells"] = integrate->add_option("-M,--cells", config.cells, "Sample cells")
                     ->capture_default_str();
    m["level_grid"] = integrate->add_option("--level-grid", config.level_grid,
                                            "Oracle subdivisions of the level axis")
                          ->capture_default_str();
    AddOutput(integrate, config, m, "text (default) or json");
  }

  auto* op = app.add_subcommand("operator", "Evaluate a Kantorovich-Choquet operator");
  {
    auto& m = options[op];
    AddFunction(op, config, m);
    AddDistortion(op, config, m);
    m["family"] = op->add_option("-F,--family", config.family,
                                 "bernstein | szasz | baskakov")
                      ->capture_default_str();
    m["degree"] = op->add_option("-n,--degree", config.degree, "Operator degree n")
                      ->capture_default_str();
    AddGrid(op, config, m, 101);
    AddOutput(op, config, m, "csv (default) or json");
    AddWorkers(op, config, m);
  }

  auto* korovkin = app.add_subcommand(
      "korovkin", "Check |K_n f - f| <= (c+1) omega(f; delta) and tabulate errors");
  {
    auto& m = options[korovkin];
    AddFunction(korovkin, config, m);
    AddDistortion(korovkin, config, m);
    m["family"] = korovkin->add_option("-F,--family", config.family,
                                       "bernstein | szasz | baskakov")
                      ->capture_default_str();
    m["ns"] = korovkin->add_option("--ns", config.ns,
                                   "Degrees, comma separated (default 1,2,4,...,64)")
                  ->delimiter(',');
    m["c"] = korovkin->add_option("-c", config.c,
                                  "Constant with nu <= c nu_bar, or 'estimate'")
                 ->capture_default_str();
    m["compare_c"] = korovkin->add_option(
        "--compare-c", config.compare_c,
        "Also record rows under this constant; does not affect the exit code");
    AddGrid(korovkin, config, m, 51);
    m["summary"] = korovkin->add_option("--summary", config.summary,
                                        "Write the JSON summary to a file");
    AddOutput(korovkin, config, m, "csv (default) or json");
    AddWorkers(korovkin, config, m);
  }

  auto* properties = app.add_subcommand(
      "properties", "Randomized integral and inequality suites");
  {
    auto& m = options[properties];
    AddDistortion(properties, config, m);
    m["seed"] = properties->add_option("--seed", config.seed, "Random seed")
                    ->capture_default_str();
    m["trials"] = properties->add_option("--trials", config.trials, "Trials per check")
                      ->capture_default_str();
    AddOutput(properties, config, m, "json");
    AddWorkers(properties, config, m);
  }

  auto* capacity = app.add_subcommand(
      "capacity", "Capacity, dual, submodularity and the constant c");
  {
    auto& m = options[capacity];
    AddDistortion(capacity, config, m);
    m["grid"] = capacity->add_option("--grid", config.grid, "Table points on [0,1]")
                    ->default_str("11");
    AddOutput(capacity, config, m, "text (default), csv or json");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  CLI::App* cmd = app.get_subcommands().front();
  config.subcommand = cmd->get_name();
  const std::map<CLI::App*, std::size_t> grid_defaults{
      {op, 101}, {korovkin, 51}, {capacity, 11}};
  if (auto it = grid_defaults.find(cmd);
      it != grid_defaults.end() && options[cmd]["grid"]->count() == 0) {
    config.grid = it->second;
  }

  try {
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      nlohmann::json j = nlohmann::json::parse(in);
      std::vector<std::string> locked;
      for (const auto& [key, opt] : options[cmd]) {
        if (opt->count() > 0) locked.push_back(key);
      }
      ApplyJson(j, config, locked);
    }
    config.Validate();
    if (cmd == integrate) return RunIntegrate(config, std::cout, std::cerr);
    if (cmd == op) return RunOperator(config, std::cout, std::cerr);
    if (cmd == korovkin) return RunKorovkin(config, std::cout, std::cerr);
    if (cmd == properties) return RunProperties(config, std::cout, std::cerr);
    return RunCapacity(config, std::cout, std::cerr);
  } catch (const choquet::expr::ParseError& e) {
    PrintParseError(e, config.function);
  } catch (const choquet::expr::EvalError& e) {
    std::cerr << "error: evaluation failed: " << e.what() << '\n';
  } catch (const choquet::WindowError& e) {
    std::cerr << "error: " << e.what() << " (required B = " << e.required_bound()
              << ")\n";
  } catch (const choquet::PreconditionError& e) {
    std::cerr << "error: precondition violated: " << e.what() << '\n';
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: config: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kInputError;
}
