#pragma once

#include <ostream>

#include "run_config.hpp"

namespace choquet::cli {

// Exit codes shared by every subcommand.
enum ExitCode : int { kOk = 0, kCheckFailed = 1, kInputError = 2 };

// Each command writes its main output to `out` (or --output) and notes to
// `err`. Input problems surface as exceptions, mapped to exit 2 by main.
int RunIntegrate(const RunConfig& config, std::ostream& out, std::ostream& err);
int RunOperator(const RunConfig& config, std::ostream& out, std::ostream& err);
int RunKorovkin(const RunConfig& config, std::ostream& out, std::ostream& err);
int RunProperties(const RunConfig& config, std::ostream& out, std::ostream& err);
int RunCapacity(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace choquet::cli
