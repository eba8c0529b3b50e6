#pragma once

#include <string>

#include "config.hpp"

namespace twistmod::cli {

struct RunOutcome {
    Json report;
    int exit_code = 0;
};

enum class RunMode { Run, Tables };

/// Builds the module chain and runs the requested checks (Run) or only the tables (Tables).
/// Library errors become an "error" object in the report and a nonzero exit code.
RunOutcome execute(const RunConfig& config, RunMode mode, bool timing = false);

/// Report for a config that failed to load.
RunOutcome error_outcome(const TwistError& e);

/// Exit status for each error code (0, 2, 3 are reserved for pass / fail / uncertifiable).
int exit_code_for(ErrorCode code);

/// "json": pretty-printed with sorted keys; "csv": one row per leaf (section,path,value).
std::string render(const Json& report, const std::string& format);

}  // namespace twistmod::cli
