#pragma once

#include "helixforge/config.hpp"
#include "helixforge/report.hpp"

namespace helixforge {

/// Runs one command against a parsed config. Delegated errors surface as
/// error-status check entries; the function itself only throws for configs
/// that do not fit the command at all.
Report run_command(Command cmd, const RunConfig& cfg);

}  // namespace helixforge
