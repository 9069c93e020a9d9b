#pragma once

#include <iosfwd>

#include "fixpoint/config.hpp"

namespace fixpoint {

/// Exit codes shared by the CLI and the command layer.
inline constexpr int exit_ok = 0;
inline constexpr int exit_config_error = 1;
inline constexpr int exit_hypothesis_violation = 2;
inline constexpr int exit_no_convergence = 3;

/// Dispatches a validated config, writing output files into
/// cfg.output_dir and a human-readable summary to `out`. Returns an exit
/// code; configuration and hypothesis failures arrive as exceptions from the
/// layers below and are mapped by run_command_catching.
int run_command(const RunConfig& cfg, std::ostream& out);

/// run_command plus the exception-to-exit-code mapping used by main.
int run_command_catching(const RunConfig& cfg, std::ostream& out, std::ostream& err);

} // namespace fixpoint
