#pragma once

#include <string>

#include "toa/cli/config.hpp"

namespace toa::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitVerificationFailure = 1;
inline constexpr int kExitConfigError = 2;

struct CommandOptions {
  bool strict = false;
  /// Overrides the config's "out" when nonempty.
  std::string out;
};

/// Each command writes its artifact and returns the process exit code.
/// Diagnostics go to standard error.
int cmd_series(const RunConfig& config, const CommandOptions& options);
int cmd_verify(const RunConfig& config, const CommandOptions& options);
int cmd_expectation(const RunConfig& config, const CommandOptions& options);
int cmd_quartic(const RunConfig& config, const CommandOptions& options);
int cmd_kernel(const RunConfig& config, const CommandOptions& options);

/// Loads the config and dispatches by command name, mapping ConfigError
/// and PreconditionError to exit code 2.
int run_command(const std::string& name, const std::string& config_path, const CommandOptions& options);

}  // namespace toa::cli
