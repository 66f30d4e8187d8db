#pragma once

#include <nlohmann/json.hpp>
#include <ostream>
#include <string>
#include <vector>

namespace msemi::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitUsage = 2;

struct RunResult {
  /// Full output document; its "config" member reproduces the run.
  nlohmann::json document;
  /// Flat table for --format csv (first line carries the config as a comment).
  std::string csv;
  int exit_code = kExitPass;
};

/// Runs a resolved config such as the "config" member of an earlier output.
/// Throws msemi::ConfigError on unknown commands or keys.
RunResult execute(const nlohmann::json& config, bool with_csv = false);

/// Entry point behind the msemi binary; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace msemi::cli
