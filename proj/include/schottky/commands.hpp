#pragma once

#include "schottky/config.hpp"

#include <string>
#include <vector>

namespace schottky {

inline constexpr const char* kToolName = "schottky-forge";
inline constexpr const char* kToolVersion = "0.1.0";

// Exit codes of the command-line contract.
inline constexpr int kExitComputed = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNumeric = 2;

const std::vector<std::string>& command_names();

struct CommandResult {
  int exit_code = kExitComputed;
  std::string report;  // JSON document with trailing newline; empty on error
  std::string svg;     // render only
  std::string error;   // message for exit codes 1 and 2
};

// Runs one command. Never throws: failures map onto the exit-code contract.
// A mathematical verdict of "fails" is still exit 0.
CommandResult run_command(const std::string& command, const RunConfig& cfg);

}  // namespace schottky
