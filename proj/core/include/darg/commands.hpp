#pragma once

#include <chrono>
#include <exception>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "darg/kb.hpp"

namespace darg {

/// Process exit codes of the command surface.
enum ExitCode : int {
  kExitOk = 0,
  kExitFalse = 1,
  kExitUsage = 2,
  kExitResource = 3,
  kExitParse = 4,
};

struct CommandOptions {
  /// Formula or conditional argument (accept, dl-entails, p-entails, args --claim).
  std::optional<std::string> claim;
  std::string format = "text";
  std::optional<std::string> semantics;
  std::string mode = "credulous";
  bool skeptical = false;
  /// verify-descriptive input.
  std::optional<std::string> graph_file;
  bool strict = false;
};

struct QueryResult {
  std::optional<bool> verdict;
  std::string output;
  int exit_code = kExitOk;
  std::chrono::microseconds elapsed{0};
};

const std::vector<std::string_view>& command_names();

/// Commands: args, attacks, graph, extensions, accept, dl-extensions,
/// dl-entails, p-entails, verify-descriptive.
QueryResult run_command(const KBDocument& doc, std::string_view command,
                        const CommandOptions& opts);

/// Exit code for an exception escaping the library.
int exit_code_for(const std::exception& e);

}  // namespace darg
