#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

namespace twk::cli {

using Json = nlohmann::json;

struct Globals {
  bool json = false;
  std::uint64_t seed = 1;
  long precision = 20;
};

/// What the selected subcommand will do once parsing has finished. Commands
/// report failures by throwing the library's error types.
struct Dispatch {
  std::function<Json()> action;
  /// Exit status for a successful action that still reports a failure
  /// (verify with a failing criterion).
  int exit_code = 0;
  /// Human-readable rendering used without --json; indented JSON otherwise.
  std::function<std::string(const Json&)> pretty;
};

/// Registers every subcommand. Option storage is kept alive by `keep`.
void register_commands(CLI::App& app, const Globals& globals, Dispatch& dispatch,
                       std::vector<std::shared_ptr<void>>& keep);

}  // namespace twk::cli
