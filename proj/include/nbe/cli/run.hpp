#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "nbe/cli/config.hpp"

namespace nbe::cli {

inline constexpr const char* kToolkitVersion = "0.1.0";

enum ExitCode : int { kExitPass = 0, kExitCheckFailed = 1, kExitConfig = 2, kExitBudget = 3 };

struct Check {
  std::string name;
  bool passed = true;
  std::string detail;  // one line
  nlohmann::json data = nlohmann::json::object();
};

/// Deterministic for a given config: no timings, checks sorted by name.
struct Report {
  std::string command;
  nlohmann::json config;  // echo of the validated config
  std::vector<Check> checks;
  std::vector<std::string> notes;
  int exit_code = kExitPass;
  std::string error;  // set when a module error stopped the run

  bool passed() const { return exit_code == kExitPass; }
  const Check* find(const std::string& name) const;
};

/// Runs the command; module errors become a report entry with a nonzero
/// exit code instead of escaping.
Report run(const JobConfig& cfg);

std::string render_text(const Report& r);
std::string render_json(const Report& r);
std::string render(const Report& r, OutputFormat f);

/// The command-line entry point: argv parsing, config loading ('-' reads
/// `in`), report on `out`, diagnostics on `err`. Returns the exit code.
int main_entry(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace nbe::cli
