#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace nbe::cli {

enum class OutputFormat { Text, Json };

/// A validated job. `params` holds only keys the command accepts, with
/// defaults filled in; top-level parameter keys are folded into it.
struct JobConfig {
  int p = 2;
  int n = 1;
  std::optional<std::vector<std::vector<long long>>> h;  // nullopt: standard
  std::string command;
  nlohmann::json params = nlohmann::json::object();
  std::uint64_t seed = 0;
  OutputFormat output = OutputFormat::Text;
};

/// Throws ConfigError naming the line (syntax) or the field (schema).
JobConfig parse_config(std::string_view text);

/// Subcommand names in documentation order.
const std::vector<std::string>& command_names();

}  // namespace nbe::cli
