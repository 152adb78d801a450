#include "nbe/cli/config.hpp"

#include <map>
#include <set>

#include "nbe/error.hpp"

namespace nbe::cli {

namespace {

using nlohmann::json;

struct ParamSpec {
  json fallback;  // null: required
  long long lo = 0, hi = 0;  // integer caps, ignored when lo == hi
};

const json kAbsent = {{"absent", true}};  // optional, no default

// Caps keep every job within desk-scale budgets.
const std::map<std::string, std::map<std::string, ParamSpec>>& schema() {
  static const std::map<std::string, std::map<std::string, ParamSpec>> s{
      {"nf", {{"algebra", {"weyl"}}, {"element", {nullptr}}}},
      {"mul", {{"algebra", {"weyl"}}, {"a", {nullptr}}, {"b", {nullptr}}}},
      {"norm", {{"element", {nullptr}}, {"expect", {kAbsent}}, {"method", {"auto"}}}},
      {"symbol", {{"element", {nullptr}}}},
      {"diagram-check", {{"trials", {50, 1, 1000}}, {"max_degree", {4, 0, 8}}}},
      {"ord", {{"element", {nullptr}}}},
      {"twist", {{"element", {kAbsent}}, {"k", {1, -16, 16}}, {"trials", {0, 0, 1000}}}},
      {"sections", {{"k", {1, -4, 4}}, {"degree_bound", {kAbsent, 0, 12}}}},
      {"confluence", {{"algebra", {"weyl"}}, {"max_degree", {6, 1, 12}}}},
      {"gr", {{"max_d", {6, 0, 10}}}},
      {"chart-check", {}},
      {"localring", {{"preset", {"T2"}}, {"k_max", {4, 1, 16}}}},
      {"radical", {{"preset", {"T2"}}}},
      {"ext", {{"preset", {"T2"}}, {"module", {"simple:0"}}, {"degree", {1, 0, 6}}}},
      {"grade", {{"preset", {"T2"}}, {"module", {"simple:0"}}, {"budget", {3, 0, 6}}}},
      {"auslander",
       {{"preset", {"T2"}}, {"module", {"simple:0"}}, {"depth", {2, 0, 6}}, {"all_submodules", {false}}}},
      {"report-all", {{"trials", {10, 1, 200}}}},
  };
  return s;
}

const std::set<std::string> kCoreFields{"p", "n", "h", "command", "params", "seed", "output"};

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw ConfigError("field '" + field + "': " + what);
}

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

void check_param(const std::string& key, const json& value, const ParamSpec& spec) {
  const json& ref = spec.fallback;
  if (spec.lo != spec.hi || ref.is_number_integer()) {
    if (!value.is_number_integer()) field_error(key, "expected an integer");
    const auto v = value.get<long long>();
    if (spec.lo != spec.hi && (v < spec.lo || v > spec.hi))
      field_error(key, "must lie in [" + std::to_string(spec.lo) + ", " + std::to_string(spec.hi) + "]");
  } else if (ref.is_boolean()) {
    if (!value.is_boolean()) field_error(key, "expected true or false");
  } else if (!value.is_string()) {
    field_error(key, "expected a string");
  }
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"nf",          "mul",        "norm",  "symbol",   "diagram-check",
                                              "ord",         "twist",      "sections", "confluence", "gr",
                                              "chart-check", "localring",  "radical", "ext",     "grade",
                                              "auslander",   "report-all"};
  return names;
}

JobConfig parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // Keep the parser's reason, drop its own position prefix.
    std::string why = e.what();
    if (const auto at = why.find(": ", why.find("column")); at != std::string::npos) why = why.substr(at + 2);
    throw ConfigError("syntax error at " + line_column(text, e.byte == 0 ? 0 : e.byte - 1) + ": " + why);
  }
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");

  JobConfig cfg;
  if (!doc.contains("p")) field_error("p", "missing");
  if (!doc["p"].is_number_integer()) field_error("p", "expected an integer");
  cfg.p = doc["p"].get<int>();
  if (cfg.p != 2 && cfg.p != 3 && cfg.p != 5 && cfg.p != 7) field_error("p", "p must be prime ≤ 7");
  if (!doc.contains("n")) field_error("n", "missing");
  if (!doc["n"].is_number_integer()) field_error("n", "expected an integer");
  cfg.n = doc["n"].get<int>();
  if (cfg.n != 1 && cfg.n != 2) field_error("n", "n must be 1 or 2");

  if (doc.contains("h") && !(doc["h"].is_string() && doc["h"] == "standard")) {
    const json& h = doc["h"];
    const auto size = static_cast<std::size_t>(2 * cfg.n);
    if (!h.is_array() || h.size() != size) field_error("h", "expected \"standard\" or a 2n x 2n integer matrix");
    std::vector<std::vector<long long>> rows;
    for (const auto& row : h) {
      if (!row.is_array() || row.size() != size) field_error("h", "every row needs 2n integer entries");
      std::vector<long long> r;
      for (const auto& e : row) {
        if (!e.is_number_integer()) field_error("h", "entries must be integers");
        r.push_back(e.get<long long>());
      }
      rows.push_back(std::move(r));
    }
    cfg.h = std::move(rows);
  }

  if (!doc.contains("command") || !doc["command"].is_string()) field_error("command", "missing or not a string");
  cfg.command = doc["command"].get<std::string>();
  const auto spec_it = schema().find(cfg.command);
  if (spec_it == schema().end()) field_error("command", "unknown command '" + cfg.command + "'");
  const auto& spec = spec_it->second;

  if (doc.contains("seed")) {
    if (!doc["seed"].is_number_unsigned()) field_error("seed", "expected a non-negative integer");
    cfg.seed = doc["seed"].get<std::uint64_t>();
  }
  if (doc.contains("output")) {
    if (doc["output"] == "text") cfg.output = OutputFormat::Text;
    else if (doc["output"] == "json") cfg.output = OutputFormat::Json;
    else field_error("output", "expected \"text\" or \"json\"");
  }

  json given = json::object();
  if (doc.contains("params")) {
    if (!doc["params"].is_object()) field_error("params", "expected an object");
    given = doc["params"];
  }
  for (const auto& [key, value] : doc.items()) {
    if (kCoreFields.contains(key)) continue;
    if (!spec.contains(key)) field_error(key, "unknown field");
    if (given.contains(key)) field_error(key, "given both at top level and in params");
    given[key] = value;
  }
  for (const auto& [key, value] : given.items()) {
    const auto it = spec.find(key);
    if (it == spec.end()) field_error("params." + key, "unknown field for command '" + cfg.command + "'");
    check_param(key, value, it->second);
    cfg.params[key] = value;
  }
  for (const auto& [key, ps] : spec) {
    if (cfg.params.contains(key)) continue;
    if (ps.fallback.is_null()) field_error(key, "required by command '" + cfg.command + "'");
    if (ps.fallback != kAbsent) cfg.params[key] = ps.fallback;
  }
  return cfg;
}

}  // namespace nbe::cli
