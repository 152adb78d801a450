#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "nbe/cli/element.hpp"
#include "nbe/cli/run.hpp"
#include "nbe/error.hpp"
#include "nbe/weyl/weyl.hpp"

using namespace nbe;
using namespace nbe::cli;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out, err;
};

Outcome invoke(const std::vector<std::string>& args, const std::string& stdin_text = {}) {
  std::vector<const char*> argv{"nbe"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = main_entry(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

std::string config_error(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return {};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("config: minimal and defaulted configs are valid") {
  const auto cfg = parse_config(R"({"p": 2, "n": 1, "command": "norm", "element": "g1"})");
  CHECK(cfg.p == 2);
  CHECK(cfg.n == 1);
  CHECK_FALSE(cfg.h.has_value());
  CHECK(cfg.params.at("element") == "g1");
  CHECK(cfg.params.at("method") == "auto");
  CHECK_FALSE(cfg.params.contains("expect"));
  CHECK(cfg.output == OutputFormat::Text);
  const auto std_h = parse_config(R"({"p": 3, "n": 2, "h": "standard", "command": "chart-check"})");
  CHECK_FALSE(std_h.h.has_value());
  const auto given = parse_config(R"({"p": 3, "n": 1, "h": [[0, 1], [-1, 0]], "command": "chart-check"})");
  REQUIRE(given.h.has_value());
  CHECK((*given.h)[1][0] == -1);
}

TEST_CASE("config: diagnostics name the field or the line") {
  CHECK(config_error(R"({"p": 4, "n": 1, "command": "norm", "element": "g1"})") ==
        "field 'p': p must be prime ≤ 7");
  CHECK(config_error(R"({"p": 11, "n": 1, "command": "chart-check"})") == "field 'p': p must be prime ≤ 7");
  CHECK(config_error(R"({"p": 2, "n": 3, "command": "chart-check"})").starts_with("field 'n'"));
  CHECK(config_error(R"({"p": 2, "n": 1, "command": "norm"})") == "field 'element': required by command 'norm'");
  CHECK(config_error(R"({"p": 2, "n": 1, "command": "norm", "elem": "g1"})") == "field 'elem': unknown field");
  CHECK(config_error(R"({"p": 2, "n": 1, "command": "frobnicate"})").starts_with("field 'command'"));
  CHECK(config_error(R"({"p": 2, "n": 1, "h": [[0, 1]], "command": "chart-check"})").starts_with("field 'h'"));
  CHECK(config_error(R"({"p": 2, "n": 1, "h": [[0, "a"], [1, 0]], "command": "chart-check"})")
            .starts_with("field 'h'"));
  CHECK(config_error(R"({"p": 2, "n": 1, "command": "diagram-check", "trials": 5000})") ==
        "field 'trials': must lie in [1, 1000]");
  CHECK(config_error(R"({"p": 2, "n": 1, "command": "norm", "element": "g1", "params": {"element": "g2"}})")
            .starts_with("field 'element'"));
  CHECK(config_error(R"({"p": 2, "n": 1, "command": "norm", "params": {"element": 3}})") ==
        "field 'element': expected a string");
  CHECK(config_error(R"({"p": 2, "n": 1, "command": "norm", "element": "g1", "output": "xml"})")
            .starts_with("field 'output'"));
  CHECK(config_error("{\"p\": 2,\n \"n\": 1,\n \"command\": }").starts_with("syntax error at line 3"));
  CHECK(config_error("[1, 2]") == "config must be a JSON object");
}

TEST_CASE("element parser") {
  const auto A = weyl_presentation(3, 1, SymplecticMatrix::standard(3, 1));
  PbwRing R(A.presentation);
  const auto& P = A.presentation;
  CHECK(parse_element("g1", R) == P.generator(0));
  CHECK(parse_element("g2*g1", R) == R.multiply(P.generator(1), P.generator(0)));
  CHECK(parse_element("(g1 + g2)^2", R) == R.power(P.generator(0) + P.generator(1), 2));
  CHECK(parse_element("-g1 + 4", R) == P.constant(1) - P.generator(0));
  CHECK(parse_element(" 2 * g1 ^ 3 ", R) == P.generator(0, 3).scaled(2));
  CHECK(parse_element("0", R).is_zero());
  auto error_of = [&](const char* text) {
    try {
      parse_element(text, R);
    } catch (const ConfigError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(error_of("g1 + g9") == "element \"g1 + g9\", column 6: unknown generator 'g9'");
  CHECK(error_of("g1 g2") == "element \"g1 g2\", column 4: unexpected 'g'");
  CHECK(error_of("g1^-1").find("invertible") != std::string::npos);
  CHECK(error_of("(g1").find("expected ')'") != std::string::npos);
  CHECK(error_of("").find("end of input") != std::string::npos);

  PbwRing L(localized_weyl(3, 1, SymplecticMatrix::standard(3, 1)));
  CHECK(parse_element("g1^-2*g1^2", L) == L.presentation().one());
}

TEST_CASE("exit codes") {
  CHECK(invoke({"-"}, R"({"p": 2, "n": 1, "command": "norm", "element": "g1"})").code == kExitPass);
  CHECK(invoke({"-"}, R"({"p": 2, "n": 1, "command": "confluence", "algebra": "non-jacobi"})").code ==
        kExitCheckFailed);
  const auto bad = invoke({"-"}, R"({"p": 4, "n": 1, "command": "norm", "element": "g1"})");
  CHECK(bad.code == kExitConfig);
  CHECK(bad.err == "config error: field 'p': p must be prime ≤ 7\n");
  CHECK(bad.out.empty());
  CHECK(invoke({"-"}, R"({"p": 2, "n": 1, "command": "ext", "preset": "T6"})").code == kExitBudget);
  CHECK(invoke({"/nonexistent/job.json"}).code == kExitConfig);
  CHECK(invoke({}).code == kExitConfig);
  // A form that is not skew is a config problem, found only when the job runs.
  CHECK(invoke({"-"}, R"({"p": 3, "n": 1, "h": [[0, 1], [1, 0]], "command": "chart-check"})").code == kExitConfig);
}

TEST_CASE("every subcommand is reachable") {
  const std::map<std::string, std::string> extra{{"nf", R"("element": "g1")"},
                                                 {"mul", R"("a": "g1", "b": "g2")"},
                                                 {"norm", R"("element": "g1")"},
                                                 {"symbol", R"("element": "g1")"},
                                                 {"ord", R"("element": "g1")"},
                                                 {"twist", R"("element": "g1")"},
                                                 {"diagram-check", R"("trials": 3)"},
                                                 {"report-all", R"("trials": 2)"}};
  for (const auto& name : command_names()) {
    CAPTURE(name);
    std::string text = R"({"p": 2, "n": 1, "command": ")" + name + "\"";
    if (extra.contains(name)) text += ", " + extra.at(name);
    text += "}";
    const Report r = run(parse_config(text));
    CHECK(r.exit_code == kExitPass);
    CHECK_FALSE(r.checks.empty());
    CHECK(std::is_sorted(r.checks.begin(), r.checks.end(),
                         [](const Check& a, const Check& b) { return a.name < b.name; }));
  }
  CHECK(command_names().size() == 17);
}

TEST_CASE("reports are byte-identical for the same config and seed") {
  const std::string text = R"({"p": 2, "n": 1, "command": "report-all", "seed": 9, "trials": 5, "output": "json"})";
  const auto a = invoke({"-"}, text), b = invoke({"-"}, text);
  CHECK(a.code == kExitPass);
  CHECK(a.out == b.out);
  const auto other = invoke({"-"}, R"({"p": 2, "n": 1, "command": "diagram-check", "seed": 10, "trials": 5})");
  const auto same = invoke({"-"}, R"({"p": 2, "n": 1, "command": "diagram-check", "seed": 10, "trials": 5})");
  CHECK(other.out == same.out);
}

TEST_CASE("json report schema") {
  const Report r = run(parse_config(R"({"p": 2, "n": 1, "command": "localring", "preset": "T2"})"));
  const auto j = nlohmann::json::parse(render_json(r));
  for (const char* key : {"checks", "command", "config", "error", "exit_code", "notes", "passed", "toolkit_version"})
    CHECK(j.contains(key));
  CHECK(j["config"]["params"]["preset"] == "T2");
  CHECK(j["checks"][0]["name"] == "classification");
  CHECK(j["checks"][0]["detail"] == "not_demi; M_k^2 = M_k: true");
  CHECK(j["passed"] == true);
}

// Each tests/golden/cli/<name>.json is run through the command-line entry
// point; <name>.expected holds the exit code, stdout and stderr.
// NBE_WRITE_GOLDEN=1 rewrites the expectations.
TEST_CASE("golden command-line runs") {
  const fs::path dir = fs::path(NBE_GOLDEN_DIR) / "cli";
  std::vector<fs::path> configs;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".json") configs.push_back(e.path());
  std::sort(configs.begin(), configs.end());
  REQUIRE(configs.size() >= 20);
  for (const auto& cfg : configs) {
    CAPTURE(cfg.filename().string());
    const Outcome o = invoke({cfg.string()});
    const std::string got =
        "exit " + std::to_string(o.code) + "\n--- stdout\n" + o.out + "--- stderr\n" + o.err;
    fs::path expected = cfg;
    expected.replace_extension(".expected");
    if (std::getenv("NBE_WRITE_GOLDEN") != nullptr) std::ofstream(expected) << got;
    CHECK(got == slurp(expected));
  }
}
