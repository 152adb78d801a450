#include "nbe/cli/run.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "commands.hpp"
#include "nbe/error.hpp"

namespace nbe::cli {

using nlohmann::json;

namespace {

using Handler = std::function<void(detail::Context&)>;

const std::map<std::string, Handler>& handlers();

json config_echo(const JobConfig& cfg) {
  json h = cfg.h ? json(*cfg.h) : json("standard");
  return {{"p", cfg.p},   {"n", cfg.n}, {"h", h}, {"command", cfg.command}, {"params", cfg.params},
          {"seed", cfg.seed}, {"output", cfg.output == OutputFormat::Json ? "json" : "text"}};
}

JobConfig sub_job(const JobConfig& base, std::string command, json params) {
  JobConfig j = base;
  j.command = std::move(command);
  j.params = std::move(params);
  return j;
}

// Fixed battery at the configured (p, n); every sub-check is prefixed with
// its command so names stay unique and sorted.
void report_all(detail::Context& c) {
  const JobConfig& b = c.cfg;
  const json trials = c.cfg.params.at("trials");
  int pn1 = 1;
  for (int i = 1; i < b.n; ++i) pn1 *= b.p;
  std::string expect_g1 = "x1";
  if (pn1 > 1) expect_g1 += "^" + std::to_string(pn1);
  const std::vector<std::pair<std::string, JobConfig>> jobs{
      {"chart-check", sub_job(b, "chart-check", json::object())},
      {"confluence-chart", sub_job(b, "confluence", {{"algebra", "chart"}, {"max_degree", 6}})},
      {"confluence-weyl", sub_job(b, "confluence", {{"algebra", "weyl"}, {"max_degree", 6}})},
      {"diagram-check", sub_job(b, "diagram-check", {{"trials", trials}, {"max_degree", 3}})},
      {"gr", sub_job(b, "gr", {{"max_d", 6}})},
      {"localring-T2", sub_job(b, "localring", {{"preset", "T2"}, {"k_max", 4}})},
      {"localring-T3", sub_job(b, "localring", {{"preset", "T3"}, {"k_max", 4}})},
      {"norm-g1", sub_job(b, "norm", {{"element", "g1"}, {"expect", expect_g1}, {"method", "auto"}})},
      {"sections-0", sub_job(b, "sections", {{"k", 0}})},
      {"sections-1", sub_job(b, "sections", {{"k", 1}})},
      {"twist", sub_job(b, "twist", {{"k", 1}, {"trials", trials}})},
      {"grade-trunc2", sub_job(b, "grade", {{"preset", "trunc2"}, {"module", "simple:0"}, {"budget", 3}})},
      {"grade-T2-simple1", sub_job(b, "grade", {{"preset", "T2"}, {"module", "simple:1"}, {"budget", 3}})},
      {"grade-zero", sub_job(b, "grade", {{"preset", "T2"}, {"module", "zero"}, {"budget", 3}})},
      {"auslander-trunc2", sub_job(b, "auslander",
                                   {{"preset", "trunc2"}, {"module", "simple:0"}, {"depth", 3}, {"all_submodules", true}})},
  };
  for (const auto& [label, job] : jobs) {
    const Report r = run(job);
    for (const auto& ch : r.checks) c.add(label + "/" + ch.name, ch.passed, ch.detail, ch.data);
    if (!r.error.empty()) c.add(label + "/error", false, r.error);
    for (const auto& n : r.notes)
      if (std::find(c.notes.begin(), c.notes.end(), n) == c.notes.end()) c.notes.push_back(n);
  }
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> h{
      {"nf", detail::cmd_nf},
      {"mul", detail::cmd_mul},
      {"norm", detail::cmd_norm},
      {"symbol", detail::cmd_symbol},
      {"diagram-check", detail::cmd_diagram_check},
      {"ord", detail::cmd_ord},
      {"twist", detail::cmd_twist},
      {"sections", detail::cmd_sections},
      {"confluence", detail::cmd_confluence},
      {"gr", detail::cmd_gr},
      {"chart-check", detail::cmd_chart_check},
      {"localring", detail::cmd_localring},
      {"radical", detail::cmd_radical},
      {"ext", detail::cmd_ext},
      {"grade", detail::cmd_grade},
      {"auslander", detail::cmd_auslander},
      {"report-all", report_all},
  };
  return h;
}

}  // namespace

const Check* Report::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

Report run(const JobConfig& cfg) {
  Report r;
  r.command = cfg.command;
  r.config = config_echo(cfg);
  detail::Context ctx{cfg, r.checks, r.notes};
  try {
    const auto it = handlers().find(cfg.command);
    if (it == handlers().end()) throw ConfigError("field 'command': unknown command '" + cfg.command + "'");
    it->second(ctx);
  } catch (const ConfigError& e) {
    r.error = e.what();
    r.exit_code = kExitConfig;
  } catch (const TooLarge& e) {
    r.error = std::string("budget exceeded: ") + e.what();
    r.exit_code = kExitBudget;
  } catch (const IncompleteSearch& e) {
    r.error = std::string("budget exceeded: ") + e.what();
    r.exit_code = kExitBudget;
  } catch (const Error& e) {
    r.error = e.what();
    r.exit_code = kExitCheckFailed;
  }
  std::stable_sort(r.checks.begin(), r.checks.end(), [](const Check& a, const Check& b) { return a.name < b.name; });
  std::sort(r.notes.begin(), r.notes.end());
  if (r.exit_code == kExitPass &&
      std::any_of(r.checks.begin(), r.checks.end(), [](const Check& c) { return !c.passed; }))
    r.exit_code = kExitCheckFailed;
  return r;
}

std::string render_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}, {"data", c.data}});
  json out{{"command", r.command},   {"config", r.config},       {"checks", checks},
           {"notes", r.notes},       {"passed", r.passed()},     {"exit_code", r.exit_code},
           {"error", r.error.empty() ? json(nullptr) : json(r.error)}, {"toolkit_version", kToolkitVersion}};
  return out.dump(2) + "\n";
}

std::string render_text(const Report& r) {
  std::ostringstream os;
  const json& cf = r.config;
  os << "nbe " << kToolkitVersion << "  command: " << r.command << "  p=" << cf["p"].get<int>()
     << " n=" << cf["n"].get<int>() << " h=" << (cf["h"].is_string() ? cf["h"].get<std::string>() : cf["h"].dump())
     << " seed=" << cf["seed"].get<std::uint64_t>() << "\n";
  std::size_t passed = 0;
  for (const auto& c : r.checks) {
    os << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail << "\n";
    if (c.passed) ++passed;
  }
  if (!r.error.empty()) os << "[ERROR] " << r.error << "\n";
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  os << (r.passed() ? "PASS" : "FAIL") << " (" << passed << "/" << r.checks.size() << " checks, exit "
     << r.exit_code << ")\n";
  return os.str();
}

std::string render(const Report& r, OutputFormat f) {
  return f == OutputFormat::Json ? render_json(r) : render_text(r);
}

}  // namespace nbe::cli
