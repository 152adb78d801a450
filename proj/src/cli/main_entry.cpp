#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "nbe/cli/run.hpp"
#include "nbe/error.hpp"

namespace nbe::cli {

int main_entry(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations in Weyl algebras and finite-dimensional algebras over F_p"};
  std::string config_path, format;
  app.add_option("config", config_path, "JSON job file ('-' reads stdin)")->required();
  app.add_option("--output", format, "Override the config's output format")->check(CLI::IsMember({"text", "json"}));
  app.set_version_flag("--version", kToolkitVersion);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitConfig;
  }

  std::stringstream text;
  if (config_path == "-") {
    text << in.rdbuf();
  } else {
    std::ifstream file(config_path);
    if (!file) {
      err << "config error: cannot read " << config_path << "\n";
      return kExitConfig;
    }
    text << file.rdbuf();
  }

  JobConfig cfg;
  try {
    cfg = parse_config(text.str());
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  }
  if (format == "json") cfg.output = OutputFormat::Json;
  if (format == "text") cfg.output = OutputFormat::Text;

  const Report report = run(cfg);
  out << render(report, cfg.output);
  if (!report.error.empty()) err << "error: " << report.error << "\n";
  return report.exit_code;
}

}  // namespace nbe::cli
