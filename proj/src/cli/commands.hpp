#pragma once

#include <random>
#include <string_view>

#include "nbe/cli/run.hpp"
#include "nbe/homlab/module.hpp"
#include "nbe/localring/fd_algebra.hpp"
#include "nbe/ncalg/presentation.hpp"
#include "nbe/normnbe/comm_poly.hpp"
#include "nbe/weyl/weyl.hpp"

namespace nbe::cli::detail {

struct Context {
  const JobConfig& cfg;
  std::vector<Check>& checks;
  std::vector<std::string>& notes;

  void add(std::string name, bool passed, std::string detail, nlohmann::json data = nlohmann::json::object()) {
    checks.push_back({std::move(name), passed, std::move(detail), std::move(data)});
  }
  long long integer(const char* key) const { return cfg.params.at(key).get<long long>(); }
  std::string string(const char* key) const { return cfg.params.at(key).get<std::string>(); }
  bool has(const char* key) const { return cfg.params.contains(key); }
};

SymplecticMatrix configured_form(const JobConfig& cfg);
WeylAlgebra configured_weyl(const JobConfig& cfg);
/// "weyl", "chart", "localized" or "non-jacobi".
AlgebraPresentation named_presentation(const JobConfig& cfg, const std::string& name);

/// Independent stream per check name, all derived from the config seed.
std::mt19937_64 stream(std::uint64_t seed, std::string_view name);
NCPoly random_element(const AlgebraPresentation& P, std::mt19937_64& rng, int max_degree, int max_terms = 4);

/// Parses a polynomial in x1..x{2n}.
CommPoly parse_center_poly(const std::string& text, int p, int n);

std::string show(const NCPoly& x, const AlgebraPresentation& P);

/// T<k>, M<k>, FxF, trunc<k>, C<m>, plane, ci.
FinDimAlgebra preset_algebra(const std::string& name, Coef p);
/// simple:<i>, regular, zero, top.
FDModule module_from_spec(const std::string& spec, const FinDimAlgebra& A);

void cmd_nf(Context& c);
void cmd_mul(Context& c);
void cmd_norm(Context& c);
void cmd_symbol(Context& c);
void cmd_diagram_check(Context& c);
void cmd_ord(Context& c);
void cmd_twist(Context& c);
void cmd_sections(Context& c);
void cmd_confluence(Context& c);
void cmd_gr(Context& c);
void cmd_chart_check(Context& c);
void cmd_localring(Context& c);
void cmd_radical(Context& c);
void cmd_ext(Context& c);
void cmd_grade(Context& c);
void cmd_auslander(Context& c);

}  // namespace nbe::cli::detail
