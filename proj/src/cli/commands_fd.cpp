#include <algorithm>
#include <charconv>

#include "commands.hpp"
#include "nbe/error.hpp"
#include "nbe/homlab/homlab.hpp"
#include "nbe/localring/local.hpp"

namespace nbe::cli::detail {

using nlohmann::json;

namespace {

std::optional<int> suffix_number(const std::string& s, std::string_view prefix) {
  if (!s.starts_with(prefix) || s.size() == prefix.size()) return std::nullopt;
  int v = 0;
  const auto* first = s.data() + prefix.size();
  const auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

// F_p[x, y] modulo the monomials outside `basis` (first entry (0, 0)).
FinDimAlgebra monomial_quotient(Coef p, const std::vector<std::pair<int, int>>& basis, std::string name) {
  const std::size_t d = basis.size();
  std::vector<std::vector<FpVector>> c(d, std::vector<FpVector>(d, FpVector(d, 0)));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const std::pair<int, int> m{basis[i].first + basis[j].first, basis[i].second + basis[j].second};
      const auto it = std::find(basis.begin(), basis.end(), m);
      if (it != basis.end()) c[i][j][static_cast<std::size_t>(it - basis.begin())] = 1;
    }
  FpVector unit(d, 0);
  unit[0] = 1;
  return FinDimAlgebra(p, c, unit, std::nullopt, std::move(name));
}

json space_json(const Subspace& S) {
  json rows = json::array();
  for (const auto& v : S.basis_vectors()) rows.push_back(v);
  return rows;
}

std::string preset_of(const Context& c) { return c.string("preset"); }

}  // namespace

FinDimAlgebra preset_algebra(const std::string& name, Coef p) {
  if (auto k = suffix_number(name, "T"); k && *k >= 1 && *k <= 6) return FinDimAlgebra::upper_triangular(p, *k);
  if (auto k = suffix_number(name, "M"); k && *k >= 1 && *k <= 6) return FinDimAlgebra::full_matrix(p, *k);
  if (auto k = suffix_number(name, "trunc"); k && *k >= 1 && *k <= 40)
    return FinDimAlgebra::truncated_polynomial(p, *k);
  if (auto m = suffix_number(name, "C"); m && *m >= 1 && *m <= 40) return FinDimAlgebra::cyclic_group_algebra(p, *m);
  if (name == "FxF") return FinDimAlgebra::product_of_fields(p);
  if (name == "plane") return monomial_quotient(p, {{0, 0}, {1, 0}, {0, 1}}, "F[x,y]/(x,y)^2");
  if (name == "ci") return monomial_quotient(p, {{0, 0}, {1, 0}, {0, 1}, {1, 1}}, "F[x,y]/(x^2,y^2)");
  throw ConfigError("field 'preset': unknown algebra '" + name + "' (T<k>, M<k>, trunc<k>, C<m>, FxF, plane, ci)");
}

FDModule module_from_spec(const std::string& spec, const FinDimAlgebra& A) {
  if (spec == "zero") return FDModule::zero(A);
  if (spec == "regular") return FDModule::regular(A);
  if (spec == "top") return FDModule::cyclic(A, jacobson_radical(A).space());
  if (auto i = suffix_number(spec, "simple:")) {
    const auto maxl = maximal_left_ideals(A);
    if (*i < 0 || static_cast<std::size_t>(*i) >= maxl.size())
      throw ConfigError("field 'module': " + std::to_string(maxl.size()) + " simple quotients available");
    return FDModule::cyclic(A, maxl[static_cast<std::size_t>(*i)].space());
  }
  throw ConfigError("field 'module': expected simple:<i>, regular, zero or top");
}

void cmd_localring(Context& c) {
  const FinDimAlgebra A = preset_algebra(preset_of(c), static_cast<Coef>(c.cfg.p));
  const SubspaceIdeal rad = jacobson_radical(A);
  const auto maxes = maximal_two_sided_ideals(A);
  const LocalClass cls = classify_local(A);

  std::string idem_summary;
  bool all_idem = true;
  json ideals = json::array();
  for (std::size_t k = 0; k < maxes.size(); ++k) {
    const bool idem = idempotent_ideal_check(maxes[k], A);
    all_idem = all_idem && idem;
    const auto exp = adic_comparison(A, maxes[k], maxes[k].space().intersect(A.central()));
    ideals.push_back({{"index", k + 1},
                      {"dimension", maxes[k].dim()},
                      {"basis", space_json(maxes[k].space())},
                      {"idempotent", idem},
                      {"adic_exponent", exp ? json(*exp) : json(nullptr)}});
  }
  c.add("classification", true, to_string(cls) + "; M_k^2 = M_k: " + (all_idem ? "true" : "false"),
        {{"class", to_string(cls)}, {"maximal_ideals", ideals}});

  const bool nilpotent = power(A, rad.space(), static_cast<int>(std::max<std::size_t>(A.dim(), 1))).is_zero();
  c.add("radical-nilpotent", nilpotent, "rad dim " + std::to_string(rad.dim()));

  bool contains = true;
  for (const auto& M : maxes) contains = contains && M.space().contains(rad.space());
  c.add("maximal-ideals-contain-radical", contains, std::to_string(maxes.size()) + " maximal two-sided ideals");

  if (cls == LocalClass::Quasi) {
    const auto& m = maxes.front();
    const Subspace mR = m.space().intersect(A.central());
    const auto k0 = adic_comparison(A, m, mR);
    c.add("quasi-adic", k0.has_value(),
          k0 ? "m^" + std::to_string(*k0) + " inside m_R A" : "powers of m stabilize outside m_R A");
  }

  const Subspace mR = maxes.front().space().intersect(A.central());
  const int k_max = static_cast<int>(c.integer("k_max"));
  const FiberReport fr = fiber_decomposability(A, mR, k_max);
  std::string detail = to_string(fr.verdict);
  if (fr.verdict == FiberReport::Verdict::FailsAt) detail += " k = " + std::to_string(fr.failing_k);
  detail += " (probe up to k_max = " + std::to_string(fr.k_max) + ")";
  c.add("fiber", true, detail,
        {{"verdict", to_string(fr.verdict)},
         {"failing_k", fr.failing_k},
         {"k_max", fr.k_max},
         {"stable_N", fr.stable_N},
         {"ideals_over", fr.over.size()}});
  c.notes.push_back("fiber decomposability is probed for k <= k_max only");
}

void cmd_radical(Context& c) {
  const FinDimAlgebra A = preset_algebra(preset_of(c), static_cast<Coef>(c.cfg.p));
  const SubspaceIdeal rad = jacobson_radical(A);
  int index = 0;
  while (!power(A, rad.space(), index).is_zero()) ++index;
  c.add("radical", true, "dim " + std::to_string(rad.dim()) + ", nilpotency index " + std::to_string(index),
        {{"dimension", rad.dim()}, {"nilpotency_index", index}, {"basis", space_json(rad.space())}});
}

void cmd_ext(Context& c) {
  const FinDimAlgebra A = preset_algebra(preset_of(c), static_cast<Coef>(c.cfg.p));
  const FDModule M = module_from_spec(c.string("module"), A);
  const int i = static_cast<int>(c.integer("degree"));
  const ExtResult E = ext_groups(M, A, i);
  const auto R = minimal_projective_resolution(M, A, i + 1);
  json ranks = json::array();
  for (const auto& st : R.stages) ranks.push_back(st.idempotents.size());
  c.add("ext", true, "dim Ext^" + std::to_string(i) + "(M, A) = " + std::to_string(E.dimension),
        {{"degree", i}, {"dimension", E.dimension}, {"generators_per_stage", ranks}, {"terminated", R.terminated}});
}

void cmd_grade(Context& c) {
  const FinDimAlgebra A = preset_algebra(preset_of(c), static_cast<Coef>(c.cfg.p));
  const FDModule M = module_from_spec(c.string("module"), A);
  const Grade g = grade(M, A, static_cast<int>(c.integer("budget")));
  c.add("grade", true, "j(M) = " + g.to_string(), {{"grade", g.to_string()}, {"budget", c.integer("budget")}});
}

void cmd_auslander(Context& c) {
  const FinDimAlgebra A = preset_algebra(preset_of(c), static_cast<Coef>(c.cfg.p));
  const FDModule M = module_from_spec(c.string("module"), A);
  const bool all = c.cfg.params.at("all_submodules").get<bool>();
  const AuslanderReport rep = auslander_probe(A, M, static_cast<int>(c.integer("depth")), all);
  json levels = json::array(), viol = json::array();
  for (const auto& l : rep.levels)
    levels.push_back({{"degree", l.degree}, {"ext_dimension", l.ext_dimension}, {"submodules", l.submodules_tested}});
  for (const auto& v : rep.violations)
    viol.push_back({{"degree", v.degree},
                    {"generators", v.generators},
                    {"submodule_dimension", v.submodule_dimension},
                    {"grade", v.grade}});
  std::string detail = rep.passed ? "no violation" : std::to_string(rep.violations.size()) + " violation(s), first";
  if (!rep.passed)
    detail += " at Ext^" + std::to_string(rep.violations.front().degree) + " with grade " +
              std::to_string(rep.violations.front().grade);
  detail += all ? " (all submodules)" : " (cyclic submodules)";
  c.add("auslander", rep.passed, detail, {{"levels", levels}, {"violations", viol}});
  c.notes.push_back("finite-dimensional probe of the Auslander condition, not a proof");
}

}  // namespace nbe::cli::detail
