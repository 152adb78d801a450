#include <algorithm>

#include "commands.hpp"
#include "nbe/cli/element.hpp"
#include "nbe/error.hpp"
#include "nbe/ncalg/confluence.hpp"
#include "nbe/ncalg/graded.hpp"
#include "nbe/ncalg/pbw_ring.hpp"
#include "nbe/normnbe/norm.hpp"

namespace nbe::cli::detail {

using nlohmann::json;

SymplecticMatrix configured_form(const JobConfig& cfg) {
  try {
    if (!cfg.h) return SymplecticMatrix::standard(cfg.p, cfg.n);
    return SymplecticMatrix::from_integers(cfg.p, *cfg.h);
  } catch (const InvalidForm& e) {
    throw ConfigError(std::string("field 'h': ") + e.what());
  }
}

WeylAlgebra configured_weyl(const JobConfig& cfg) { return weyl_presentation(cfg.p, cfg.n, configured_form(cfg)); }

AlgebraPresentation named_presentation(const JobConfig& cfg, const std::string& name) {
  if (name == "weyl") return configured_weyl(cfg).presentation;
  if (name == "localized") return localized_weyl(cfg.p, cfg.n, configured_form(cfg));
  if (name == "chart") {
    const auto h = cfg.h ? configured_form(cfg) : SymplecticMatrix::chart_normal_form(cfg.p, cfg.n);
    try {
      return boundary_chart_presentation(cfg.p, cfg.n, h).presentation;
    } catch (const InvalidForm& e) {
      throw ConfigError(std::string("field 'h': ") + e.what());
    }
  }
  if (name == "non-jacobi") {
    // [g2,g1] = g3, [g3,g1] = 0, [g3,g2] = g2: the Jacobi sum is g3.
    const auto p = static_cast<Coef>(cfg.p);
    AlgebraPresentation::Builder b(cfg.p, {"g1", "g2", "g3"});
    b.relation(1, 0, NCPoly::monomial(Monomial::generator(3, 2), 1, p))
        .relation(2, 1, NCPoly::monomial(Monomial::generator(3, 1), 1, p));
    return b.build();
  }
  throw ConfigError("field 'algebra': expected weyl, chart, localized or non-jacobi");
}

std::mt19937_64 stream(std::uint64_t seed, std::string_view name) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (char ch : name) h = (h ^ static_cast<unsigned char>(ch)) * 1099511628211ull;
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32)};
  return std::mt19937_64(seq);
}

NCPoly random_element(const AlgebraPresentation& P, std::mt19937_64& rng, int max_degree, int max_terms) {
  const std::size_t g = P.ngens();
  NCPoly x(g, P.p());
  const int terms = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_terms));
  for (int t = 0; t < terms; ++t) {
    Monomial m(g);
    int budget = static_cast<int>(rng() % static_cast<unsigned>(max_degree + 1));
    while (budget > 0) {
      const std::size_t i = rng() % g;
      const bool neg = P.invertible() && *P.invertible() == i && rng() % 2 == 0;
      if ((neg && m[i] > 0) || (!neg && m[i] < 0)) continue;
      m.add(i, neg ? -1 : 1);
      --budget;
    }
    x.add_term(m, static_cast<Coef>(rng() % P.p()));
  }
  return x;
}

CommPoly parse_center_poly(const std::string& text, int p, int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= 2 * n; ++i) names.push_back("x" + std::to_string(i));
  PbwRing ring(AlgebraPresentation::Builder(p, names).build());
  const NCPoly x = parse_element(text, ring);
  const auto nv = static_cast<std::size_t>(2 * n);
  CommPoly out(nv, static_cast<Coef>(p));
  for (const auto& [m, c] : x.terms()) {
    CommPoly::Exponents e{};
    for (std::size_t i = 0; i < nv; ++i) e[i] = m[i];
    out = out + CommPoly::monomial(nv, static_cast<Coef>(p), e, c);
  }
  return out;
}

std::string show(const NCPoly& x, const AlgebraPresentation& P) { return to_string(x, P.names()); }

namespace {

std::string basis_list(const std::vector<NCPoly>& xs, const AlgebraPresentation& P) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? ", " : "") + show(xs[i], P);
  return out + "}";
}

NormMethod norm_method(const std::string& name) {
  if (name == "auto") return NormMethod::Auto;
  if (name == "bareiss") return NormMethod::Bareiss;
  if (name == "interpolation") return NormMethod::Interpolation;
  throw ConfigError("field 'method': expected auto, bareiss or interpolation");
}

}  // namespace

void cmd_nf(Context& c) {
  PbwRing R(named_presentation(c.cfg, c.string("algebra")));
  const NCPoly x = parse_element(c.string("element"), R);
  c.add("nf", true, show(x, R.presentation()), {{"normal_form", show(x, R.presentation())}, {"terms", x.size()}});
}

void cmd_mul(Context& c) {
  PbwRing R(named_presentation(c.cfg, c.string("algebra")));
  const NCPoly a = parse_element(c.string("a"), R), b = parse_element(c.string("b"), R);
  const NCPoly ab = R.multiply(a, b);
  c.add("mul", true, show(ab, R.presentation()), {{"product", show(ab, R.presentation())}});
}

void cmd_norm(Context& c) {
  const WeylAlgebra A = configured_weyl(c.cfg);
  PbwRing R(A.presentation);
  const NCPoly s = parse_element(c.string("element"), R);
  const CommPoly N = reduced_norm(s, A, norm_method(c.string("method")));
  c.add("norm", true, "N(" + show(s, A.presentation) + ") = " + to_string(N), {{"norm", to_string(N)}});
  if (c.has("expect")) {
    const CommPoly want = parse_center_poly(c.string("expect"), c.cfg.p, c.cfg.n);
    c.add("norm-expected", N == want, "expected " + to_string(want) + ", got " + to_string(N),
          {{"expected", to_string(want)}, {"actual", to_string(N)}});
  }
}

void cmd_symbol(Context& c) {
  const WeylAlgebra A = configured_weyl(c.cfg);
  PbwRing R(A.presentation);
  const NCPoly s = parse_element(c.string("element"), R);
  const GradedSymbol g = principal_symbol(s, A);
  const std::string deg = g.degree == kNegInfDegree ? "-inf" : std::to_string(g.degree);
  c.add("symbol", true, "degree " + deg + ", " + to_string(g.poly), {{"degree", deg}, {"symbol", to_string(g.poly)}});
}

void cmd_diagram_check(Context& c) {
  const WeylAlgebra A = configured_weyl(c.cfg);
  auto rng = stream(c.cfg.seed, "diagram-check");
  const auto trials = c.integer("trials");
  const int deg = static_cast<int>(c.integer("max_degree"));
  long long ok = 0;
  json failures = json::array();
  for (long long t = 0; t < trials; ++t) {
    NCPoly s = random_element(A.presentation, rng, deg);
    if (s.is_zero()) s = A.presentation.one();
    const DiagramReport d = norm_symbol_diagram(s, A);
    if (d.holds) ++ok;
    else
      failures.push_back({{"element", show(s, A.presentation)},
                          {"symbol_power", to_string(d.symbol_power)},
                          {"norm_leading", to_string(d.norm_leading)}});
  }
  c.add("diagram", ok == trials, std::to_string(ok) + "/" + std::to_string(trials) + " pass",
        {{"passed", ok}, {"trials", trials}, {"failures", failures}});
}

void cmd_ord(Context& c) {
  const WeylAlgebra A = configured_weyl(c.cfg);
  PbwRing R(A.presentation);
  const NCPoly s = parse_element(c.string("element"), R);
  const Order o = ord_at_H_dagger(reduced_norm(s, A));
  c.add("ord", true, "ord(N(" + show(s, A.presentation) + ")) = " + o.to_string(), {{"ord", o.to_string()}});
}

void cmd_twist(Context& c) {
  const WeylAlgebra A = configured_weyl(c.cfg);
  PbwRing R(A.presentation);
  const int k = static_cast<int>(c.integer("k"));
  if (c.has("element")) {
    const NCPoly s = parse_element(c.string("element"), R);
    const bool in = twist_membership(s, k, A);
    c.add("twist-membership", true,
          show(s, A.presentation) + " in twist(" + std::to_string(k) + "): " + (in ? "true" : "false"),
          {{"member", in}, {"k", k}});
  }
  const auto trials = c.integer("trials");
  if (trials > 0) {
    auto rng = stream(c.cfg.seed, "twist-filtration");
    long long applicable = 0;
    json failures = json::array();
    for (long long t = 0; t < trials; ++t) {
      const NCPoly a = random_element(A.presentation, rng, 3), b = random_element(A.presentation, rng, 3);
      // Smallest twists containing a and b, so every pair is applicable.
      int j = -8, l = -8;
      while (!twist_membership(a, j, A)) ++j;
      while (!twist_membership(b, l, A)) ++l;
      ++applicable;
      if (!twist_membership(R.multiply(a, b), j + l, A))
        failures.push_back({{"a", show(a, A.presentation)}, {"b", show(b, A.presentation)}, {"j", j}, {"k", l}});
    }
    c.add("twist-filtration", failures.empty(),
          std::to_string(applicable - static_cast<long long>(failures.size())) + "/" + std::to_string(applicable) +
              " pairs satisfy twist(j)*twist(k) in twist(j+k)",
          {{"pairs", applicable}, {"failures", failures}});
  }
  if (!c.has("element") && trials == 0) throw ConfigError("twist needs 'element' or 'trials' > 0");
}

void cmd_sections(Context& c) {
  const WeylAlgebra A = configured_weyl(c.cfg);
  const int k = static_cast<int>(c.integer("k"));
  int pn1 = 1;
  for (int i = 1; i < c.cfg.n; ++i) pn1 *= c.cfg.p;
  const int bound = c.has("degree_bound") ? static_cast<int>(c.integer("degree_bound")) : std::max(0, k * pn1);
  const auto basis = global_twist_sections(k, bound, A);
  json items = json::array();
  for (const auto& b : basis) items.push_back(show(b, A.presentation));
  c.add("sections", true,
        "twist(" + std::to_string(k) + "): dim " + std::to_string(basis.size()) + ", basis " +
            basis_list(basis, A.presentation),
        {{"k", k}, {"degree_bound", bound}, {"dimension", basis.size()}, {"basis", items}});
}

void cmd_confluence(Context& c) {
  const std::string name = c.string("algebra");
  const AlgebraPresentation P = named_presentation(c.cfg, name);
  const ConfluenceReport r = check_confluence(P, static_cast<int>(c.integer("max_degree")));
  json disc = json::array();
  for (const auto& d : r.discrepancies) disc.push_back({{"word", d.word}, {"discrepancy", show(d.discrepancy, P)}});
  std::string detail = name + ": " + std::to_string(r.overlaps_checked) + " overlaps checked, " +
                       std::to_string(r.overlaps_skipped) + " skipped, " + std::to_string(r.discrepancies.size()) +
                       " discrepancies";
  if (!r.discrepancies.empty())
    detail += " (first at " + r.discrepancies.front().word + ": " + show(r.discrepancies.front().discrepancy, P) + ")";
  c.add("confluence", r.passed, detail,
        {{"overlaps_checked", r.overlaps_checked}, {"overlaps_skipped", r.overlaps_skipped}, {"discrepancies", disc}});
}

void cmd_gr(Context& c) {
  const AlgebraPresentation C = named_presentation(c.cfg, "chart");
  const std::size_t g = C.ngens();
  const auto h = c.cfg.h ? configured_form(c.cfg) : SymplecticMatrix::chart_normal_form(c.cfg.p, c.cfg.n);
  const AlgebraPresentation G = associated_graded(C, {std::vector<int>(g, 1)});

  // Only [gb_j, gb_i] = h_ji u^2 survives; the other brackets drop in weight.
  bool verbatim = true;
  json rels = json::array();
  for (std::size_t j = 0; j < g; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      const NCPoly want = i >= 2 ? NCPoly::monomial(Monomial::generator(g, 0, 2), h(j, i), C.p()) : G.zero();
      verbatim = verbatim && G.relation(j, i) == want;
      rels.push_back("[" + G.name(j) + "," + G.name(i) + "] = " + show(G.relation(j, i), G));
    }
  c.add("gr-chart-relations", verbatim, "all-ones weights keep only [gb_j,gb_i] = h_ji u^2", {{"relations", rels}});

  std::vector<int> uw(g, 0);
  uw[0] = 1;
  const AlgebraPresentation Gu = associated_graded(G, {uw});
  const bool comm = is_commutative_presentation(Gu);
  c.add("gr-u-weight-commutative", comm, comm ? "commutative presentation" : "noncommutative");

  const auto poly = associated_graded(configured_weyl(c.cfg).presentation,
                                      {std::vector<int>(g, 1), WeightFiltration::Kind::Degree});
  const int max_d = static_cast<int>(c.integer("max_d"));
  bool match = true;
  json hf = json::array();
  for (int d = 0; d <= max_d; ++d) {
    const long long a = hilbert_function(G, d), b = hilbert_function(poly, d);
    const auto w = static_cast<long long>(word_span_dimension(G, d));
    match = match && a == b && w == b;
    hf.push_back({{"d", d}, {"gr", a}, {"words", w}, {"polynomial", b}});
  }
  c.add("gr-hilbert", match, "Hilbert function equals the polynomial ring's for d <= " + std::to_string(max_d),
        {{"values", hf}});
}

void cmd_chart_check(Context& c) {
  const ChartEmbeddingReport r = chart_embedding_check(c.cfg.p, c.cfg.n, configured_form(c.cfg));
  json orients = json::array();
  for (const auto& o : r.orientations) {
    json rels = json::array();
    for (const auto& rel : o.relations)
      rels.push_back({{"relation", rel.relation}, {"holds", rel.holds}, {"lhs", rel.lhs}, {"rhs", rel.rhs}});
    orients.push_back({{"label", o.label}, {"all_hold", o.all_hold}, {"relations", rels}});
  }
  std::string succ;
  for (const auto& s : r.succeeding) succ += (succ.empty() ? "" : ", ") + s;
  c.add("chart-embedding", r.passed, "orientations reproducing every relation: " + (succ.empty() ? "none" : succ),
        {{"orientations", orients}, {"succeeding", r.succeeding}});
}

}  // namespace nbe::cli::detail
