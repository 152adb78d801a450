#include "nbe/weyl/weyl.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "nbe/linalg/fp_matrix.hpp"
#include "nbe/ncalg/confluence.hpp"
#include "nbe/ncalg/graded.hpp"
#include "nbe/ncalg/pbw_ring.hpp"

namespace nbe {

namespace {

void check_n(int n) {
  if (n < 1 || n > 2) throw Unsupported("n must be 1 or 2");
}

std::vector<std::string> weyl_names(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= 2 * n; ++i) names.push_back("g" + std::to_string(i));
  return names;
}

AlgebraPresentation build_weyl(int p, int n, const SymplecticMatrix& h, bool invertible) {
  check_n(n);
  if (h.p() != p || h.n() != n) throw InvalidForm("symplectic matrix does not match (p, n)");
  const std::size_t g = 2 * static_cast<std::size_t>(n);
  AlgebraPresentation::Builder b(p, weyl_names(n));
  for (std::size_t j = 0; j < g; ++j)
    for (std::size_t i = 0; i < j; ++i) b.relation(j, i, NCPoly::constant(g, h.p(), h(j, i)));
  if (invertible) b.invertible(0);
  return b.build();
}

// Decoupled means gamma_1, gamma_2 commute with every other generator.
bool first_pair_decoupled(const SymplecticMatrix& h) {
  for (std::size_t i = 2; i < h.size(); ++i)
    if (h(0, i) != 0 || h(1, i) != 0) return false;
  return true;
}

}  // namespace

SymplecticMatrix::SymplecticMatrix(int p, std::vector<std::vector<Coef>> entries)
    : p_(PrimeField::checked(p).p), h_(std::move(entries)) {
  const std::size_t m = h_.size();
  if (m == 0 || m % 2 != 0) throw InvalidForm("symplectic matrix must have even positive size");
  for (const auto& row : h_)
    if (row.size() != m) throw InvalidForm("symplectic matrix must be square");
  const PrimeField F(p_);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (h_[i][j] >= p_) throw InvalidForm("entries must be reduced mod p");
      if (h_[i][j] != F.neg(h_[j][i])) throw InvalidForm("matrix is not skew-symmetric");
    }
    if (h_[i][i] != 0) throw InvalidForm("diagonal must vanish");
  }
  FpMatrix M(m, m, p_);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) M(i, j) = h_[i][j];
  if (determinant(M) == 0) throw InvalidForm("matrix is degenerate mod p");
}

SymplecticMatrix SymplecticMatrix::from_integers(int p, const std::vector<std::vector<long long>>& rows) {
  const PrimeField F = PrimeField::checked(p);
  std::vector<std::vector<Coef>> e;
  for (const auto& r : rows) {
    std::vector<Coef> row;
    for (long long v : r) row.push_back(F.from_int(v));
    e.push_back(std::move(row));
  }
  return SymplecticMatrix(p, std::move(e));
}

SymplecticMatrix SymplecticMatrix::standard(int p, int n) {
  check_n(n);
  const PrimeField F = PrimeField::checked(p);
  const std::size_t m = 2 * static_cast<std::size_t>(n);
  std::vector<std::vector<Coef>> e(m, std::vector<Coef>(m, 0));
  for (std::size_t k = 0; k < m; k += 2) {
    e[k][k + 1] = 1;
    e[k + 1][k] = F.neg(1);
  }
  return SymplecticMatrix(p, std::move(e));
}

SymplecticMatrix SymplecticMatrix::chart_normal_form(int p, int n) {
  return standard(p, n).with_flipped_first_pair();
}

SymplecticMatrix SymplecticMatrix::with_flipped_first_pair() const {
  auto e = h_;
  const PrimeField F(p_);
  e[0][1] = F.neg(e[0][1]);
  e[1][0] = F.neg(e[1][0]);
  return SymplecticMatrix(p_, std::move(e));
}

bool SymplecticMatrix::is_chart_normal_form() const {
  return h_[0][1] == PrimeField(p_).neg(1) && first_pair_decoupled(*this);
}

WeylAlgebra weyl_presentation(int p, int n, const SymplecticMatrix& h) {
  AlgebraPresentation P = build_weyl(p, n, h, false);
  if (!check_confluence(P, 3).passed) {
    throw InternalInconsistency("Weyl presentation failed its confluence check");
  }
  return {p, n, h, std::move(P)};
}

AlgebraPresentation localized_weyl(int p, int n, const SymplecticMatrix& h) {
  return build_weyl(p, n, h, true);
}

ChartAlgebra boundary_chart_presentation(int p, int n, const SymplecticMatrix& h) {
  check_n(n);
  if (h.p() != p || h.n() != n) throw InvalidForm("symplectic matrix does not match (p, n)");
  if (!first_pair_decoupled(h)) {
    throw InvalidForm("chart needs g1, g2 to commute with the remaining generators");
  }
  const std::size_t g = 2 * static_cast<std::size_t>(n);
  std::vector<std::string> names{"u", "v"};
  std::vector<int> weights{1, 2};
  for (std::size_t i = 3; i <= g; ++i) {
    names.push_back("gb" + std::to_string(i));
    weights.push_back(1);
  }
  const Coef pc = h.p();
  auto mono = [&](std::initializer_list<std::pair<std::size_t, int>> exps, Coef c) {
    Monomial m(g);
    for (auto [i, e] : exps) m.set(i, e);
    return NCPoly::monomial(m, c, pc);
  };
  AlgebraPresentation::Builder b(p, names);
  b.weights(weights);
  b.relation(1, 0, mono({{0, 3}}, 1));
  for (std::size_t i = 2; i < g; ++i) {
    b.relation(i, 0, NCPoly(g, pc));
    // [gb_i, v] = -u^2 gb_i
    b.relation(i, 1, mono({{0, 2}, {i, 1}}, PrimeField(pc).neg(1)));
    for (std::size_t j = 2; j < i; ++j) b.relation(i, j, mono({{0, 2}}, h(i, j)));
  }
  AlgebraPresentation P = b.build();
  if (!check_confluence(P, 6).passed) {
    throw InternalInconsistency("chart presentation failed its confluence check");
  }
  return {p, n, h, std::move(P)};
}

namespace {

ChartOrientation check_orientation(int p, int n, const SymplecticMatrix& h, std::string label) {
  const AlgebraPresentation L = localized_weyl(p, n, h);
  PbwRing ring(L);
  const std::size_t g = L.ngens();
  const NCPoly u = L.generator(0, -1);
  const NCPoly v = -ring.multiply(L.generator(1), u);
  std::vector<NCPoly> gb(g);
  for (std::size_t i = 2; i < g; ++i) gb[i] = ring.multiply(L.generator(i), u);
  const NCPoly u2 = ring.multiply(u, u);

  ChartOrientation out{std::move(label), h, true, {}};
  auto record = [&](std::string rel, const NCPoly& lhs, const NCPoly& rhs) {
    const bool ok = lhs == rhs;
    out.all_hold = out.all_hold && ok;
    out.relations.push_back({std::move(rel), ok, to_string(lhs, L.names()), to_string(rhs, L.names())});
  };
  record("[v,u] = u^3", ring.commutator(v, u), ring.multiply(u2, u));
  for (std::size_t i = 2; i < g; ++i) {
    const std::string gi = "gb" + std::to_string(i + 1);
    record("[u," + gi + "] = 0", ring.commutator(u, gb[i]), L.zero());
    record("[v," + gi + "] = u^2*" + gi, ring.commutator(v, gb[i]), ring.multiply(u2, gb[i]));
  }
  for (std::size_t i = 2; i < g; ++i) {
    for (std::size_t j = i + 1; j < g; ++j) {
      const std::string gi = "gb" + std::to_string(i + 1);
      const std::string gj = "gb" + std::to_string(j + 1);
      record("[" + gi + "," + gj + "] = h" + std::to_string(i + 1) + std::to_string(j + 1) + "*u^2",
             ring.commutator(gb[i], gb[j]), u2.scaled(h(i, j)));
    }
  }
  return out;
}

}  // namespace

ChartEmbeddingReport chart_embedding_check(int p, int n, const SymplecticMatrix& h) {
  ChartEmbeddingReport report{false, {}, {}};
  report.orientations.push_back(check_orientation(p, n, h, "as-given"));
  report.orientations.push_back(check_orientation(p, n, h.with_flipped_first_pair(), "flipped"));
  for (const auto& o : report.orientations)
    if (o.all_hold) report.succeeding.push_back(o.label);
  report.passed = !report.succeeding.empty();
  return report;
}

bool center_membership(const NCPoly& s, const WeylAlgebra& A) {
  PbwRing ring(A.presentation);
  for (std::size_t i = 0; i < A.presentation.ngens(); ++i)
    if (!ring.commutator(s, A.presentation.generator(i)).is_zero()) return false;
  return true;
}

CommPoly center_coordinates(const NCPoly& s, const WeylAlgebra& A) {
  if (!center_membership(s, A)) throw Unsupported("center_coordinates needs a central element");
  const std::size_t g = A.presentation.ngens();
  const int p = A.p;
  std::vector<CommPoly::Term> terms;
  for (const auto& [m, c] : s.terms()) {
    CommPoly::Exponents e{};
    for (std::size_t i = 0; i < g; ++i) {
      if (m[i] % p != 0) throw InternalInconsistency("central element has a non-p-power monomial");
      e[i] = m[i] / p;
    }
    terms.emplace_back(CommPoly::pack(e), c);
  }
  CommPoly f = CommPoly::from_terms(g, A.presentation.p(), VarFamily::X, std::move(terms));

  PbwRing ring(A.presentation);
  NCPoly back = A.presentation.zero();
  for (const auto& [k, c] : f.terms()) {
    const auto e = CommPoly::unpack(k);
    NCPoly prod = A.presentation.constant(c);
    for (std::size_t i = 0; i < g; ++i)
      if (e[i] != 0) prod = ring.multiply(prod, ring.power(A.presentation.generator(i), e[i] * p));
    back += prod;
  }
  if (!(back == s)) throw InternalInconsistency("center coordinates failed re-expansion");
  return f;
}

bool freeness_over_center(const WeylAlgebra& A, int max_degree) {
  const AlgebraPresentation& P = A.presentation;
  const std::size_t g = P.ngens();
  const int p = A.p;
  PbwRing ring(P);
  for (int d = 0; d <= max_degree; ++d) {
    // Enumerate (alpha, beta) with |alpha| + p|beta| = d, alpha_i < p.
    std::vector<NCPoly> products;
    std::vector<int> alpha(g, 0);
    while (true) {
      int a = 0;
      for (int x : alpha) a += x;
      if (a <= d && (d - a) % p == 0) {
        const int bdeg = (d - a) / p;
        std::vector<int> beta(g, 0);
        // All beta with |beta| = bdeg.
        std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
          if (i + 1 == g) {
            beta[i] = left;
            NCPoly z = P.one();
            for (std::size_t k = 0; k < g; ++k)
              if (beta[k] != 0) z = ring.multiply(z, ring.power(P.generator(k), beta[k] * p));
            NCPoly basis = P.one();
            for (std::size_t k = 0; k < g; ++k)
              if (alpha[k] != 0) basis = ring.multiply(basis, ring.power(P.generator(k), alpha[k]));
            products.push_back(ring.multiply(z, basis));
            return;
          }
          for (int e = 0; e <= left; ++e) {
            beta[i] = e;
            rec(i + 1, left - e);
          }
        };
        rec(0, bdeg);
      }
      std::size_t pos = 0;
      while (pos < g && ++alpha[pos] == p) alpha[pos++] = 0;
      if (pos == g) break;
    }
    std::map<Monomial, std::size_t> index;
    for (const auto& f : products)
      for (const auto& [m, c] : f.terms()) index.try_emplace(m, index.size());
    FpMatrix M(0, index.size(), P.p());
    FpVector row(index.size());
    for (const auto& f : products) {
      std::fill(row.begin(), row.end(), Coef{0});
      for (const auto& [m, c] : f.terms()) row[index.at(m)] = c;
      M.append_row(row);
    }
    const long long expected = hilbert_function(P, d);
    if (static_cast<long long>(products.size()) != expected) return false;
    if (static_cast<long long>(rank(M)) != expected) return false;
  }
  return true;
}

}  // namespace nbe
