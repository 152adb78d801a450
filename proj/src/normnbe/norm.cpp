#include "nbe/normnbe/norm.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "nbe/linalg/fp_matrix.hpp"
#include "nbe/ncalg/pbw_ring.hpp"

namespace nbe {

namespace {

constexpr std::size_t kBareissMaxSize = 9;
constexpr std::uint64_t kSectionSearchBudget = 1u << 16;

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

ExtField probe_field(Coef p, std::uint64_t min_order) {
  return ExtField::with_order_at_least(p, std::max<std::uint64_t>(min_order, 256));
}

std::vector<ExtField::Elem> random_point(const ExtField& F, std::size_t nvars, std::mt19937_64& rng) {
  std::vector<ExtField::Elem> pt(nvars);
  for (auto& v : pt) v = F.random(rng);
  return pt;
}

// Exponent vectors of total degree exactly d in nv variables, in descending
// lexicographic order (so g1 precedes g2).
std::vector<std::vector<int>> exponents_of_degree(std::size_t nv, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> e(nv, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == nv) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (int v = left; v >= 0; --v) {
      e[i] = v;
      rec(i + 1, left - v);
    }
  };
  if (nv == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  rec(0, d);
  return out;
}

CommPoly interpolated_norm(const CenterMatrix& L, const WeylAlgebra& A, int D, std::uint64_t seed) {
  const std::size_t nv = 2 * static_cast<std::size_t>(A.n);
  const Coef p = A.presentation.p();
  const int maxdeg = std::max(L.max_entry_degree(), 1);
  const ExtField F = probe_field(p, std::max<std::uint64_t>(static_cast<std::uint64_t>(D) + 1,
                                                         2 * L.size * static_cast<std::uint64_t>(maxdeg) + 1));
  const std::size_t side = static_cast<std::size_t>(D) + 1;
  std::vector<std::size_t> stride(nv, 1);
  for (std::size_t i = 1; i < nv; ++i) stride[i] = stride[i - 1] * side;
  std::vector<ExtField::Elem> grid(stride[nv - 1] * side, 0);

  // Nodes z_j = j as field elements (distinct since D < q).
  auto node = [](std::size_t j) { return static_cast<ExtField::Elem>(j); };

  std::vector<std::vector<int>> lower;
  for (int d = 0; d <= D; ++d)
    for (auto& e : exponents_of_degree(nv, d)) lower.push_back(std::move(e));
  auto offset = [&](const std::vector<int>& e) {
    std::size_t o = 0;
    for (std::size_t i = 0; i < nv; ++i) o += static_cast<std::size_t>(e[i]) * stride[i];
    return o;
  };

  for (const auto& e : lower) {
    std::vector<ExtField::Elem> pt(nv);
    for (std::size_t i = 0; i < nv; ++i) pt[i] = node(static_cast<std::size_t>(e[i]));
    // N(pt) is the p^n-th root of det(L(pt)), an inverse Frobenius power.
    grid[offset(e)] = F.frobenius(det_at(L, F, pt), -A.n);
  }

  // Lines of the lower set along one coordinate: base offset and length.
  auto for_each_line = [&](std::size_t dim, auto&& fn) {
    for (const auto& e : lower) {
      if (e[dim] != 0) continue;
      int rest = 0;
      for (std::size_t i = 0; i < nv; ++i) rest += e[i];
      fn(offset(e), static_cast<std::size_t>(D - rest) + 1);
    }
  };
  // All divided differences must precede any conversion: the two steps do
  // not commute on a lower set that is not a box.
  for (std::size_t dim = 0; dim < nv; ++dim) {
    for_each_line(dim, [&](std::size_t base, std::size_t len) {
      auto at = [&](std::size_t j) -> ExtField::Elem& { return grid[base + j * stride[dim]]; };
      for (std::size_t lvl = 1; lvl < len; ++lvl)
        for (std::size_t j = len - 1; j >= lvl; --j)
          at(j) = F.mul(F.sub(at(j), at(j - 1)), F.inv(F.sub(node(j), node(j - lvl))));
    });
  }
  for (std::size_t dim = 0; dim < nv; ++dim) {
    for_each_line(dim, [&](std::size_t base, std::size_t len) {
      auto at = [&](std::size_t j) -> ExtField::Elem& { return grid[base + j * stride[dim]]; };
      // Horner on c_0 + (x - z_0)(c_1 + (x - z_1)(c_2 + ...)).
      std::vector<ExtField::Elem> mono(len, 0);
      for (std::size_t a = len; a-- > 0;) {
        std::vector<ExtField::Elem> next(len, 0);
        for (std::size_t j = 0; j + 1 < len; ++j) next[j + 1] = F.add(next[j + 1], mono[j]);
        for (std::size_t j = 0; j < len; ++j) next[j] = F.sub(next[j], F.mul(mono[j], node(a)));
        next[0] = F.add(next[0], at(a));
        mono = std::move(next);
      }
      for (std::size_t j = 0; j < len; ++j) at(j) = mono[j];
    });
  }

  std::vector<CommPoly::Term> terms;
  for (const auto& e : lower) {
    const ExtField::Elem c = grid[offset(e)];
    if (c == 0) continue;
    if (!F.in_prime_field(c)) throw InternalInconsistency("interpolated norm has coefficients outside F_p");
    CommPoly::Exponents ex{};
    for (std::size_t i = 0; i < nv; ++i) ex[i] = e[i];
    terms.emplace_back(CommPoly::pack(ex), static_cast<Coef>(c));
  }
  CommPoly N = CommPoly::from_terms(nv, p, VarFamily::X, std::move(terms));

  std::mt19937_64 rng(seed);
  const std::uint64_t pn = ipow(p, A.n);
  for (int t = 0; t < 2; ++t) {
    const auto pt = random_point(F, nv, rng);
    if (F.pow(N.evaluate(F, std::span<const ExtField::Elem>(pt)), pn) != det_at(L, F, pt)) {
      throw InternalInconsistency("interpolated norm failed its random-point check");
    }
  }
  return N;
}

}  // namespace

int CenterMatrix::max_entry_degree() const {
  int d = 0;
  for (const auto& e : entries) d = std::max(d, e.degree());
  return d;
}

std::size_t basis_index(std::span<const int> alpha, int p) {
  std::size_t idx = 0;
  for (std::size_t i = alpha.size(); i-- > 0;) idx = idx * static_cast<std::size_t>(p) + static_cast<std::size_t>(alpha[i]);
  return idx;
}

CenterMatrix left_mult_matrix(const NCPoly& s, const WeylAlgebra& A) {
  const AlgebraPresentation& P = A.presentation;
  const std::size_t g = P.ngens();
  const int p = A.p;
  const std::size_t size = ipow(static_cast<std::uint64_t>(p), static_cast<int>(g));
  CenterMatrix M{size, std::vector<CommPoly>(size * size, CommPoly(g, P.p()))};
  PbwRing ring(P);
  std::vector<int> alpha(g, 0);
  for (std::size_t col = 0; col < size; ++col) {
    std::size_t rest = col;
    Monomial m(g);
    for (std::size_t i = 0; i < g; ++i) {
      alpha[i] = static_cast<int>(rest % static_cast<std::size_t>(p));
      rest /= static_cast<std::size_t>(p);
      m.set(i, alpha[i]);
    }
    const NCPoly prod = ring.multiply(s, NCPoly::monomial(m, 1, P.p()));
    std::vector<std::vector<CommPoly::Term>> column(size);
    for (const auto& [mono, c] : prod.terms()) {
      std::vector<int> r(g);
      CommPoly::Exponents q{};
      for (std::size_t i = 0; i < g; ++i) {
        r[i] = mono[i] % p;
        q[i] = mono[i] / p;
      }
      column[basis_index(r, p)].emplace_back(CommPoly::pack(q), c);
    }
    for (std::size_t row = 0; row < size; ++row)
      M.at(row, col) = CommPoly::from_terms(g, P.p(), VarFamily::X, std::move(column[row]));
  }
  return M;
}

ExtField::Elem det_at(const CenterMatrix& M, const ExtField& F, std::span<const ExtField::Elem> point) {
  const std::size_t n = M.size;
  std::vector<ExtField::Elem> a(n * n);
  for (std::size_t i = 0; i < n * n; ++i) a[i] = M.entries[i].evaluate(F, point);
  ExtField::Elem det = F.one();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv * n + k] == 0) ++piv;
    if (piv == n) return F.zero();
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
      det = F.neg(det);
    }
    det = F.mul(det, a[k * n + k]);
    const ExtField::Elem inv = F.inv(a[k * n + k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      const ExtField::Elem f = F.mul(a[i * n + k], inv);
      if (f == 0) continue;
      for (std::size_t j = k; j < n; ++j) a[i * n + j] = F.sub(a[i * n + j], F.mul(f, a[k * n + j]));
    }
  }
  return det;
}

CommPoly det_poly(const CenterMatrix& M, int cross_check_points, std::uint64_t seed) {
  const std::size_t n = M.size;
  if (n == 0) throw InternalInconsistency("determinant of an empty matrix");
  const std::size_t nv = M.entries[0].nvars();
  const Coef p = M.entries[0].p();
  std::vector<CommPoly> a = M.entries;
  bool negate = false;
  CommPoly prev = CommPoly::constant(nv, p, 1);
  CommPoly det(nv, p);
  for (std::size_t k = 0; k < n; ++k) {
    // Sparsest nonzero pivot in column k keeps intermediate entries small.
    std::size_t piv = n;
    for (std::size_t r = k; r < n; ++r) {
      if (a[r * n + k].is_zero()) continue;
      if (piv == n || a[r * n + k].size() < a[piv * n + k].size()) piv = r;
    }
    if (piv == n) return CommPoly(nv, p);
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
      negate = !negate;
    }
    if (k + 1 == n) {
      det = a[k * n + k];
      break;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        CommPoly t = a[k * n + k] * a[i * n + j] - a[i * n + k] * a[k * n + j];
        a[i * n + j] = t.divide_exact(prev);
      }
    }
    prev = a[k * n + k];
  }
  if (negate) det = det.scaled(PrimeField(p).neg(1));

  if (cross_check_points > 0) {
    const ExtField F = probe_field(p, 2 * n * static_cast<std::uint64_t>(std::max(M.max_entry_degree(), 1)) + 1);
    std::mt19937_64 rng(seed);
    for (int t = 0; t < cross_check_points; ++t) {
      const auto pt = random_point(F, nv, rng);
      if (det.evaluate(F, std::span<const ExtField::Elem>(pt)) != det_at(M, F, pt)) {
        throw InternalInconsistency("symbolic determinant failed its evaluation cross-check");
      }
    }
  }
  return det;
}

CommPoly reduced_norm(const NCPoly& s, const WeylAlgebra& A, NormMethod method) {
  const std::size_t nv = A.presentation.ngens();
  const Coef p = A.presentation.p();
  if (s.is_zero()) return CommPoly(nv, p);
  const CenterMatrix L = left_mult_matrix(s, A);
  if (method == NormMethod::Auto) method = L.size <= kBareissMaxSize ? NormMethod::Bareiss : NormMethod::Interpolation;
  if (method == NormMethod::Bareiss) {
    const CommPoly det = det_poly(L, 2);
    auto root = det.frobenius_root(static_cast<int>(ipow(p, A.n)));
    if (!root) throw InternalInconsistency("determinant is not a p^n-th power");
    return *root;
  }
  // deg N(s) = deg(s) p^{n-1}: the symbol diagram pins the leading form.
  const int D = s.degree() * static_cast<int>(ipow(p, A.n - 1));
  return interpolated_norm(L, A, D, 0x5eed);
}

GradedSymbol principal_symbol(const NCPoly& s, const WeylAlgebra& A) {
  const std::size_t nv = A.presentation.ngens();
  GradedSymbol out{kNegInfDegree, CommPoly(nv, A.presentation.p(), VarFamily::T)};
  if (s.is_zero()) return out;
  out.degree = s.degree();
  std::vector<CommPoly::Term> terms;
  const NCPoly top = s.homogeneous_part(out.degree);
  for (const auto& [m, c] : top.terms()) {
    CommPoly::Exponents e{};
    for (std::size_t i = 0; i < nv; ++i) e[i] = m[i];
    terms.emplace_back(CommPoly::pack(e), c);
  }
  out.poly = CommPoly::from_terms(nv, A.presentation.p(), VarFamily::T, std::move(terms));
  return out;
}

DiagramReport norm_symbol_diagram(const NCPoly& s, const WeylAlgebra& A) {
  DiagramReport r;
  const GradedSymbol rho = principal_symbol(s, A);
  r.symbol_power = rho.poly.pow(static_cast<unsigned>(ipow(A.presentation.p(), A.n)));
  r.norm_leading = reduced_norm(s, A).leading_form().lift_to_t();
  r.holds = r.symbol_power == r.norm_leading;
  return r;
}

bool check_norm_symbol_diagram(const NCPoly& s, const WeylAlgebra& A) { return norm_symbol_diagram(s, A).holds; }

Order ord_at_H_dagger(const CommPoly& f) {
  if (f.is_zero()) return Order::infinity();
  return {false, -static_cast<long long>(f.p()) * f.degree()};
}

bool twist_membership(const NCPoly& s, int k, const WeylAlgebra& A) {
  if (s.is_zero()) return true;
  const Order o = ord_at_H_dagger(reduced_norm(s, A));
  return o.infinite || o.value >= -static_cast<long long>(k) * static_cast<long long>(ipow(A.presentation.p(), A.n));
}

std::vector<NCPoly> global_twist_sections(int k, int degree_bound, const WeylAlgebra& A) {
  const AlgebraPresentation& P = A.presentation;
  const Coef p = P.p();
  const std::size_t g = P.ngens();
  const long long needed = static_cast<long long>(k) * static_cast<long long>(ipow(p, A.n - 1));
  if (degree_bound < needed) {
    throw IncompleteSearch("degree bound " + std::to_string(degree_bound) + " is below k p^(n-1) = " +
                           std::to_string(needed));
  }
  if (degree_bound < 0) return {};

  std::vector<Monomial> monos;
  for (int d = 0; d <= degree_bound; ++d) {
    for (const auto& e : exponents_of_degree(g, d)) {
      Monomial m(g);
      for (std::size_t i = 0; i < g; ++i) m.set(i, e[i]);
      monos.push_back(m);
    }
  }
  const std::size_t dim = monos.size();
  auto to_poly = [&](std::span<const Coef> v) {
    NCPoly x(g, p);
    for (std::size_t i = 0; i < dim; ++i)
      if (v[i] != 0) x.add_term(monos[i], v[i]);
    return x;
  };

  std::vector<FpVector> members;
  for (std::size_t i = 0; i < dim; ++i) {
    if (twist_membership(NCPoly::monomial(monos[i], 1, p), k, A)) {
      FpVector v(dim, 0);
      v[i] = 1;
      members.push_back(std::move(v));
    }
  }
  Subspace W = Subspace::span(members, dim, p);

  // Twists are closed under addition, so anything outside W reduces to a
  // nonzero member supported on the non-pivot monomials.
  while (true) {
    std::vector<std::size_t> free_cols;
    std::vector<bool> is_pivot(dim, false);
    for (auto c : W.pivots()) is_pivot[c] = true;
    for (std::size_t i = 0; i < dim; ++i)
      if (!is_pivot[i]) free_cols.push_back(i);
    const std::size_t codim = free_cols.size();
    if (codim == 0) break;
    if (codim >= 64 || ipow(p, static_cast<int>(codim)) > kSectionSearchBudget) {
      throw TooLarge("section search needs p^" + std::to_string(codim) + " candidates");
    }
    bool found = false;
    // Projective representatives: leading nonzero coordinate equal to 1.
    std::vector<Coef> digits(codim, 0);
    const std::uint64_t total = ipow(p, static_cast<int>(codim));
    for (std::uint64_t code = 1; code < total && !found; ++code) {
      std::uint64_t c = code;
      std::size_t last_nz = 0;
      for (std::size_t i = 0; i < codim; ++i) {
        digits[i] = static_cast<Coef>(c % p);
        c /= p;
        if (digits[i] != 0) last_nz = i;
      }
      if (digits[last_nz] != 1) continue;
      FpVector v(dim, 0);
      for (std::size_t i = 0; i < codim; ++i) v[free_cols[i]] = digits[i];
      if (twist_membership(to_poly(v), k, A)) {
        members.push_back(v);
        W = Subspace::span(members, dim, p);
        found = true;
      }
    }
    if (!found) break;
  }

  std::vector<NCPoly> basis;
  for (const auto& v : W.basis_vectors()) basis.push_back(to_poly(v));
  return basis;
}

std::optional<std::pair<NCPoly, NCPoly>> non_additivity_witness(const WeylAlgebra& A, int max_degree) {
  const AlgebraPresentation& P = A.presentation;
  std::vector<NCPoly> cands;
  for (int d = 0; d <= max_degree; ++d) {
    for (const auto& e : exponents_of_degree(P.ngens(), d)) {
      Monomial m(P.ngens());
      for (std::size_t i = 0; i < P.ngens(); ++i) m.set(i, e[i]);
      cands.push_back(NCPoly::monomial(m, 1, P.p()));
    }
  }
  for (std::size_t i = 0; i < cands.size(); ++i) {
    for (std::size_t j = i + 1; j < cands.size(); ++j) {
      const CommPoly lhs = reduced_norm(cands[i] + cands[j], A);
      if (!(lhs == reduced_norm(cands[i], A) + reduced_norm(cands[j], A))) return std::make_pair(cands[i], cands[j]);
    }
  }
  return std::nullopt;
}

}  // namespace nbe
