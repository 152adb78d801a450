#include "nbe/localring/local.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace nbe {

namespace {

constexpr std::size_t kEnumerationBudget = 1u << 16;

bool is_nilpotent_ideal(const FinDimAlgebra& A, const Subspace& I) {
  Subspace cur = I;
  for (std::size_t k = 0; k <= A.dim(); ++k) {
    if (cur.is_zero()) return true;
    Subspace next = product(A, cur, I);
    if (next.dim() == cur.dim()) return false;
    cur = std::move(next);
  }
  return cur.is_zero();
}

// tr[k] = trace of e_k acting on the subspace V (a left module when `left`,
// a right module otherwise).
FpVector module_traces(const FinDimAlgebra& A, const Subspace& V, bool left) {
  const std::size_t d = A.dim();
  const PrimeField f(A.p());
  FpVector tr(d, 0);
  const auto basis = V.basis_vectors();
  for (std::size_t k = 0; k < d; ++k) {
    const FpVector e = A.basis_vector(k);
    Coef t = 0;
    for (std::size_t r = 0; r < basis.size(); ++r) {
      const FpVector img = left ? A.mul(e, basis[r]) : A.mul(basis[r], e);
      t = f.add(t, V.coordinates(img)[r]);
    }
    tr[k] = t;
  }
  return tr;
}

// {x : Tr_V(x e_j) = 0 for all j}, a two-sided ideal containing rad(A) since
// rad(A) acts nilpotently on every module.
Subspace trace_ideal(const FinDimAlgebra& A, const FpVector& tr) {
  const std::size_t d = A.dim();
  const PrimeField f(A.p());
  FpMatrix m(d, d, A.p());
  for (std::size_t i = 0; i < d; ++i) {
    const FpMatrix& L = A.left_basis_mult(i);
    for (std::size_t j = 0; j < d; ++j) {
      Coef t = 0;  // e_i e_j is column j of L_{e_i}
      for (std::size_t k = 0; k < d; ++k) t = f.add(t, f.mul(L(k, j), tr[k]));
      m(j, i) = t;
    }
  }
  return Subspace::from_rows(nullspace(m));
}

// Intersection of trace ideals over the regular modules, the principal
// one-sided ideals A e_i, e_i A and their quotients. A single regular trace
// vanishes whenever p divides a multiplicity (as for M_p(F_p)); the smaller
// modules usually separate the simple factors.
Subspace trace_bound(const FinDimAlgebra& A) {
  const std::size_t d = A.dim();
  const PrimeField f(A.p());
  const Subspace whole = Subspace::whole(d, A.p());
  Subspace U = whole;
  for (bool left : {true, false}) {
    const FpVector full = module_traces(A, whole, left);
    U = U.intersect(trace_ideal(A, full));
    for (std::size_t i = 0; i < d && !U.is_zero(); ++i) {
      const FpVector e = A.basis_vector(i);
      const Subspace V = Subspace::from_rows(left ? A.right_mult(e).transpose() : A.left_mult(e).transpose());
      if (V.is_zero() || V.is_whole()) continue;
      const FpVector sub = module_traces(A, V, left);
      FpVector quo(d);
      for (std::size_t k = 0; k < d; ++k) quo[k] = f.sub(full[k], sub[k]);
      U = U.intersect(trace_ideal(A, sub)).intersect(trace_ideal(A, quo));
    }
  }
  return U;
}

bool is_commutative(const FinDimAlgebra& A) {
  for (std::size_t i = 0; i < A.dim(); ++i)
    for (std::size_t j = i + 1; j < A.dim(); ++j)
      if (A.mul(A.basis_vector(i), A.basis_vector(j)) != A.mul(A.basis_vector(j), A.basis_vector(i))) return false;
  return true;
}

// In a commutative algebra x -> x^{p^m} is F_p-linear; with p^m >= d its
// kernel is the set of nilpotents.
Subspace frobenius_kernel(const FinDimAlgebra& A) {
  std::size_t q = 1;
  while (q < A.dim()) q *= A.p();
  FpMatrix m(A.dim(), A.dim(), A.p());
  for (std::size_t i = 0; i < A.dim(); ++i) {
    const FpVector e = A.basis_vector(i);
    FpVector y = A.unit();
    for (std::size_t t = 0; t < q; ++t) y = A.mul(y, e);
    for (std::size_t k = 0; k < A.dim(); ++k) m(k, i) = y[k];
  }
  return Subspace::from_rows(nullspace(m));
}

std::vector<FpVector> combinations(const std::vector<FpVector>& basis, std::size_t ambient, Coef p) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    count *= p;
    if (count > kEnumerationBudget) throw TooLarge("coset enumeration exceeds 2^16 candidates");
  }
  std::vector<FpVector> out;
  out.reserve(count);
  std::vector<Coef> digits(basis.size(), 0);
  const PrimeField f(p);
  for (std::size_t t = 0; t < count; ++t) {
    FpVector v(ambient, 0);
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (digits[i] != 0)
        for (std::size_t k = 0; k < ambient; ++k) v[k] = f.add(v[k], f.mul(digits[i], basis[i][k]));
    out.push_back(std::move(v));
    for (auto& dgt : digits) {
      if (++dgt < p) break;
      dgt = 0;
    }
  }
  return out;
}

bool less_subspace(const Subspace& a, const Subspace& b) {
  const auto va = a.basis_vectors();
  const auto vb = b.basis_vectors();
  return va < vb;
}

void sort_ideals(std::vector<SubspaceIdeal>& ideals) {
  std::sort(ideals.begin(), ideals.end(),
            [](const SubspaceIdeal& a, const SubspaceIdeal& b) { return less_subspace(a.space(), b.space()); });
}

// Primitive idempotents of a commutative algebra, found among all its elements.
std::vector<FpVector> primitive_idempotents(const FinDimAlgebra& Q, const Subspace& Z) {
  std::vector<FpVector> idem;
  for (const auto& e : combinations(Z.basis_vectors(), Q.dim(), Q.p())) {
    bool nonzero = false;
    for (Coef c : e) nonzero = nonzero || c != 0;
    if (nonzero && Q.mul(e, e) == e) idem.push_back(e);
  }
  std::vector<FpVector> prim;
  for (const auto& e : idem) {
    bool primitive = true;
    for (const auto& f : idem)
      if (f != e && Q.mul(e, f) == f) {
        primitive = false;
        break;
      }
    if (primitive) prim.push_back(e);
  }
  return prim;
}

std::vector<std::size_t> free_columns(const Subspace& S) {
  std::vector<bool> pivot(S.ambient(), false);
  for (std::size_t c : S.pivots()) pivot[c] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < S.ambient(); ++i)
    if (!pivot[i]) out.push_back(i);
  return out;
}

void require_central_ideal(const FinDimAlgebra& A, const Subspace& m_R) {
  const Subspace& R = A.central();
  if (m_R.ambient() != A.dim()) throw InvalidStructure("central ideal lives in a different space");
  if (!R.contains(m_R)) throw InvalidStructure("central ideal is not inside the central subalgebra");
  for (const auto& r : R.basis_vectors())
    for (const auto& x : m_R.basis_vectors())
      if (!m_R.contains(A.mul(r, x))) throw InvalidStructure("central ideal is not an ideal of R");
}

}  // namespace

SubspaceIdeal jacobson_radical(const FinDimAlgebra& A) {
  if (is_commutative(A)) return SubspaceIdeal(A, frobenius_kernel(A), Side::TwoSided);
  const Subspace U = trace_bound(A);
  if (is_nilpotent_ideal(A, U)) return SubspaceIdeal(A, U, Side::TwoSided);

  // rad(A) is the sum of the nilpotent ideals A x A with x in U. Basis
  // vectors seed a lower bound N, then the cosets of N in U are searched.
  Subspace N(A.dim(), A.p());
  auto try_add = [&](const FpVector& x) {
    if (N.contains(x) || !A.is_nilpotent(x)) return;
    Subspace J = two_sided_closure(A, N + Subspace::span({x}, A.dim(), A.p()));
    if (is_nilpotent_ideal(A, J)) N = std::move(J);
  };
  for (const auto& x : U.basis_vectors()) try_add(x);
  std::vector<FpVector> complement;
  for (const auto& x : U.basis_vectors()) complement.push_back(N.reduce(x));
  for (const auto& x : combinations(Subspace::span(complement, A.dim(), A.p()).basis_vectors(), A.dim(), A.p()))
    try_add(x);
  return SubspaceIdeal(A, N, Side::TwoSided);
}

std::vector<SubspaceIdeal> maximal_two_sided_ideals(const FinDimAlgebra& A) {
  const SubspaceIdeal rad = jacobson_radical(A);
  const FinDimAlgebra Q = A.quotient(rad.space());
  const auto free = free_columns(rad.space());
  auto lift = [&](const FpVector& q) {
    FpVector v(A.dim(), 0);
    for (std::size_t t = 0; t < free.size(); ++t) v[free[t]] = q[t];
    return v;
  };

  std::vector<SubspaceIdeal> out;
  const PrimeField f(A.p());
  for (const auto& e : primitive_idempotents(Q, Q.center())) {
    FpVector one_minus_e = Q.unit();
    for (std::size_t t = 0; t < Q.dim(); ++t) one_minus_e[t] = f.sub(one_minus_e[t], e[t]);
    std::vector<FpVector> gens = rad.space().basis_vectors();
    for (std::size_t t = 0; t < Q.dim(); ++t) gens.push_back(lift(Q.mul(one_minus_e, Q.basis_vector(t))));
    out.emplace_back(A, Subspace::span(gens, A.dim(), A.p()), Side::TwoSided);
  }
  if (out.empty()) throw InternalInconsistency("semisimple quotient has no primitive central idempotent");
  sort_ideals(out);
  return out;
}

std::vector<SubspaceIdeal> maximal_left_ideals(const FinDimAlgebra& A) {
  const auto elements = A.all_elements(kEnumerationBudget);
  // Distinct proper principal left ideals A x.
  std::map<std::vector<FpVector>, Subspace> principal;
  for (const auto& x : elements) {
    Subspace Ax = Subspace::from_rows(A.right_mult(x).transpose());
    if (Ax.is_whole() || Ax.is_zero()) continue;
    principal.emplace(Ax.basis_vectors(), std::move(Ax));
  }

  std::set<std::vector<FpVector>> seen;
  std::vector<Subspace> frontier{Subspace(A.dim(), A.p())};
  std::vector<SubspaceIdeal> maximal;
  seen.insert({});
  while (!frontier.empty()) {
    std::vector<Subspace> next;
    for (const auto& J : frontier) {
      bool is_max = true;
      for (const auto& [key, P] : principal) {
        if (J.contains(P)) continue;
        Subspace K = J + P;
        if (K.is_whole()) continue;
        is_max = false;
        if (seen.insert(K.basis_vectors()).second) {
          if (seen.size() > kEnumerationBudget) throw TooLarge("left ideal lattice exceeds 2^16 members");
          next.push_back(std::move(K));
        }
      }
      if (is_max) maximal.emplace_back(A, J, Side::Left);
    }
    frontier = std::move(next);
  }
  sort_ideals(maximal);
  return maximal;
}

std::vector<FpVector> primitive_orthogonal_idempotents(const FinDimAlgebra& A) {
  const SubspaceIdeal rad = jacobson_radical(A);
  const FinDimAlgebra Q = A.quotient(rad.space());
  const auto free = free_columns(rad.space());
  const PrimeField f(A.p());
  auto sub = [&](FpVector a, const FpVector& b) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] = f.sub(a[k], b[k]);
    return a;
  };
  auto is_zero = [](const FpVector& v) { return std::all_of(v.begin(), v.end(), [](Coef c) { return c == 0; }); };

  // Minimal-rank nonzero idempotents are primitive; peel them off 1 greedily.
  std::vector<std::pair<std::size_t, FpVector>> idem;
  for (const auto& e : Q.all_elements(kEnumerationBudget))
    if (!is_zero(e) && Q.mul(e, e) == e) idem.emplace_back(rank(Q.right_mult(e)), e);
  std::sort(idem.begin(), idem.end());
  std::vector<FpVector> bars;
  FpVector u = Q.unit();
  while (!is_zero(u)) {
    bool found = false;
    for (const auto& [r, e] : idem)
      if (Q.mul(u, e) == e && Q.mul(e, u) == e) {
        bars.push_back(e);
        u = sub(u, e);
        found = true;
        break;
      }
    if (!found) throw InternalInconsistency("no primitive idempotent below a nonzero idempotent");
  }

  // Lift one at a time inside the corner w A w left by the previous lifts.
  std::vector<FpVector> out;
  FpVector w = A.unit();
  for (std::size_t j = 0; j + 1 < bars.size(); ++j) {
    FpVector x(A.dim(), 0);
    for (std::size_t t = 0; t < free.size(); ++t) x[free[t]] = bars[j][t];
    x = A.mul(A.mul(w, x), w);
    for (std::size_t it = 0; it <= 2 * A.dim() + 2 && A.mul(x, x) != x; ++it) {
      // x <- 3x^2 - 2x^3 fixes idempotents and squares the defect x^2 - x.
      const FpVector x2 = A.mul(x, x);
      const FpVector x3 = A.mul(x2, x);
      FpVector y(A.dim());
      for (std::size_t k = 0; k < y.size(); ++k)
        y[k] = f.from_int(3 * static_cast<long long>(x2[k]) - 2 * static_cast<long long>(x3[k]));
      x = y;
    }
    if (A.mul(x, x) != x) throw InternalInconsistency("idempotent lifting did not converge");
    out.push_back(x);
    w = sub(w, x);
  }
  out.push_back(w);
  if (A.mul(w, w) != w) throw InternalInconsistency("complementary idempotent is not idempotent");
  return out;
}

std::string to_string(LocalClass c) {
  switch (c) {
    case LocalClass::NotDemi: return "not_demi";
    case LocalClass::Demi: return "demi";
    case LocalClass::NAK: return "NAK";
    case LocalClass::Quasi: return "quasi";
  }
  return "?";
}

LocalClass classify_local(const FinDimAlgebra& A) {
  const auto maxs = maximal_two_sided_ideals(A);
  if (maxs.size() != 1) return LocalClass::NotDemi;
  const SubspaceIdeal& m = maxs.front();
  if (!(m.space() == jacobson_radical(A).space())) return LocalClass::Demi;
  const FinDimAlgebra S = A.quotient(m.space());
  const bool simple = jacobson_radical(S).is_zero() && primitive_idempotents(S, S.center()).size() == 1;
  return simple ? LocalClass::Quasi : LocalClass::NAK;
}

bool idempotent_ideal_check(const SubspaceIdeal& I, const FinDimAlgebra& A) {
  if (I.side() != Side::TwoSided) throw Unsupported("idempotence check needs a two-sided ideal");
  return product(A, I.space(), I.space()) == I.space();
}

std::optional<int> adic_comparison(const FinDimAlgebra& A, const SubspaceIdeal& m, const Subspace& m_R) {
  require_central_ideal(A, m_R);
  const Subspace target = product(A, m_R, Subspace::whole(A.dim(), A.p()));
  Subspace cur = m.space();
  for (int k = 1;; ++k) {
    if (target.contains(cur)) return k;
    Subspace next = product(A, cur, m.space());
    if (next == cur) return std::nullopt;
    cur = std::move(next);
  }
}

std::string to_string(FiberReport::Verdict v) {
  switch (v) {
    case FiberReport::Verdict::Decomposable: return "decomposable";
    case FiberReport::Verdict::Indecomposable: return "indecomposable";
    case FiberReport::Verdict::FailsAt: return "fails_at";
  }
  return "?";
}

FiberReport fiber_decomposability(const FinDimAlgebra& A, const Subspace& m_R, int k_max) {
  if (k_max < 1) throw Unsupported("k_max must be positive");
  require_central_ideal(A, m_R);
  FiberReport rep;
  rep.k_max = k_max;
  for (auto& M : maximal_two_sided_ideals(A))
    if (M.space().intersect(A.central()) == m_R) rep.over.push_back(std::move(M));
  if (rep.over.empty()) throw Unsupported("no maximal ideal lies over the given central ideal");
  if (rep.over.size() == 1) {
    rep.verdict = FiberReport::Verdict::Indecomposable;
    return rep;
  }

  // Each chain M^1 >= M^2 >= ... stops; past the largest stopping exponent
  // the intersection of powers no longer depends on N.
  std::vector<Subspace> stable;
  for (const auto& M : rep.over) {
    Subspace cur = M.space();
    int n = 1;
    for (;;) {
      Subspace next = product(A, cur, M.space());
      if (next == cur) break;
      cur = std::move(next);
      ++n;
    }
    rep.stable_N = std::max(rep.stable_N, n);
    stable.push_back(std::move(cur));
  }
  Subspace lhs = stable.front();
  Subspace meet = rep.over.front().space();
  for (std::size_t i = 1; i < stable.size(); ++i) {
    lhs = lhs.intersect(stable[i]);
    meet = meet.intersect(rep.over[i].space());
  }
  Subspace rhs = meet;
  for (int k = 1; k <= k_max; ++k) {
    if (k > 1) rhs = product(A, rhs, meet);
    if (!rhs.contains(lhs)) {
      rep.verdict = FiberReport::Verdict::FailsAt;
      rep.failing_k = k;
      return rep;
    }
  }
  rep.verdict = FiberReport::Verdict::Decomposable;
  return rep;
}

}  // namespace nbe
