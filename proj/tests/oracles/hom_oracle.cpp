#include "oracles/hom_oracle.hpp"

#include <map>

namespace oracle {

using nbe::Coef;
using nbe::FinDimAlgebra;
using nbe::FpMatrix;
using nbe::FpVector;
using nbe::Subspace;

namespace {

FpVector slot(const FpVector& v, std::size_t j, std::size_t d) {
  return {v.begin() + static_cast<std::ptrdiff_t>(j * d), v.begin() + static_cast<std::ptrdiff_t>((j + 1) * d)};
}

// images[i][h]: where generator h of F_i goes (in M for i = 0, else in F_{i-1}).
std::vector<std::vector<FpVector>> free_resolution(const FinDimAlgebra& A, const Action& M, int stages) {
  const std::size_t d = A.dim();
  const Coef p = A.p();
  const std::size_t m = M.empty() ? 0 : M.front().rows();
  std::vector<std::vector<FpVector>> images;
  std::vector<FpVector> gens;
  for (std::size_t b = 0; b < m; ++b) {
    FpVector e(m, 0);
    e[b] = 1;
    gens.push_back(e);
  }
  std::size_t target = m;
  for (int i = 0; i < stages && !gens.empty(); ++i) {
    images.push_back(gens);
    FpMatrix D(target, gens.size() * d, p);
    for (std::size_t h = 0; h < gens.size(); ++h)
      for (std::size_t b = 0; b < d; ++b) {
        FpVector col(target, 0);
        if (i == 0) {
          col = M[b].apply(gens[h]);
        } else {
          for (std::size_t l = 0; l * d < target; ++l) {
            const FpVector x = A.mul(A.basis_vector(b), slot(gens[h], l, d));
            std::copy(x.begin(), x.end(), col.begin() + static_cast<std::ptrdiff_t>(l * d));
          }
        }
        for (std::size_t r = 0; r < target; ++r) D(r, h * d + b) = col[r];
      }
    const FpMatrix ns = nbe::nullspace(D);
    target = gens.size() * d;
    gens.clear();
    for (std::size_t r = 0; r < ns.rows(); ++r) gens.push_back(ns.row_vector(r));
  }
  return images;
}

// delta_i : A^{g_{i-1}} -> A^{g_i}, f -> (sum_l y_{h,l} f_l)_h.
FpMatrix coboundary(const FinDimAlgebra& A, const std::vector<FpVector>& stage, std::size_t prev_gens) {
  const std::size_t d = A.dim();
  FpMatrix C(stage.size() * d, prev_gens * d, A.p());
  const nbe::PrimeField f(A.p());
  for (std::size_t l = 0; l < prev_gens; ++l)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t h = 0; h < stage.size(); ++h) {
        const FpVector x = A.mul(slot(stage[h], l, d), A.basis_vector(b));
        for (std::size_t k = 0; k < d; ++k) C(h * d + k, l * d + b) = f.add(C(h * d + k, l * d + b), x[k]);
      }
  return C;
}

struct Cohomology {
  Subspace cocycles, coboundaries;
};

Cohomology cohomology(const FinDimAlgebra& A, const Action& M, int i) {
  const auto res = free_resolution(A, M, i + 2);
  const auto k = static_cast<std::size_t>(i);
  if (k >= res.size()) return {Subspace(0, A.p()), Subspace(0, A.p())};
  const std::size_t n = res[k].size() * A.dim();
  Subspace Z = Subspace::whole(n, A.p());
  if (k + 1 < res.size()) {
    const FpMatrix ns = nbe::nullspace(coboundary(A, res[k + 1], res[k].size()));
    std::vector<FpVector> rows;
    for (std::size_t r = 0; r < ns.rows(); ++r) rows.push_back(ns.row_vector(r));
    Z = Subspace::span(rows, n, A.p());
  }
  Subspace B(n, A.p());
  if (k > 0) B = Subspace::from_rows(coboundary(A, res[k], res[k - 1].size()).transpose());
  return {Z, B};
}

Action restrict(const Action& act, const Subspace& S) {
  const auto basis = S.basis_vectors();
  Action out;
  for (const auto& a : act) {
    FpMatrix r(basis.size(), basis.size(), S.p());
    for (std::size_t c = 0; c < basis.size(); ++c) {
      const FpVector coords = S.coordinates(a.apply(basis[c]));
      for (std::size_t t = 0; t < basis.size(); ++t) r(t, c) = coords[t];
    }
    out.push_back(std::move(r));
  }
  return out;
}

Subspace closure(const Action& act, Subspace S) {
  for (;;) {
    std::vector<FpVector> more = S.basis_vectors();
    for (const auto& v : S.basis_vectors())
      for (const auto& a : act) more.push_back(a.apply(v));
    Subspace next = Subspace::span(more, S.ambient(), S.p());
    if (next.dim() == S.dim()) return S;
    S = next;
  }
}

}  // namespace

std::size_t hom_dimension(const FinDimAlgebra& A, const Action& M) {
  const std::size_t d = A.dim();
  const std::size_t m = M.empty() ? 0 : M.front().rows();
  if (m == 0) return 0;
  // Unknown F(r, c) at index r * m + c; one equation per (k, r, c).
  FpMatrix sys(d * d * m, d * m, A.p());
  const nbe::PrimeField f(A.p());
  for (std::size_t k = 0; k < d; ++k) {
    const FpMatrix Lk = A.left_mult(A.basis_vector(k));
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < m; ++c) {
        const std::size_t eq = (k * d + r) * m + c;
        for (std::size_t t = 0; t < m; ++t)  // (F rho)(r, c)
          sys(eq, r * m + t) = f.add(sys(eq, r * m + t), M[k](t, c));
        for (std::size_t t = 0; t < d; ++t)  // - (L F)(r, c)
          sys(eq, t * m + c) = f.sub(sys(eq, t * m + c), Lk(r, t));
      }
  }
  return d * m - nbe::rank(sys);
}

std::vector<std::size_t> ext_dimensions(const FinDimAlgebra& A, const Action& M, int L) {
  const auto res = free_resolution(A, M, L + 2);
  std::vector<std::size_t> out;
  for (int i = 0; i <= L; ++i) {
    const auto k = static_cast<std::size_t>(i);
    if (k >= res.size()) {
      out.push_back(0);
      continue;
    }
    std::size_t dim = res[k].size() * A.dim();
    if (k + 1 < res.size()) dim -= nbe::rank(coboundary(A, res[k + 1], res[k].size()));
    if (k > 0) dim -= nbe::rank(coboundary(A, res[k], res[k - 1].size()));
    out.push_back(dim);
  }
  return out;
}

Action ext_right_action(const FinDimAlgebra& A, const Action& M, int i) {
  const auto [Z, B] = cohomology(A, M, i);
  std::vector<FpVector> reps;
  for (const auto& z : Z.basis_vectors()) reps.push_back(B.reduce(z));
  const Subspace Q = Subspace::span(reps, Z.ambient(), A.p());
  const auto qb = Q.basis_vectors();
  const std::size_t d = A.dim();
  Action out;
  for (std::size_t e = 0; e < d; ++e) {
    FpMatrix act(qb.size(), qb.size(), A.p());
    for (std::size_t c = 0; c < qb.size(); ++c) {
      FpVector moved(Z.ambient(), 0);
      for (std::size_t l = 0; l * d < moved.size(); ++l) {
        const FpVector x = A.mul(slot(qb[c], l, d), A.basis_vector(e));
        std::copy(x.begin(), x.end(), moved.begin() + static_cast<std::ptrdiff_t>(l * d));
      }
      const FpVector coords = Q.coordinates(B.reduce(moved));
      for (std::size_t r = 0; r < qb.size(); ++r) act(r, c) = coords[r];
    }
    out.push_back(std::move(act));
  }
  return out;
}

int grade(const FinDimAlgebra& A, const Action& M, int L) {
  if (M.empty() || M.front().rows() == 0) return -1;
  const auto dims = ext_dimensions(A, M, L);
  for (int i = 0; i <= L; ++i)
    if (dims[static_cast<std::size_t>(i)] != 0) return i;
  return L + 1;
}

std::vector<std::string> auslander_lines(const FinDimAlgebra& A, const Action& M, int L) {
  const FinDimAlgebra Aop = A.opposite();
  std::vector<std::string> lines;
  for (int i = 0; i <= L; ++i) {
    const Action E = ext_right_action(A, M, i);
    const std::size_t s = E.front().rows();
    bool ok = true;
    if (i == 0 || s == 0) {
      lines.push_back("Ext^" + std::to_string(i) + " dim " + std::to_string(s) + ": pass");
      continue;
    }
    // Every nonzero submodule, grown one closure step at a time.
    std::map<std::vector<FpVector>, Subspace> seen;
    std::vector<Subspace> frontier{Subspace(s, A.p())};
    while (!frontier.empty()) {
      std::vector<Subspace> next;
      for (const auto& S : frontier) {
        FpVector v(s, 0);
        for (;;) {
          std::size_t k = 0;
          while (k < s && ++v[k] == A.p()) v[k++] = 0;
          if (k == s) break;
          const Subspace T = closure(E, S + Subspace::span({v}, s, A.p()));
          if (seen.emplace(T.basis_vectors(), T).second) next.push_back(T);
        }
      }
      frontier = std::move(next);
    }
    for (const auto& [key, N] : seen) {
      const int g = grade(Aop, restrict(E, N), i - 1);
      if (g >= 0 && g < i) ok = false;
    }
    lines.push_back("Ext^" + std::to_string(i) + " dim " + std::to_string(s) + (ok ? ": pass" : ": fail"));
  }
  return lines;
}

bool auslander_holds(const FinDimAlgebra& A, const Action& M, int L) {
  for (const auto& line : auslander_lines(A, M, L))
    if (line.ends_with("fail")) return false;
  return true;
}

}  // namespace oracle
