#include "nbe/homlab/homlab.hpp"

#include <map>
#include <set>

#include "nbe/localring/local.hpp"

namespace nbe {

namespace {

constexpr std::size_t kSubmoduleBudget = 1u << 16;
constexpr std::size_t kFullLatticeMaxDim = 6;

// Slot j of a vector in A^g.
FpVector slot(const FpVector& v, std::size_t j, std::size_t d) {
  return FpVector(v.begin() + static_cast<std::ptrdiff_t>(j * d), v.begin() + static_cast<std::ptrdiff_t>((j + 1) * d));
}

void add_into_slot(FpVector& v, std::size_t j, const FpVector& x, const PrimeField& f) {
  for (std::size_t k = 0; k < x.size(); ++k) v[j * x.size() + k] = f.add(v[j * x.size() + k], x[k]);
}

// a acting on every slot by left multiplication.
FpVector left_act(const FinDimAlgebra& A, const FpVector& a, const FpVector& v) {
  const std::size_t d = A.dim();
  FpVector out(v.size(), 0);
  const PrimeField f(A.p());
  for (std::size_t j = 0; j * d < v.size(); ++j) add_into_slot(out, j, A.mul(a, slot(v, j, d)), f);
  return out;
}

Subspace column_space(const FpMatrix& m) { return Subspace::from_rows(m.transpose()); }

FpVector combination(const std::vector<FpVector>& basis, const FpVector& coeffs, std::size_t ambient, Coef p) {
  const PrimeField f(p);
  FpVector out(ambient, 0);
  for (std::size_t r = 0; r < basis.size(); ++r)
    if (coeffs[r] != 0)
      for (std::size_t k = 0; k < ambient; ++k) out[k] = f.add(out[k], f.mul(coeffs[r], basis[r][k]));
  return out;
}

struct Generator {
  std::size_t idem;
  FpVector element;
};

// Minimal generators of N: walk the primitive idempotents e and basis
// vectors of e N, keeping those outside rad(A) N + (submodule so far).
std::vector<Generator> minimal_generators(const FDModule& N, const FinDimAlgebra& A, const std::vector<FpVector>& idems,
                                          const Subspace& rad) {
  std::vector<FpVector> rad_img;
  for (const auto& r : rad.basis_vectors())
    for (std::size_t c = 0; c < N.dim(); ++c) rad_img.push_back(N.action_of(r).column(c));
  Subspace covered = Subspace::span(rad_img, N.dim(), A.p());
  std::vector<Generator> gens;
  for (std::size_t j = 0; j < idems.size() && !covered.is_whole(); ++j)
    for (const auto& b : column_space(N.action_of(idems[j])).basis_vectors()) {
      if (covered.contains(b)) continue;
      gens.push_back({j, b});
      covered = covered + N.cyclic_submodule(b);
    }
  if (!covered.is_whole()) throw InternalInconsistency("generators do not cover the module");
  return gens;
}

// The terms of stage i as an FDModule-free description: P inside A^g.
Subspace projective_space(const FinDimAlgebra& A, const std::vector<FpVector>& idems) {
  const std::size_t d = A.dim();
  std::vector<FpVector> basis;
  for (std::size_t t = 0; t < idems.size(); ++t)
    for (const auto& x : column_space(A.right_mult(idems[t])).basis_vectors()) {
      FpVector v(idems.size() * d, 0);
      std::copy(x.begin(), x.end(), v.begin() + static_cast<std::ptrdiff_t>(t * d));
      basis.push_back(std::move(v));
    }
  return Subspace::span(basis, idems.size() * d, A.p());
}

// d(x) for x in P_i: sum_t x_t * image_t.
FpVector apply_differential(const FinDimAlgebra& A, const Resolution::Stage& st, const FpVector& x,
                            std::size_t target_ambient) {
  const PrimeField f(A.p());
  FpVector out(target_ambient, 0);
  for (std::size_t t = 0; t < st.images.size(); ++t) {
    const FpVector y = left_act(A, slot(x, t, A.dim()), st.images[t]);
    for (std::size_t k = 0; k < target_ambient; ++k) out[k] = f.add(out[k], y[k]);
  }
  return out;
}

FpVector apply_augmentation(const FDModule& M, const FinDimAlgebra& A, const Resolution::Stage& st, const FpVector& x) {
  const PrimeField f(A.p());
  FpVector out(M.dim(), 0);
  for (std::size_t t = 0; t < st.images.size(); ++t) {
    const FpVector y = M.action_of(slot(x, t, A.dim())).apply(st.images[t]);
    for (std::size_t k = 0; k < M.dim(); ++k) out[k] = f.add(out[k], y[k]);
  }
  return out;
}

// Kernel of a linear map given on the basis of `domain`, as vectors of the
// domain's ambient space.
Subspace kernel_in(const Subspace& domain, const FpMatrix& matrix) {
  const auto basis = domain.basis_vectors();
  std::vector<FpVector> out;
  const FpMatrix ns = nullspace(matrix);
  for (std::size_t r = 0; r < ns.rows(); ++r)
    out.push_back(combination(basis, ns.row_vector(r), domain.ambient(), domain.p()));
  return Subspace::span(out, domain.ambient(), domain.p());
}

FpMatrix columns_to_matrix(const std::vector<FpVector>& cols, std::size_t rows, Coef p) {
  FpMatrix m(rows, cols.size(), p);
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  return m;
}

// Hom_A(P_i, A) = sum_t e_t A inside A^{g_i}, f -> (f(e_t))_t.
Subspace hom_space(const FinDimAlgebra& A, const Resolution::Stage& st) {
  const std::size_t d = A.dim();
  const std::size_t g = st.idempotents.size();
  std::vector<FpVector> basis;
  for (std::size_t t = 0; t < g; ++t)
    for (const auto& x : column_space(A.left_mult(st.idempotents[t])).basis_vectors()) {
      FpVector v(g * d, 0);
      std::copy(x.begin(), x.end(), v.begin() + static_cast<std::ptrdiff_t>(t * d));
      basis.push_back(std::move(v));
    }
  return Subspace::span(basis, g * d, A.p());
}

// Dual of d_k : P_k -> P_{k-1}, sending f in Hom(P_{k-1}, A) to f o d_k.
FpVector dual_apply(const FinDimAlgebra& A, const Resolution::Stage& st, const FpVector& f) {
  const std::size_t d = A.dim();
  const PrimeField pf(A.p());
  FpVector out(st.images.size() * d, 0);
  for (std::size_t h = 0; h < st.images.size(); ++h)
    for (std::size_t l = 0; l * d < f.size(); ++l)
      add_into_slot(out, h, A.mul(slot(st.images[h], l, d), slot(f, l, d)), pf);
  return out;
}

ExtResult ext_from_resolution(const Resolution& R, const FinDimAlgebra& A, int i) {
  ExtResult res;
  res.degree = i;
  const auto k = static_cast<std::size_t>(i);
  if (k >= R.stages.size()) {
    res.action.assign(A.dim(), FpMatrix(0, 0, A.p()));
    return res;
  }
  const Subspace hom = hom_space(A, R.stages[k]);
  Subspace cocycles = hom;
  if (k + 1 < R.stages.size()) {
    std::vector<FpVector> cols;
    for (const auto& f : hom.basis_vectors()) cols.push_back(dual_apply(A, R.stages[k + 1], f));
    cocycles = kernel_in(hom, columns_to_matrix(cols, R.stages[k + 1].images.size() * A.dim(), A.p()));
  } else if (!R.terminated) {
    throw InternalInconsistency("resolution too short for the requested Ext");
  }
  Subspace coboundaries(hom.ambient(), A.p());
  if (k > 0) {
    std::vector<FpVector> imgs;
    for (const auto& f : hom_space(A, R.stages[k - 1]).basis_vectors()) imgs.push_back(dual_apply(A, R.stages[k], f));
    coboundaries = Subspace::span(imgs, hom.ambient(), A.p());
  }
  if (!cocycles.contains(coboundaries)) throw InternalInconsistency("coboundaries are not cocycles");

  std::vector<FpVector> reps;
  for (const auto& z : cocycles.basis_vectors()) reps.push_back(coboundaries.reduce(z));
  const Subspace quotient = Subspace::span(reps, hom.ambient(), A.p());
  res.dimension = quotient.dim();
  const auto qbasis = quotient.basis_vectors();
  const PrimeField pf(A.p());
  for (std::size_t e = 0; e < A.dim(); ++e) {
    FpMatrix act(qbasis.size(), qbasis.size(), A.p());
    for (std::size_t c = 0; c < qbasis.size(); ++c) {
      FpVector moved(hom.ambient(), 0);
      for (std::size_t l = 0; l * A.dim() < moved.size(); ++l)
        add_into_slot(moved, l, A.mul(slot(qbasis[c], l, A.dim()), A.basis_vector(e)), pf);
      if (!cocycles.contains(moved)) throw InternalInconsistency("right action leaves the cocycles");
      const FpVector coords = quotient.coordinates(coboundaries.reduce(moved));
      for (std::size_t r = 0; r < qbasis.size(); ++r) act(r, c) = coords[r];
    }
    res.action.push_back(std::move(act));
  }
  return res;
}

}  // namespace

Resolution minimal_projective_resolution(const FDModule& M, const FinDimAlgebra& A, int L) {
  if (M.side() != ModuleSide::Left) throw Unsupported("resolutions are built for left modules");
  if (L < 0) throw Unsupported("resolution length must be non-negative");
  Resolution R;
  if (M.dim() == 0) {
    R.terminated = true;
    return R;
  }
  const auto idems = primitive_orthogonal_idempotents(A);
  const Subspace rad = jacobson_radical(A).space();

  FDModule current = M;
  std::vector<FpVector> current_basis;  // basis of the current kernel in A^{g_{i-1}}
  for (int i = 0; i <= L; ++i) {
    Resolution::Stage st;
    for (const auto& g : minimal_generators(current, A, idems, rad)) {
      st.idempotents.push_back(idems[g.idem]);
      st.images.push_back(i == 0 ? g.element
                                 : combination(current_basis, g.element, current_basis.front().size(), A.p()));
    }
    st.space = projective_space(A, st.idempotents);
    R.stages.push_back(std::move(st));

    const auto& s = R.stages.back();
    std::vector<FpVector> cols;
    for (const auto& x : s.space.basis_vectors())
      cols.push_back(i == 0 ? apply_augmentation(M, A, s, x)
                            : R.stages[static_cast<std::size_t>(i) - 1].space.coordinates(
                                  apply_differential(A, s, x, current_basis.front().size())));
    const std::size_t target = i == 0 ? M.dim() : R.stages[static_cast<std::size_t>(i) - 1].space.dim();
    const Subspace K = kernel_in(s.space, columns_to_matrix(cols, target, A.p()));
    if (K.is_zero()) {
      R.terminated = true;
      break;
    }
    if (i == L) break;
    current_basis = K.basis_vectors();
    std::vector<FpMatrix> act;
    for (std::size_t e = 0; e < A.dim(); ++e) {
      FpMatrix a(K.dim(), K.dim(), A.p());
      for (std::size_t c = 0; c < K.dim(); ++c) {
        const FpVector coords = K.coordinates(left_act(A, A.basis_vector(e), current_basis[c]));
        for (std::size_t r = 0; r < K.dim(); ++r) a(r, c) = coords[r];
      }
      act.push_back(std::move(a));
    }
    current = FDModule(A, ModuleSide::Left, std::move(act));
  }

  // d^2 = 0 and exactness at every stage, including surjectivity onto M.
  if (rank(differential_matrix(R, M, A, 0)) != M.dim()) throw InternalInconsistency("augmentation is not onto");
  for (std::size_t i = 0; i < R.stages.size(); ++i) {
    const FpMatrix di = differential_matrix(R, M, A, i);
    const std::size_t ker = R.stages[i].space.dim() - rank(di);
    if (i + 1 < R.stages.size()) {
      const FpMatrix dn = differential_matrix(R, M, A, i + 1);
      if (!(di * dn).is_zero()) throw InternalInconsistency("consecutive differentials do not compose to zero");
      if (rank(dn) != ker) throw InternalInconsistency("resolution is not exact");
    } else if (R.terminated && ker != 0) {
      throw InternalInconsistency("last differential is not injective");
    }
  }
  return R;
}

FpMatrix differential_matrix(const Resolution& R, const FDModule& M, const FinDimAlgebra& A, std::size_t i) {
  const auto& st = R.stages.at(i);
  std::vector<FpVector> cols;
  std::size_t rows = M.dim();
  if (i > 0) rows = R.stages[i - 1].space.dim();
  for (const auto& x : st.space.basis_vectors()) {
    if (i == 0) {
      cols.push_back(apply_augmentation(M, A, st, x));
    } else {
      const auto& prev = R.stages[i - 1].space;
      cols.push_back(prev.coordinates(apply_differential(A, st, x, prev.ambient())));
    }
  }
  return columns_to_matrix(cols, rows, A.p());
}

ExtResult ext_groups(const FDModule& M, const FinDimAlgebra& A, int i) {
  if (i < 0) throw Unsupported("Ext degree must be non-negative");
  return ext_from_resolution(minimal_projective_resolution(M, A, i + 1), A, i);
}

std::string Grade::to_string() const {
  switch (kind) {
    case Kind::Finite: return std::to_string(value);
    case Kind::Infinite: return "+inf";
    case Kind::AtLeast: return ">" + std::to_string(value - 1);
  }
  return "?";
}

Grade grade(const FDModule& M, const FinDimAlgebra& A, int L) {
  if (L < 0) throw Unsupported("grade budget must be non-negative");
  if (M.dim() == 0) return Grade::infinite();
  const Resolution R = minimal_projective_resolution(M, A, L + 1);
  for (int i = 0; i <= L; ++i)
    if (ext_from_resolution(R, A, i).dimension != 0) return Grade::finite(i);
  return Grade::at_least(L + 1);
}

AuslanderReport auslander_probe(const FinDimAlgebra& A, const FDModule& M, int L, bool all_submodules) {
  if (L < 0) throw Unsupported("probe depth must be non-negative");
  AuslanderReport rep;
  rep.all_submodules = all_submodules;
  const FinDimAlgebra Aop = A.opposite();
  const Resolution R = minimal_projective_resolution(M, A, L + 1);
  for (int i = 0; i <= L; ++i) {
    const ExtResult E = ext_from_resolution(R, A, i);
    AuslanderLevel level{i, E.dimension, 0};
    if (E.dimension == 0) {
      rep.levels.push_back(level);
      continue;
    }
    const FDModule Emod = E.as_right_module(A);
    const auto s = E.dimension;
    std::size_t count = 1;
    for (std::size_t t = 0; t < s; ++t) {
      count *= A.p();
      if (count > kSubmoduleBudget) throw TooLarge("Ext group too large to enumerate submodules");
    }
    if (all_submodules && s > kFullLatticeMaxDim) throw TooLarge("full submodule lattice needs dim Ext <= 6");

    // Cyclic submodules keyed by their RREF basis, each with the first
    // generator met in counting order; sums of them for the full lattice.
    using Entry = std::pair<Subspace, std::vector<FpVector>>;
    std::map<std::vector<FpVector>, Entry> subs;
    FpVector v(s, 0);
    for (std::size_t t = 1; t < count; ++t) {
      for (std::size_t k = 0; k < s; ++k) {
        if (++v[k] < A.p()) break;
        v[k] = 0;
      }
      Subspace N = Emod.cyclic_submodule(v);
      subs.try_emplace(N.basis_vectors(), N, std::vector<FpVector>{v});
    }
    if (all_submodules) {
      std::vector<Entry> frontier;
      for (const auto& [key, val] : subs) frontier.push_back(val);
      const auto cyclic = frontier;
      while (!frontier.empty()) {
        std::vector<Entry> next;
        for (const auto& [N, gens] : frontier)
          for (const auto& [C, cg] : cyclic) {
            Subspace S = N + C;
            if (S.dim() == N.dim()) continue;
            auto sum_gens = gens;
            sum_gens.push_back(cg.front());
            if (subs.try_emplace(S.basis_vectors(), S, sum_gens).second) next.emplace_back(S, sum_gens);
          }
        frontier = std::move(next);
      }
    }
    level.submodules_tested = subs.size();
    rep.levels.push_back(level);
    if (i == 0) continue;  // every grade is >= 0
    for (const auto& [key, val] : subs) {
      const auto& [N, gens] = val;
      const FDModule Nl = Emod.restrict_to(A, N).as_left_over_opposite(Aop);
      const Grade g = grade(Nl, Aop, i - 1);
      if (g.kind == Grade::Kind::Finite && g.value < i)
        rep.violations.push_back({i, gens, static_cast<int>(N.dim()), g.value});
    }
  }
  rep.passed = rep.violations.empty();
  return rep;
}

}  // namespace nbe
