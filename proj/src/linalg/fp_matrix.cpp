#include "nbe/linalg/fp_matrix.hpp"

#include <algorithm>
#include <utility>

#include "nbe/kernels/fp_kernels.hpp"

namespace nbe {

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, Coef p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {}

FpMatrix FpMatrix::identity(std::size_t n, Coef p) {
  FpMatrix m(n, n, p);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = static_cast<Coef>(1 % p);
  return m;
}

FpMatrix FpMatrix::from_rows(const std::vector<FpVector>& rows, std::size_t cols, Coef p) {
  FpMatrix m(0, cols, p);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

FpVector FpMatrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return {s.begin(), s.end()};
}

FpVector FpMatrix::column(std::size_t c) const {
  FpVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

void FpMatrix::append_row(std::span<const Coef> values) {
  if (values.size() != cols_) throw InternalInconsistency("row length mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

void FpMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>(b * cols_));
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix t(cols_, rows_, p_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

FpMatrix FpMatrix::operator*(const FpMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw InternalInconsistency("matrix shape mismatch");
  FpMatrix out(rows_, rhs.cols_, p_);
  for (std::size_t r = 0; r < rows_; ++r) {
    auto dst = out.row(r);
    for (std::size_t k = 0; k < cols_; ++k) {
      const Coef a = (*this)(r, k);
      if (a != 0) kernels::axpy_mod(dst, rhs.row(k), a, p_);
    }
  }
  return out;
}

FpMatrix FpMatrix::operator+(const FpMatrix& rhs) const {
  FpMatrix out = *this;
  for (std::size_t r = 0; r < rows_; ++r) kernels::axpy_mod(out.row(r), rhs.row(r), 1, p_);
  return out;
}

FpVector FpMatrix::apply(std::span<const Coef> v) const {
  FpVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = kernels::dot_mod(row(r), v, p_);
  return out;
}

bool FpMatrix::is_zero() const {
  return kernels::first_nonzero(std::span<const Coef>(data_)) == data_.size();
}

RowEchelon row_reduce(FpMatrix m) {
  const PrimeField f(m.p());
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
    std::size_t piv = lead;
    while (piv < m.rows() && m(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    m.swap_rows(lead, piv);
    const Coef inv = f.inv(m(lead, col));
    if (inv != 1) kernels::scale_mod(m.row(lead), inv, m.p());
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead) continue;
      const Coef v = m(r, col);
      if (v != 0) kernels::axpy_mod(m.row(r), m.row(lead), f.neg(v), m.p());
    }
    pivots.push_back(col);
    ++lead;
  }
  FpMatrix rref(0, m.cols(), m.p());
  for (std::size_t r = 0; r < lead; ++r) rref.append_row(m.row(r));
  return {std::move(rref), std::move(pivots)};
}

std::size_t rank(const FpMatrix& m) { return row_reduce(m).pivots.size(); }

FpMatrix nullspace(const FpMatrix& m) {
  const PrimeField f(m.p());
  auto [rref, pivots] = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  FpMatrix out(0, m.cols(), m.p());
  FpVector v(m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::fill(v.begin(), v.end(), Coef{0});
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(rref(r, free));
    out.append_row(v);
  }
  return out;
}

Coef determinant(FpMatrix m) {
  if (m.rows() != m.cols()) throw InternalInconsistency("determinant of non-square matrix");
  const PrimeField f(m.p());
  Coef det = 1;
  const std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m(piv, col) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      m.swap_rows(piv, col);
      det = f.neg(det);
    }
    det = f.mul(det, m(col, col));
    const Coef inv = f.inv(m(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      const Coef v = m(r, col);
      if (v != 0) kernels::axpy_mod(m.row(r), m.row(col), f.neg(f.mul(v, inv)), m.p());
    }
  }
  return det;
}

// ---------------------------------------------------------------------------

Subspace::Subspace(std::size_t ambient, Coef p) : ambient_(ambient), p_(p), basis_(0, ambient, p) {}

Subspace Subspace::span(const std::vector<FpVector>& vectors, std::size_t ambient, Coef p) {
  return from_rows(FpMatrix::from_rows(vectors, ambient, p));
}

Subspace Subspace::from_rows(const FpMatrix& rows) {
  Subspace s(rows.cols(), rows.p());
  auto ech = row_reduce(rows);
  s.basis_ = std::move(ech.rref);
  s.pivots_ = std::move(ech.pivots);
  return s;
}

Subspace Subspace::whole(std::size_t ambient, Coef p) {
  return from_rows(FpMatrix::identity(ambient, p));
}

std::vector<FpVector> Subspace::basis_vectors() const {
  std::vector<FpVector> out;
  out.reserve(dim());
  for (std::size_t r = 0; r < dim(); ++r) out.push_back(basis_.row_vector(r));
  return out;
}

FpVector Subspace::reduce(std::span<const Coef> v) const {
  const PrimeField f(p_);
  FpVector out(v.begin(), v.end());
  for (std::size_t r = 0; r < dim(); ++r) {
    const Coef c = out[pivots_[r]];
    if (c != 0) kernels::axpy_mod(out, basis_.row(r), f.neg(c), p_);
  }
  return out;
}

FpVector Subspace::coordinates(std::span<const Coef> v) const {
  FpVector out(dim());
  for (std::size_t r = 0; r < dim(); ++r) out[r] = v[pivots_[r]];
  return out;
}

bool Subspace::contains(std::span<const Coef> v) const {
  const FpVector r = reduce(v);
  return kernels::first_nonzero(std::span<const Coef>(r)) == r.size();
}

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t r = 0; r < other.dim(); ++r) {
    if (!contains(other.basis_.row(r))) return false;
  }
  return true;
}

Subspace Subspace::operator+(const Subspace& other) const {
  FpMatrix m = basis_;
  for (std::size_t r = 0; r < other.dim(); ++r) m.append_row(other.basis_.row(r));
  return from_rows(m);
}

Subspace Subspace::intersect(const Subspace& other) const {
  // Zassenhaus: rows [u | u] and [v | 0]; rows of the echelon form whose left
  // half vanishes carry a basis of the intersection in the right half.
  const std::size_t n = ambient_;
  FpMatrix m(0, 2 * n, p_);
  FpVector row(2 * n);
  for (std::size_t r = 0; r < dim(); ++r) {
    auto b = basis_.row(r);
    std::copy(b.begin(), b.end(), row.begin());
    std::copy(b.begin(), b.end(), row.begin() + static_cast<std::ptrdiff_t>(n));
    m.append_row(row);
  }
  for (std::size_t r = 0; r < other.dim(); ++r) {
    auto b = other.basis_.row(r);
    std::copy(b.begin(), b.end(), row.begin());
    std::fill(row.begin() + static_cast<std::ptrdiff_t>(n), row.end(), Coef{0});
    m.append_row(row);
  }
  auto ech = row_reduce(m);
  FpMatrix out(0, n, p_);
  for (std::size_t r = 0; r < ech.rref.rows(); ++r) {
    if (ech.pivots[r] < n) continue;
    auto full = ech.rref.row(r);
    out.append_row(full.subspan(n, n));
  }
  return from_rows(out);
}

}  // namespace nbe
