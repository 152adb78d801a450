#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "nbe/linalg/prime_field.hpp"

namespace nbe {

using FpVector = std::vector<Coef>;

/// Dense row-major matrix over F_p. Row operations go through the
/// dispatched kernels in nbe/kernels.
class FpMatrix {
 public:
  FpMatrix() : p_(2) {}
  FpMatrix(std::size_t rows, std::size_t cols, Coef p);

  static FpMatrix identity(std::size_t n, Coef p);
  static FpMatrix from_rows(const std::vector<FpVector>& rows, std::size_t cols, Coef p);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Coef p() const { return p_; }

  Coef operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Coef& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<Coef> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Coef> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  FpVector row_vector(std::size_t r) const;
  FpVector column(std::size_t c) const;

  void append_row(std::span<const Coef> values);
  void swap_rows(std::size_t a, std::size_t b);

  FpMatrix transpose() const;
  FpMatrix operator*(const FpMatrix& rhs) const;
  FpMatrix operator+(const FpMatrix& rhs) const;
  FpVector apply(std::span<const Coef> v) const;

  bool is_zero() const;
  bool operator==(const FpMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Coef p_;
  std::vector<Coef> data_;
};

struct RowEchelon {
  FpMatrix rref;                     // nonzero rows only
  std::vector<std::size_t> pivots;  // pivot column of each row
};

/// Reduced row echelon form; zero rows are dropped.
RowEchelon row_reduce(FpMatrix m);
std::size_t rank(const FpMatrix& m);
/// Rows form a basis of {x : m x = 0}.
FpMatrix nullspace(const FpMatrix& m);
Coef determinant(FpMatrix m);

/// A linear subspace of F_p^n held as an RREF basis.
class Subspace {
 public:
  Subspace() = default;
  Subspace(std::size_t ambient, Coef p);

  static Subspace span(const std::vector<FpVector>& vectors, std::size_t ambient, Coef p);
  static Subspace from_rows(const FpMatrix& rows);
  static Subspace whole(std::size_t ambient, Coef p);

  std::size_t dim() const { return basis_.rows(); }
  std::size_t ambient() const { return ambient_; }
  Coef p() const { return p_; }
  const FpMatrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<FpVector> basis_vectors() const;

  bool contains(std::span<const Coef> v) const;
  bool contains(const Subspace& other) const;
  bool is_zero() const { return dim() == 0; }
  bool is_whole() const { return dim() == ambient_; }

  /// Canonical representative of v modulo this subspace (zero at pivots).
  FpVector reduce(std::span<const Coef> v) const;
  /// Coordinates of v (assumed contained) in the RREF basis.
  FpVector coordinates(std::span<const Coef> v) const;

  Subspace operator+(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  bool operator==(const Subspace& other) const {
    return ambient_ == other.ambient_ && basis_ == other.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  Coef p_ = 2;
  FpMatrix basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace nbe
