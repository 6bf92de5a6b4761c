#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "liegc/scalar.hpp"

namespace liegc {

struct MatrixError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Dense matrix over Scalar.  Subspaces are represented by matrices whose
/// columns span them.  Pivoting is "first nonzero entry" throughout, so
/// every reduction is deterministic.
class SMatrix {
public:
  SMatrix() = default;
  SMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static SMatrix identity(std::size_t n);
  static SMatrix zero(std::size_t rows, std::size_t cols) { return SMatrix(rows, cols); }
  static SMatrix column(const std::vector<Scalar>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  SMatrix operator+(const SMatrix& o) const;
  SMatrix operator-(const SMatrix& o) const;
  SMatrix operator*(const SMatrix& o) const;
  SMatrix operator*(const Scalar& s) const;
  SMatrix operator-() const;
  bool operator==(const SMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool operator!=(const SMatrix& o) const { return !(*this == o); }

  SMatrix transpose() const;
  SMatrix conjugate() const;  // entrywise
  bool is_zero() const;
  bool is_real() const;  // all entries conjugation-fixed

  SMatrix col(std::size_t j) const;
  SMatrix block(std::size_t i0, std::size_t j0, std::size_t r, std::size_t c) const;
  void set_block(std::size_t i0, std::size_t j0, const SMatrix& m);
  SMatrix hcat(const SMatrix& o) const;
  SMatrix vcat(const SMatrix& o) const;
  SMatrix select_cols(const std::vector<std::size_t>& idx) const;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

struct Echelon {
  SMatrix reduced;                 // row-reduced echelon form
  std::vector<std::size_t> pivots; // pivot column per pivot row
  std::size_t rank = 0;
};

Echelon rref(const SMatrix& m);
std::size_t rank_of(const SMatrix& m);
Scalar determinant(const SMatrix& m);

/// Columns spanning the null space {x : m x = 0}; deterministic basis.
SMatrix kernel(const SMatrix& m);

/// X with a X = b (all columns), or nullopt when inconsistent.
std::optional<SMatrix> solve(const SMatrix& a, const SMatrix& b);
std::optional<SMatrix> inverse(const SMatrix& m);

bool in_column_space(const SMatrix& a, const SMatrix& v);
/// Deterministic basis of the column space (subset of columns of a).
SMatrix column_space_basis(const SMatrix& a);
/// Basis of col(a) ∩ col(b).
SMatrix intersect_columns(const SMatrix& a, const SMatrix& b);

std::ostream& operator<<(std::ostream& os, const SMatrix& m);

}  // namespace liegc
