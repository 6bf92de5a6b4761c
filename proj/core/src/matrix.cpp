#include "liegc/matrix.hpp"

#include <ostream>
#include <sstream>

namespace liegc {

SMatrix SMatrix::identity(std::size_t n) {
  SMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m.at(k, k) = Scalar(1);
  return m;
}

SMatrix SMatrix::column(const std::vector<Scalar>& entries) {
  SMatrix m(entries.size(), 1);
  for (std::size_t k = 0; k < entries.size(); ++k) m.at(k, 0) = entries[k];
  return m;
}

SMatrix SMatrix::operator+(const SMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw MatrixError("shape mismatch in +");
  SMatrix r(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
  return r;
}

SMatrix SMatrix::operator-(const SMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw MatrixError("shape mismatch in -");
  SMatrix r(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
  return r;
}

SMatrix SMatrix::operator*(const SMatrix& o) const {
  if (cols_ != o.rows_) throw MatrixError("shape mismatch in *");
  SMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& bkj = o.at(k, j);
        if (bkj.is_zero()) continue;
        r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

SMatrix SMatrix::operator*(const Scalar& s) const {
  SMatrix r(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * s;
  return r;
}

SMatrix SMatrix::operator-() const {
  SMatrix r(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = -a_[k];
  return r;
}

SMatrix SMatrix::transpose() const {
  SMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

SMatrix SMatrix::conjugate() const {
  SMatrix r(rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k].conjugate();
  return r;
}

bool SMatrix::is_zero() const {
  for (const auto& s : a_)
    if (!s.is_zero()) return false;
  return true;
}

bool SMatrix::is_real() const {
  for (const auto& s : a_)
    if (!s.is_real()) return false;
  return true;
}

SMatrix SMatrix::col(std::size_t j) const { return block(0, j, rows_, 1); }

SMatrix SMatrix::block(std::size_t i0, std::size_t j0, std::size_t r, std::size_t c) const {
  if (i0 + r > rows_ || j0 + c > cols_) throw MatrixError("block out of range");
  SMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = at(i0 + i, j0 + j);
  return m;
}

void SMatrix::set_block(std::size_t i0, std::size_t j0, const SMatrix& m) {
  if (i0 + m.rows_ > rows_ || j0 + m.cols_ > cols_) throw MatrixError("set_block out of range");
  for (std::size_t i = 0; i < m.rows_; ++i)
    for (std::size_t j = 0; j < m.cols_; ++j) at(i0 + i, j0 + j) = m.at(i, j);
}

SMatrix SMatrix::hcat(const SMatrix& o) const {
  if (rows_ != o.rows_) {
    if (cols_ == 0 && rows_ == 0) return o;
    if (o.cols_ == 0 && o.rows_ == 0) return *this;
    throw MatrixError("hcat row mismatch");
  }
  SMatrix r(rows_, cols_ + o.cols_);
  r.set_block(0, 0, *this);
  r.set_block(0, cols_, o);
  return r;
}

SMatrix SMatrix::vcat(const SMatrix& o) const {
  if (cols_ != o.cols_) throw MatrixError("vcat col mismatch");
  SMatrix r(rows_ + o.rows_, cols_);
  r.set_block(0, 0, *this);
  r.set_block(rows_, 0, o);
  return r;
}

SMatrix SMatrix::select_cols(const std::vector<std::size_t>& idx) const {
  SMatrix r(rows_, idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j)
    for (std::size_t i = 0; i < rows_; ++i) r.at(i, j) = at(i, idx[j]);
  return r;
}

Echelon rref(const SMatrix& m) {
  Echelon e;
  e.reduced = m;
  SMatrix& a = e.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && a.at(piv, col).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(row, j));
    Scalar inv = Scalar(1) / a.at(row, col);
    for (std::size_t j = col; j < a.cols(); ++j) a.at(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a.at(i, col).is_zero()) continue;
      Scalar f = a.at(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) a.at(i, j) -= f * a.at(row, j);
    }
    e.pivots.push_back(col);
    ++row;
  }
  e.rank = row;
  return e;
}

std::size_t rank_of(const SMatrix& m) { return rref(m).rank; }

Scalar determinant(const SMatrix& m) {
  if (m.rows() != m.cols()) throw MatrixError("determinant of non-square matrix");
  SMatrix a = m;
  Scalar det(1);
  for (std::size_t col = 0; col < a.cols(); ++col) {
    std::size_t piv = col;
    while (piv < a.rows() && a.at(piv, col).is_zero()) ++piv;
    if (piv == a.rows()) return Scalar(0);
    if (piv != col) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(col, j));
      det = -det;
    }
    det *= a.at(col, col);
    Scalar inv = Scalar(1) / a.at(col, col);
    for (std::size_t i = col + 1; i < a.rows(); ++i) {
      if (a.at(i, col).is_zero()) continue;
      Scalar f = a.at(i, col) * inv;
      for (std::size_t j = col; j < a.cols(); ++j) a.at(i, j) -= f * a.at(col, j);
    }
  }
  return det;
}

SMatrix kernel(const SMatrix& m) {
  Echelon e = rref(m);
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0, p = 0; j < m.cols(); ++j) {
    if (p < e.pivots.size() && e.pivots[p] == j)
      ++p;
    else
      free_cols.push_back(j);
  }
  SMatrix k(m.cols(), free_cols.size());
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    std::size_t j = free_cols[f];
    k.at(j, f) = Scalar(1);
    for (std::size_t p = 0; p < e.pivots.size(); ++p)
      k.at(e.pivots[p], f) = -e.reduced.at(p, j);
  }
  return k;
}

std::optional<SMatrix> solve(const SMatrix& a, const SMatrix& b) {
  if (a.rows() != b.rows()) throw MatrixError("solve shape mismatch");
  Echelon e = rref(a.hcat(b));
  // inconsistent iff some pivot lands in the b-block
  for (std::size_t p : e.pivots)
    if (p >= a.cols()) return std::nullopt;
  SMatrix x(a.cols(), b.cols());
  for (std::size_t p = 0; p < e.pivots.size(); ++p)
    for (std::size_t j = 0; j < b.cols(); ++j)
      x.at(e.pivots[p], j) = e.reduced.at(p, a.cols() + j);
  return x;
}

std::optional<SMatrix> inverse(const SMatrix& m) {
  if (m.rows() != m.cols()) throw MatrixError("inverse of non-square matrix");
  auto x = solve(m, SMatrix::identity(m.rows()));
  if (!x) return std::nullopt;
  if (rank_of(m) != m.rows()) return std::nullopt;
  return x;
}

bool in_column_space(const SMatrix& a, const SMatrix& v) {
  return solve(a, v).has_value();
}

SMatrix column_space_basis(const SMatrix& a) {
  Echelon e = rref(a);
  return a.select_cols(e.pivots);
}

SMatrix intersect_columns(const SMatrix& a, const SMatrix& b) {
  if (a.cols() == 0 || b.cols() == 0) return SMatrix(a.rows(), 0);
  SMatrix k = kernel(a.hcat(-b));
  SMatrix coeff_a = k.block(0, 0, a.cols(), k.cols());
  SMatrix raw = a * coeff_a;
  return column_space_basis(raw);
}

std::ostream& operator<<(std::ostream& os, const SMatrix& m) {
  os << "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << m.at(i, j);
    }
  }
  return os << "]";
}

}  // namespace liegc
