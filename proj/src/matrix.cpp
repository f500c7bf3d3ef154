#include "dsp/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace dsp {

Matrix Matrix::identity(std::size_t n) { return scalar(n, GaussianRational(1)); }

Matrix Matrix::scalar(std::size_t n, const GaussianRational& s) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

Matrix Matrix::unit(std::size_t n, std::size_t r, std::size_t c) {
  Matrix m(n, n);
  m(r, c) = 1;
  return m;
}

Matrix Matrix::from_flat(std::size_t rows, std::size_t cols, std::span<const GaussianRational> v) {
  if (v.size() != rows * cols) throw std::invalid_argument("from_flat: size mismatch");
  Matrix m(rows, cols);
  std::copy(v.begin(), v.end(), m.data_.begin());
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& z : data_)
    if (!z.is_zero()) return false;
  return true;
}

GaussianRational Matrix::trace() const {
  GaussianRational t;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const GaussianRational& s) {
  for (auto& z : data_) z *= s;
  return *this;
}

Matrix operator-(Matrix a) {
  for (auto& z : a.data_) z = -z;
  return a;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const GaussianRational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
    }
  return c;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix power(const Matrix& a, unsigned k) {
  Matrix r = Matrix::identity(a.rows());
  for (unsigned i = 0; i < k; ++i) r = r * a;
  return r;
}

double frobenius_norm(const Matrix& a) {
  double s = 0;
  for (const auto& z : a.flat()) s += to_double(z.norm2());
  return std::sqrt(s);
}

Echelon row_reduce(Matrix m) {
  Echelon e;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
    GaussianRational inv = GaussianRational(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      GaussianRational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!m(row, c).is_zero()) m(r, c) -= f * m(row, c);
    }
    e.pivot_cols.push_back(col);
    ++row;
  }
  e.reduced = std::move(m);
  return e;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).rank(); }

std::vector<std::vector<GaussianRational>> null_space(const Matrix& m) {
  Echelon e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<GaussianRational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<GaussianRational> v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) v[e.pivot_cols[i]] = -e.reduced(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<GaussianRational>> solve(const Matrix& m, std::span<const GaussianRational> b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: right-hand side size mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  Echelon e = row_reduce(std::move(aug));
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == m.cols()) return std::nullopt;
  std::vector<GaussianRational> x(m.cols());
  for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) x[e.pivot_cols[i]] = e.reduced(i, m.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  Echelon e = row_reduce(std::move(aug));
  if (e.rank() < n || e.pivot_cols[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = e.reduced(r, n + c);
  return inv;
}

GaussianRational determinant(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant: matrix not square");
  Matrix a = m;
  const std::size_t n = a.rows();
  GaussianRational det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return {};
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col).is_zero()) continue;
      GaussianRational f = a(r, col) / a(col, col);
      for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

bool SpanBasis::insert(std::vector<GaussianRational> v) {
  if (v.size() != dim_) throw std::invalid_argument("SpanBasis: dimension mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const GaussianRational f = v[pivots_[i]];
    if (f.is_zero()) continue;
    for (std::size_t c = 0; c < dim_; ++c)
      if (!rows_[i][c].is_zero()) v[c] -= f * rows_[i][c];
  }
  std::size_t lead = 0;
  while (lead < dim_ && v[lead].is_zero()) ++lead;
  if (lead == dim_) return false;
  const GaussianRational inv = GaussianRational(1) / v[lead];
  for (auto& z : v) z *= inv;
  for (auto& row : rows_) {
    const GaussianRational f = row[lead];
    if (f.is_zero()) continue;
    for (std::size_t c = 0; c < dim_; ++c)
      if (!v[c].is_zero()) row[c] -= f * v[c];
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(lead);
  return true;
}

} // namespace dsp
