#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "dsp/exact.hpp"

namespace dsp {

/// Dense row-major matrix over Q(i).
class Matrix {
public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix scalar(std::size_t n, const GaussianRational& s);
  /// Unit matrix E_{r,c}.
  static Matrix unit(std::size_t n, std::size_t r, std::size_t c);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool is_square() const { return rows_ == cols_; }

  GaussianRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const GaussianRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// Entries in row-major order (the vectorization used by all linear maps on matrices).
  [[nodiscard]] std::span<const GaussianRational> flat() const { return data_; }
  static Matrix from_flat(std::size_t rows, std::size_t cols, std::span<const GaussianRational> v);

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] GaussianRational trace() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const GaussianRational& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(Matrix a, const GaussianRational& s) { return a *= s; }
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> data_;
};

Matrix commutator(const Matrix& a, const Matrix& b);
Matrix power(const Matrix& a, unsigned k);
/// Frobenius norm, evaluated in double.
double frobenius_norm(const Matrix& a);

/// Reduced row echelon form computed by Gauss-Jordan elimination with the
/// first nonzero entry of each column as pivot (deterministic order).
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_cols;
  [[nodiscard]] std::size_t rank() const { return pivot_cols.size(); }
};

Echelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);
/// Basis of {x : m x = 0}; one vector per free column, free variable set to 1.
std::vector<std::vector<GaussianRational>> null_space(const Matrix& m);
/// Particular solution of m x = b with all free variables zero, or nullopt.
std::optional<std::vector<GaussianRational>> solve(const Matrix& m, std::span<const GaussianRational> b);
std::optional<Matrix> inverse(const Matrix& m);
GaussianRational determinant(const Matrix& m);

/// Incrementally maintained row space used for span-closure computations.
class SpanBasis {
public:
  explicit SpanBasis(std::size_t dim) : dim_(dim) {}
  /// Adds v if it is independent of the current span; returns whether it was added.
  bool insert(std::vector<GaussianRational> v);
  [[nodiscard]] std::size_t size() const { return rows_.size(); }
  [[nodiscard]] std::size_t dim() const { return dim_; }

private:
  std::size_t dim_;
  std::vector<std::vector<GaussianRational>> rows_; // reduced, pivot at pivots_[i], pivot entry 1
  std::vector<std::size_t> pivots_;
};

} // namespace dsp
