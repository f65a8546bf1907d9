#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "quivermod/numeric.hpp"

namespace quivermod {

/// Dense row-major matrix of exact rationals. Zero-sized dimensions are legal
/// (a map into or out of a zero vertex space).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix column_vector(const std::vector<Rational>& entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  Matrix transpose() const;
  Matrix column(std::size_t c) const;
  Matrix columns(const std::vector<std::size_t>& which) const;
  Matrix rows_range(std::size_t begin, std::size_t end) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& s, const Matrix& m);

/// [a | b]; row counts must agree.
Matrix hstack(const Matrix& a, const Matrix& b);

/// Reduced row echelon form. Forward elimination is fraction-free (Bareiss) on
/// an integer-scaled copy; only the final normalisation divides.
Matrix rref(const Matrix& m, std::vector<std::size_t>* pivot_columns = nullptr);

std::size_t rank(const Matrix& m);

/// Bareiss determinant; m must be square.
Rational determinant(const Matrix& m);

/// Basis of {x : m x = 0} as column vectors, one per free column of rref(m),
/// with a 1 in that free column.
std::vector<Matrix> nullspace(const Matrix& m);

/// Canonical basis (reduced column echelon form) of the column span of m,
/// returned as the columns of a full-column-rank matrix.
Matrix column_space_basis(const Matrix& m);

/// Some X with a X = b, or nullopt when inconsistent. Free variables are set to zero.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

std::optional<Matrix> inverse(const Matrix& m);

std::string to_string(const Matrix& m);

}  // namespace quivermod
