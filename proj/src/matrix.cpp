#include "quivermod/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace quivermod {

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::column_vector(const std::vector<Rational>& entries) {
  Matrix m(entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, 0) = entries[i];
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_) {
    if (x != 0) return false;
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::column(std::size_t c) const { return columns({c}); }

Matrix Matrix::columns(const std::vector<std::size_t>& which) const {
  Matrix out(rows_, which.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < which.size(); ++j) out(r, j) = (*this)(r, which[j]);
  return out;
}

Matrix Matrix::rows_range(std::size_t begin, std::size_t end) const {
  Matrix out(end - begin, cols_);
  for (std::size_t r = begin; r < end; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(r - begin, c) = (*this)(r, c);
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix sum shape mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) += b(i, j);
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + Rational(-1) * b; }

Matrix operator*(const Rational& s, const Matrix& m) {
  Matrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) *= s;
  return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
  Matrix out(a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
  }
  return out;
}

namespace {

struct IntegerEchelon {
  std::vector<IntVector> rows;
  std::vector<std::size_t> pivots;
  int sign = 1;
};

// Each row is scaled by the lcm of its denominators; the row space (and hence
// rank, nullspace, rref) is unchanged.
std::vector<IntVector> integer_rows(const Matrix& m) {
  std::vector<IntVector> out(m.rows(), IntVector(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer scale = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) scale = boost::multiprecision::lcm(scale, denominator_of(m(r, c)));
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational scaled = m(r, c) * scale;
      out[r][c] = numerator_of(scaled);
    }
  }
  return out;
}

IntegerEchelon bareiss_echelon(std::vector<IntVector> a, std::size_t cols) {
  IntegerEchelon e;
  Integer prev = 1;
  std::size_t r = 0;
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < cols && r < n; ++c) {
    std::size_t p = r;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      e.sign = -e.sign;
    }
    for (std::size_t i = r + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    e.pivots.push_back(c);
    ++r;
  }
  a.resize(r);
  e.rows = std::move(a);
  return e;
}

}  // namespace

Matrix rref(const Matrix& m, std::vector<std::size_t>* pivot_columns) {
  IntegerEchelon e = bareiss_echelon(integer_rows(m), m.cols());
  const std::size_t r = e.rows.size();
  Matrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(e.rows[i][j]);
  // Back substitution from the bottom pivot upward.
  for (std::size_t k = r; k-- > 0;) {
    const std::size_t pc = e.pivots[k];
    const Rational inv = 1 / out(k, pc);
    for (std::size_t j = pc; j < m.cols(); ++j) out(k, j) *= inv;
    for (std::size_t i = 0; i < k; ++i) {
      const Rational f = out(i, pc);
      if (f == 0) continue;
      for (std::size_t j = pc; j < m.cols(); ++j) out(i, j) -= f * out(k, j);
    }
  }
  if (pivot_columns) *pivot_columns = e.pivots;
  return out;
}

std::size_t rank(const Matrix& m) { return bareiss_echelon(integer_rows(m), m.cols()).rows.size(); }

Rational determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Clear denominators per row, remember the scale.
  Rational scale = 1;
  std::vector<IntVector> a(n, IntVector(n));
  for (std::size_t r = 0; r < n; ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < n; ++c) l = boost::multiprecision::lcm(l, denominator_of(m(r, c)));
    scale *= Rational(l);
    for (std::size_t c = 0; c < n; ++c) a[r][c] = numerator_of(m(r, c) * l);
  }
  IntegerEchelon e = bareiss_echelon(std::move(a), n);
  if (e.rows.size() < n) return 0;
  return Rational(e.sign * e.rows.back()[n - 1]) / scale;
}

std::vector<Matrix> nullspace(const Matrix& m) {
  std::vector<std::size_t> pivots;
  const Matrix r = rref(m, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Matrix> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Matrix v(m.cols(), 1);
    v(free, 0) = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v(pivots[k], 0) = -r(k, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix column_space_basis(const Matrix& m) {
  std::vector<std::size_t> pivots;
  const Matrix r = rref(m.transpose(), &pivots);
  return r.rows_range(0, pivots.size()).transpose();
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve shape mismatch");
  std::vector<std::size_t> pivots;
  const Matrix r = rref(hstack(a, b), &pivots);
  Matrix x(a.cols(), b.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    if (pivots[k] >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[k], j) = r(k, a.cols() + j);
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  if (rank(m) != m.rows()) return std::nullopt;
  return solve(m, Matrix::identity(m.rows()));
}

std::string to_string(const Matrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ", ";
      out += to_string(m(i, j));
    }
    out += "]";
  }
  return out + "]";
}

}  // namespace quivermod
