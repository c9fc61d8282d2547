#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ybe/error.hpp"
#include "ybe/scalar.hpp"

namespace ybe {

using Vector = std::vector<Scalar>;

inline Vector zero_vector(std::size_t n) { return Vector(n); }

inline Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

inline bool is_zero(const Vector& v) {
  for (const auto& s : v) {
    if (!is_zero(s)) return false;
  }
  return true;
}

inline void check_same_length(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) {
    throw DimensionError("vector length mismatch: " + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
  }
}

inline Vector operator+(const Vector& a, const Vector& b) {
  check_same_length(a, b);
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline Vector operator-(const Vector& a, const Vector& b) {
  check_same_length(a, b);
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline Vector operator-(const Vector& a) {
  Vector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

inline Vector operator*(const Scalar& s, const Vector& a) {
  Vector out(a.size());
  if (is_zero(s)) return out;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = s * a[i];
  return out;
}

inline Vector& operator+=(Vector& a, const Vector& b) {
  check_same_length(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline Vector& operator-=(Vector& a, const Vector& b) {
  check_same_length(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

inline Scalar dot(const Vector& a, const Vector& b) {
  check_same_length(a, b);
  Scalar s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!is_zero(a[i]) && !is_zero(b[i])) s += a[i] * b[i];
  }
  return s;
}

/// Dense row-major rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw DimensionError("ragged matrix literal");
      for (const auto& s : row) data_.push_back(s);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows) {
    Matrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != rows) throw DimensionError("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Scalar& at(std::size_t i, std::size_t j) {
    bounds(i, j);
    return (*this)(i, j);
  }
  const Scalar& at(std::size_t i, std::size_t j) const {
    bounds(i, j);
    return (*this)(i, j);
  }

  Vector column(std::size_t j) const {
    Vector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  Vector row(std::size_t i) const {
    Vector v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = (*this)(i, j);
    return v;
  }

  bool is_zero() const {
    for (const auto& s : data_) {
      if (!ybe::is_zero(s)) return false;
    }
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Vector apply(const Vector& v) const {
    if (v.size() != cols_) {
      throw DimensionError("matrix of width " + std::to_string(cols_) + " applied to vector of length " +
                           std::to_string(v.size()));
    }
    Vector out(rows_);
    for (std::size_t j = 0; j < cols_; ++j) {
      if (ybe::is_zero(v[j])) continue;
      for (std::size_t i = 0; i < rows_; ++i) {
        const Scalar& a = (*this)(i, j);
        if (!ybe::is_zero(a)) out[i] += a * v[j];
      }
    }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.same_shape(b);
    Matrix out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] + b.data_[i];
    return out;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.same_shape(b);
    Matrix out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = a.data_[i] - b.data_[i];
    return out;
  }

  friend Matrix operator-(const Matrix& a) {
    Matrix out(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = -a.data_[i];
    return out;
  }

  friend Matrix operator*(const Scalar& s, const Matrix& a) {
    Matrix out(a.rows_, a.cols_);
    if (ybe::is_zero(s)) return out;
    for (std::size_t i = 0; i < a.data_.size(); ++i) out.data_[i] = s * a.data_[i];
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
      throw DimensionError("matrix product shape mismatch: " + a.shape_string() + " * " + b.shape_string());
    }
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& aik = a(i, k);
        if (ybe::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const Scalar& bkj = b(k, j);
          if (!ybe::is_zero(bkj)) out(i, j) += aik * bkj;
        }
      }
    }
    return out;
  }

  std::string shape_string() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

 private:
  void bounds(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw DimensionError("matrix index out of range");
  }
  void same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) {
      throw DimensionError("matrix shape mismatch: " + shape_string() + " vs " + b.shape_string());
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

inline Scalar trace(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("trace of non-square matrix");
  Scalar t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

namespace detail {

// Row reduction on an augmented copy; returns the determinant and, when
// `rhs` is given, overwrites it with the solution of m * X = rhs.
inline Scalar eliminate(Matrix m, Matrix* rhs) {
  const std::size_t n = m.rows();
  Scalar det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && is_zero(m(pivot, col))) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
      if (rhs) {
        for (std::size_t j = 0; j < rhs->cols(); ++j) std::swap((*rhs)(pivot, j), (*rhs)(col, j));
      }
      det = -det;
    }
    const Scalar p = m(col, col);
    det *= p;
    for (std::size_t j = 0; j < n; ++j) m(col, j) /= p;
    if (rhs) {
      for (std::size_t j = 0; j < rhs->cols(); ++j) (*rhs)(col, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || is_zero(m(i, col))) continue;
      const Scalar f = m(i, col);
      for (std::size_t j = 0; j < n; ++j) m(i, j) -= f * m(col, j);
      if (rhs) {
        for (std::size_t j = 0; j < rhs->cols(); ++j) (*rhs)(i, j) -= f * (*rhs)(col, j);
      }
    }
  }
  return det;
}

}  // namespace detail

inline Scalar determinant(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of non-square matrix");
  return detail::eliminate(m, nullptr);
}

inline std::optional<Matrix> try_inverse(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("inverse of non-square matrix");
  Matrix inv = Matrix::identity(m.rows());
  if (is_zero(detail::eliminate(m, &inv))) return std::nullopt;
  return inv;
}

inline Matrix inverse(const Matrix& m) {
  auto inv = try_inverse(m);
  if (!inv) throw PreconditionError("matrix is singular");
  return *inv;
}

/// Basis of {v : m v = 0}, from the reduced row echelon form.
inline std::vector<Vector> nullspace(Matrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(m(p, c))) ++p;
    if (p == rows) continue;
    for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    const Scalar inv = 1 / m(r, c);
    for (std::size_t j = 0; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const Scalar f = m(i, c);
      for (std::size_t j = 0; j < cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<Vector> basis;
  std::size_t next = 0;
  for (std::size_t free = 0; free < cols; ++free) {
    if (next < pivots.size() && pivots[next] == free) {
      ++next;
      continue;
    }
    Vector v(cols);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

inline std::size_t rank(const Matrix& m) { return m.cols() - nullspace(m).size(); }

/// exp(a) for nilpotent a; throws PreconditionError otherwise.
inline Matrix exp_nilpotent(const Matrix& a) {
  if (!a.is_square()) throw DimensionError("exp of non-square matrix");
  Matrix out = Matrix::identity(a.rows());
  Matrix term = Matrix::identity(a.rows());
  for (std::size_t k = 1; k <= a.rows(); ++k) {
    term = Scalar(1, k) * (term * a);
    if (term.is_zero()) return out;
    out = out + term;
  }
  if (!(term * a).is_zero()) throw PreconditionError("exp_nilpotent: matrix is not nilpotent");
  return out;
}

}  // namespace ybe
