#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "delforge/rational.hpp"

namespace delforge {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);
  /// Throws DimensionError on ragged input.
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Rational> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  RationalVector row_vector(std::size_t i) const;
  std::vector<RationalVector> to_rows() const;

  /// m·v
  RationalVector apply(const RationalVector& v) const;
  RationalMatrix transpose() const;
  bool is_symmetric() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Symmetric rational matrix Q defining q(x) = xᵀQx.
class QuadraticForm {
 public:
  /// Throws DimensionError if `m` is not square, PreconditionError if not symmetric.
  explicit QuadraticForm(RationalMatrix m);

  static QuadraticForm identity(std::size_t n);
  static QuadraticForm diagonal(const RationalVector& diag);

  std::size_t dim() const { return m_.rows(); }
  const RationalMatrix& matrix() const { return m_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  Rational evaluate(const RationalVector& v) const;
  Rational bilinear(const RationalVector& u, const RationalVector& v) const;
  /// q(u − v)
  Rational distance_sq(const RationalVector& u, const RationalVector& v) const;
  QuadraticForm scaled(const Rational& factor) const;

  friend bool operator==(const QuadraticForm& a, const QuadraticForm& b) = default;

 private:
  RationalMatrix m_;
};

/// Exact row rank.
std::size_t rank(const RationalMatrix& m);

/// Basis of the right null space. Each vector is primitive integral with
/// its first nonzero entry positive; one vector per non-pivot column, in
/// column order.
std::vector<RationalVector> kernel(const RationalMatrix& m);

/// One exact solution of m·x = rhs, or nullopt if the system is inconsistent.
/// Free variables are set to zero. Throws DimensionError if rhs.size() != rows.
std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& rhs);

/// Determinants of the leading k×k blocks, k = 1..n. Throws DimensionError
/// if `m` is not square.
std::vector<Rational> leading_principal_minors(const RationalMatrix& m);

Rational determinant(const RationalMatrix& m);

/// Sylvester criterion. The matrix overload throws PreconditionError when
/// `m` is not symmetric.
bool is_positive_definite(const RationalMatrix& m);
bool is_positive_definite(const QuadraticForm& q);

// Vector helpers.
RationalVector operator+(const RationalVector& a, const RationalVector& b);
RationalVector operator-(const RationalVector& a, const RationalVector& b);
RationalVector operator*(const Rational& s, const RationalVector& v);
Rational dot(const RationalVector& a, const RationalVector& b);
RationalVector unit_vector(std::size_t n, std::size_t i);

/// Scales `v` to a primitive integer vector whose first nonzero entry is
/// positive. The zero vector is returned unchanged.
RationalVector primitive_normalize(const RationalVector& v);

}  // namespace delforge
