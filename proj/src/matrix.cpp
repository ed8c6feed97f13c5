#include "delforge/matrix.hpp"

#include <utility>

#include "delforge/errors.hpp"

namespace delforge {

namespace {

using IntegerRow = std::vector<Integer>;

void require_same_size(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw DimensionError("vector length mismatch");
}

// Clears denominators row by row.
std::vector<IntegerRow> integer_rows(const RationalMatrix& m) {
  std::vector<IntegerRow> out(m.rows(), IntegerRow(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer scale = 1;
    for (const auto& x : m.row(i)) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.raw().get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational& x = m(i, j);
      out[i][j] = x.num() * (scale / x.den());
    }
  }
  return out;
}

struct Echelon {
  std::vector<IntegerRow> rows;  // first pivots.size() rows are the echelon rows
  std::vector<std::size_t> pivots;
};

// Fraction-free (Bareiss) forward elimination. Pivot: first nonzero entry
// at or below the current row, columns scanned left to right.
Echelon bareiss_echelon(std::vector<IntegerRow> a, std::size_t cols) {
  Echelon e;
  const std::size_t n_rows = a.size();
  Integer prev = 1;
  std::size_t r = 0;
  Integer t;
  for (std::size_t col = 0; col < cols && r < n_rows; ++col) {
    std::size_t p = r;
    while (p < n_rows && a[p][col] == 0) ++p;
    if (p == n_rows) continue;
    std::swap(a[p], a[r]);
    const Integer& piv = a[r][col];
    for (std::size_t i = r + 1; i < n_rows; ++i) {
      if (a[i][col] == 0) {
        // The row still has to be scaled by piv/prev to stay a minor.
        for (std::size_t j = col + 1; j < cols; ++j) {
          if (a[i][j] == 0) continue;
          a[i][j] *= piv;
          mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
        }
        continue;
      }
      for (std::size_t j = col + 1; j < cols; ++j) {
        t = piv * a[i][j] - a[i][col] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = piv;
    e.pivots.push_back(col);
    ++r;
  }
  e.rows = std::move(a);
  return e;
}

// Back substitution over the echelon rows with the given values for the
// non-pivot unknowns; `rhs_col` (if set) is the augmented column.
RationalVector back_substitute(const Echelon& e, std::size_t unknowns, RationalVector x,
                               std::optional<std::size_t> rhs_col) {
  for (std::size_t k = e.pivots.size(); k-- > 0;) {
    const auto& row = e.rows[k];
    const std::size_t pc = e.pivots[k];
    Rational acc = rhs_col ? Rational(row[*rhs_col]) : Rational(0);
    for (std::size_t j = pc + 1; j < unknowns; ++j) {
      if (row[j] == 0 || x[j].is_zero()) continue;
      acc -= Rational(row[j]) * x[j];
    }
    x[pc] = acc / Rational(row[pc]);
  }
  return x;
}

}  // namespace

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  std::vector<RationalVector> r;
  for (const auto& row : rows) r.emplace_back(row);
  *this = from_rows(r);
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RationalMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw DimensionError("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RationalVector RationalMatrix::row_vector(std::size_t i) const {
  auto r = row(i);
  return {r.begin(), r.end()};
}

std::vector<RationalVector> RationalMatrix::to_rows() const {
  std::vector<RationalVector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row_vector(i));
  return out;
}

RationalVector RationalMatrix::apply(const RationalVector& v) const {
  if (v.size() != cols_) throw DimensionError("matrix-vector size mismatch");
  RationalVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Rational acc;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (!(*this)(i, j).is_zero()) acc += (*this)(i, j) * v[j];
    }
    out[i] = acc;
  }
  return out;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool RationalMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product size mismatch");
  RationalMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

QuadraticForm::QuadraticForm(RationalMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw DimensionError("quadratic form matrix must be square");
  if (!m_.is_symmetric()) throw PreconditionError("quadratic form matrix must be symmetric");
}

QuadraticForm QuadraticForm::identity(std::size_t n) { return QuadraticForm(RationalMatrix::identity(n)); }

QuadraticForm QuadraticForm::diagonal(const RationalVector& diag) {
  RationalMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return QuadraticForm(std::move(m));
}

Rational QuadraticForm::bilinear(const RationalVector& u, const RationalVector& v) const {
  if (u.size() != dim() || v.size() != dim()) throw DimensionError("vector does not match form dimension");
  Rational acc;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (!m_(i, j).is_zero() && !v[j].is_zero()) acc += u[i] * m_(i, j) * v[j];
    }
  }
  return acc;
}

Rational QuadraticForm::evaluate(const RationalVector& v) const { return bilinear(v, v); }

Rational QuadraticForm::distance_sq(const RationalVector& u, const RationalVector& v) const {
  return evaluate(u - v);
}

QuadraticForm QuadraticForm::scaled(const Rational& factor) const {
  RationalMatrix m = m_;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= factor;
  return QuadraticForm(std::move(m));
}

std::size_t rank(const RationalMatrix& m) {
  return bareiss_echelon(integer_rows(m), m.cols()).pivots.size();
}

std::vector<RationalVector> kernel(const RationalMatrix& m) {
  const Echelon e = bareiss_echelon(integer_rows(m), m.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;

  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RationalVector x(m.cols());
    x[f] = 1;
    basis.push_back(primitive_normalize(back_substitute(e, m.cols(), std::move(x), std::nullopt)));
  }
  return basis;
}

std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& rhs) {
  if (rhs.size() != m.rows()) throw DimensionError("right-hand side length does not match row count");
  RationalMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = rhs[i];
  }
  const Echelon e = bareiss_echelon(integer_rows(aug), aug.cols());
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  return back_substitute(e, m.cols(), RationalVector(m.cols()), m.cols());
}

std::vector<Rational> leading_principal_minors(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("leading minors need a square matrix");
  const std::size_t n = m.rows();
  // Bareiss without row exchanges: the k-th pivot is the k-th leading minor.
  // Once a pivot vanishes the remaining minors are computed directly.
  std::vector<Rational> minors;
  minors.reserve(n);
  RationalMatrix a = m;
  Rational prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    const Rational piv = a(k, k);
    minors.push_back(piv);
    if (piv.is_zero()) {
      for (std::size_t s = k + 2; s <= n; ++s) {
        RationalMatrix block(s, s);
        for (std::size_t i = 0; i < s; ++i)
          for (std::size_t j = 0; j < s; ++j) block(i, j) = m(i, j);
        minors.push_back(determinant(block));
      }
      return minors;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (piv * a(i, j) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = piv;
  }
  return minors;
}

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant needs a square matrix");
  const std::size_t n = m.rows();
  RationalMatrix a = m;
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k).is_zero()) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      const Rational f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

bool is_positive_definite(const RationalMatrix& m) {
  if (!m.is_symmetric()) throw PreconditionError("positive-definiteness test needs a symmetric matrix");
  for (const auto& minor : leading_principal_minors(m)) {
    if (minor.sign() <= 0) return false;
  }
  return true;
}

bool is_positive_definite(const QuadraticForm& q) { return is_positive_definite(q.matrix()); }

RationalVector operator+(const RationalVector& a, const RationalVector& b) {
  require_same_size(a, b);
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RationalVector operator-(const RationalVector& a, const RationalVector& b) {
  require_same_size(a, b);
  RationalVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RationalVector operator*(const Rational& s, const RationalVector& v) {
  RationalVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  require_same_size(a, b);
  Rational acc;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

RationalVector unit_vector(std::size_t n, std::size_t i) {
  RationalVector v(n);
  v.at(i) = 1;
  return v;
}

RationalVector primitive_normalize(const RationalVector& v) {
  const Integer scale = common_denominator(v);
  std::vector<Integer> ints(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    ints[i] = v[i].num() * (scale / v[i].den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  if (g == 0) return v;
  for (const auto& x : ints) {
    if (x != 0) {
      if (x < 0) g = -g;
      break;
    }
  }
  RationalVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Integer q = ints[i];
    mpz_divexact(q.get_mpz_t(), q.get_mpz_t(), g.get_mpz_t());
    out[i] = Rational(q);
  }
  return out;
}

}  // namespace delforge
