#include "delforge/extremality.hpp"

#include "delforge/errors.hpp"

namespace delforge {

std::size_t quadric_unknowns(std::size_t n) { return n * (n + 1) / 2 + n + 1; }

RationalMatrix condition_matrix(const std::vector<RationalVector>& vertices, std::size_t n) {
  for (const auto& v : vertices) {
    if (v.size() != n) throw DimensionError("vertex length does not match dimension");
  }
  if (vertices.empty() || affine_rank(vertices) != n + 1) {
    throw DegenerateError("condition matrix needs vertices of affine rank n+1");
  }
  RationalMatrix m(vertices.size(), quadric_unknowns(n));
  for (std::size_t r = 0; r < vertices.size(); ++r) {
    const auto& v = vertices[r];
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) m(r, c++) = i == j ? v[i] * v[i] : 2 * v[i] * v[j];
    }
    for (std::size_t i = 0; i < n; ++i) m(r, c++) = v[i];
    m(r, c) = 1;
  }
  return m;
}

QuadricTriple triple_from_unknowns(const RationalVector& x, std::size_t n) {
  if (x.size() != quadric_unknowns(n)) throw DimensionError("unknown vector has wrong length");
  QuadricTriple t{RationalMatrix(n, n), RationalVector(n), 0};
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      t.Q(i, j) = x[c];
      t.Q(j, i) = x[c];
      ++c;
    }
  }
  for (std::size_t i = 0; i < n; ++i) t.b[i] = x[c++];
  t.s = x[c];
  return t;
}

RationalVector unknowns_from_triple(const QuadricTriple& t) {
  const std::size_t n = t.b.size();
  RationalVector x;
  x.reserve(quadric_unknowns(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) x.push_back(t.Q(i, j));
  x.insert(x.end(), t.b.begin(), t.b.end());
  x.push_back(t.s);
  return x;
}

Rational evaluate_quadric(const QuadricTriple& t, const RationalVector& v) {
  return QuadraticForm(t.Q).evaluate(v) + dot(t.b, v) + t.s;
}

ExtremalityCertificate certify_extreme(const DelaunayInstance& inst, const SphereCertificate& sphere) {
  if (!sphere.verified()) throw PreconditionError("extremality needs a verified Delaunay instance");
  const std::size_t n = inst.dim;
  ExtremalityCertificate cert;
  for (const auto& k : kernel(condition_matrix(inst.vertices, n))) {
    cert.kernel_basis.push_back(triple_from_unknowns(k, n));
  }
  cert.kernel_dim = cert.kernel_basis.size();
  if (cert.kernel_dim == 1) {
    const RationalMatrix& q = cert.kernel_basis.front().Q;
    if (!q(0, 0).is_zero()) {
      RationalMatrix normalized = q;
      const Rational lead = q(0, 0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) normalized(i, j) /= lead;
      cert.recovered_form = QuadraticForm(std::move(normalized));
      cert.is_extreme = is_positive_definite(*cert.recovered_form);
    }
  }
  return cert;
}

ExtremalityCertificate certify_extreme(const DelaunayInstance& inst, const EnumerationOptions& options) {
  return certify_extreme(inst, verify_delaunay(inst, options));
}

std::size_t kernel_dim_oracle(const std::vector<RationalVector>& vertices, std::size_t n) {
  // Monomials: 1, x_n..x_1, then x_i·x_j for j ≥ i walking columns.
  std::vector<std::vector<Rational>> rows;
  for (const auto& v : vertices) {
    if (v.size() != n) throw DimensionError("vertex length does not match dimension");
    std::vector<Rational> row;
    row.push_back(1);
    for (std::size_t i = n; i-- > 0;) row.push_back(v[i]);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i <= j; ++i) row.push_back(v[i] * v[j]);
    rows.push_back(std::move(row));
  }
  const std::size_t cols = quadric_unknowns(n);
  std::size_t rank = 0;
  std::vector<bool> used(rows.size(), false);
  for (std::size_t c = cols; c-- > 0;) {
    std::size_t pick = rows.size();
    for (std::size_t r = rows.size(); r-- > 0;) {
      if (!used[r] && !rows[r][c].is_zero()) {
        pick = r;
        break;
      }
    }
    if (pick == rows.size()) continue;
    used[pick] = true;
    ++rank;
    const Rational inv = Rational(1) / rows[pick][c];
    for (auto& x : rows[pick]) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pick || rows[r][c].is_zero()) continue;
      const Rational f = rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] -= f * rows[pick][k];
    }
  }
  return cols - rank;
}

}  // namespace delforge
