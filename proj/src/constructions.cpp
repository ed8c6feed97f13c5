#include "delforge/constructions.hpp"

#include <string>

#include "delforge/errors.hpp"

namespace delforge {

namespace {

std::vector<RationalVector> d_basis_rows(std::size_t m) {
  std::vector<RationalVector> rows;
  RationalVector first(m);
  first[0] = 1;
  first[1] = 1;
  rows.push_back(first);
  for (std::size_t i = 0; i + 1 < m; ++i) {
    RationalVector r(m);
    r[i] = 1;
    r[i + 1] = -1;
    rows.push_back(r);
  }
  return rows;
}

// Even-weight 0/1 vectors of length m in lexicographic order.
std::vector<RationalVector> even_binary_vectors(std::size_t m) {
  std::vector<RationalVector> out;
  const std::uint64_t total = std::uint64_t{1} << m;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    // Most significant bit is coordinate 0, so counting order is lexicographic.
    if (__builtin_popcountll(bits) % 2 != 0) continue;
    RationalVector v(m);
    for (std::size_t i = 0; i < m; ++i) {
      if ((bits >> (m - 1 - i)) & 1U) v[i] = 1;
    }
    out.push_back(std::move(v));
  }
  return out;
}

RationalVector halves(std::size_t n, const Rational& last) {
  RationalVector v(n, Rational(1, 2));
  v[n - 1] = last;
  return v;
}

}  // namespace

Lattice standard_d_lattice(std::size_t m) {
  if (m < 2) throw PreconditionError("D_m needs m >= 2");
  return Lattice(RationalMatrix::from_rows(d_basis_rows(m)));
}

Lattice l_n_lattice(std::size_t n) {
  if (n < 3) throw PreconditionError("L_n needs n >= 3");
  std::vector<RationalVector> rows;
  for (auto& r : d_basis_rows(n - 1)) {
    r.push_back(0);
    rows.push_back(std::move(r));
  }
  rows.push_back(halves(n, 1));
  return Lattice(RationalMatrix::from_rows(rows));
}

QuadraticForm pn_form(std::size_t n) {
  if (n < 2) throw PreconditionError("form needs n >= 2");
  RationalVector diag(n, 1);
  diag[n - 1] = Rational(Integer(static_cast<long>(n) - 3), 4);
  return QuadraticForm::diagonal(diag);
}

DelaunayInstance construct_half_cube(std::size_t m) {
  if (m < 2) throw PreconditionError("half-cube needs m >= 2");
  return {"half-cube-" + std::to_string(m), m, QuadraticForm::identity(m), standard_d_lattice(m),
          even_binary_vectors(m)};
}

DelaunayInstance construct_cross_polytope(std::size_t m) {
  if (m < 2) throw PreconditionError("cross-polytope needs m >= 2");
  std::vector<RationalVector> verts;
  const RationalVector e1 = unit_vector(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    verts.push_back(e1 + unit_vector(m, i));
    verts.push_back(e1 - unit_vector(m, i));
  }
  return {"cross-polytope-" + std::to_string(m), m, QuadraticForm::identity(m), standard_d_lattice(m),
          std::move(verts)};
}

std::vector<RationalVector> pn_third_layer(std::size_t n) {
  if (n < 3) throw PreconditionError("third layer needs n >= 3");
  std::vector<RationalVector> out;
  const RationalVector base = halves(n, -1);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    out.push_back(base + unit_vector(n, j));
    out.push_back(base - unit_vector(n, j));
  }
  return out;
}

DelaunayInstance construct_pn(std::size_t n) {
  if (n % 2 != 0) {
    throw PreconditionError("P_n needs even n: the layer (1/2,...,1/2,-1) +/- e_j lies in L_n "
                            "if and only if n is even (got n = " + std::to_string(n) + ")");
  }
  if (n < 6) throw PreconditionError("P_n needs n >= 6 (got n = " + std::to_string(n) + ")");
  std::vector<RationalVector> verts;
  verts.reserve(pn_vertex_count(n));
  verts.push_back(halves(n, 1));
  for (auto& x : even_binary_vectors(n - 1)) {
    x.push_back(0);
    verts.push_back(std::move(x));
  }
  for (auto& v : pn_third_layer(n)) verts.push_back(std::move(v));
  return {"P" + std::to_string(n), n, pn_form(n), l_n_lattice(n), std::move(verts)};
}

DelaunayInstance construct_segment() {
  return {"segment", 1, QuadraticForm::identity(1), Lattice(RationalMatrix::identity(1)), {{0}, {1}}};
}

std::size_t pn_vertex_count(std::size_t n) { return 1 + (std::size_t{1} << (n - 2)) + 2 * (n - 1); }

}  // namespace delforge
