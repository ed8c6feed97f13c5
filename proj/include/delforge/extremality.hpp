#pragma once

#include <optional>
#include <vector>

#include "delforge/constructions.hpp"
#include "delforge/delaunay.hpp"
#include "delforge/matrix.hpp"

namespace delforge {

/// Quadric xᵀQx + bᵀx + s.
struct QuadricTriple {
  RationalMatrix Q;
  RationalVector b;
  Rational s;

  friend bool operator==(const QuadricTriple&, const QuadricTriple&) = default;
};

struct ExtremalityCertificate {
  std::size_t kernel_dim = 0;
  std::vector<QuadricTriple> kernel_basis;
  std::optional<QuadraticForm> recovered_form;  // set only when kernel_dim == 1
  bool is_extreme = false;

  friend bool operator==(const ExtremalityCertificate&, const ExtremalityCertificate&) = default;
};

/// Number of unknowns (Q upper triangle, b, s) for dimension n.
std::size_t quadric_unknowns(std::size_t n);

/// One row per vertex; columns are Q_ij for i ≤ j in row-major order (the
/// off-diagonal ones carry 2·v_i·v_j), then b, then s. Throws
/// DegenerateError if the vertices do not affinely span R^n.
RationalMatrix condition_matrix(const std::vector<RationalVector>& vertices, std::size_t n);

QuadricTriple triple_from_unknowns(const RationalVector& x, std::size_t n);
RationalVector unknowns_from_triple(const QuadricTriple& t);
Rational evaluate_quadric(const QuadricTriple& t, const RationalVector& v);

/// The inscribed-quadric space of the vertex set. Extreme iff it is a single
/// ray whose quadratic part is definite; the recovered form is that part
/// divided by its (1,1) entry. Throws PreconditionError unless `sphere`
/// is verified.
ExtremalityCertificate certify_extreme(const DelaunayInstance& inst, const SphereCertificate& sphere);

/// Runs verify_delaunay first.
ExtremalityCertificate certify_extreme(const DelaunayInstance& inst, const EnumerationOptions& options = {});

/// Dimension of the same quadric space, computed with separate code: its own
/// monomial ordering and a plain rational Gauss–Jordan elimination that
/// pivots from the last column backwards. Intended as a cross-check for
/// small dimensions.
std::size_t kernel_dim_oracle(const std::vector<RationalVector>& vertices, std::size_t n);

}  // namespace delforge
