#pragma once

#include <cstdint>
#include <vector>

#include "delforge/matrix.hpp"
#include "delforge/rational.hpp"

namespace delforge {

/// Full-rank lattice in Q^n given by basis rows.
class Lattice {
 public:
  /// Throws DimensionError unless the basis is square, PreconditionError if singular.
  explicit Lattice(RationalMatrix basis);

  std::size_t dim() const { return basis_.rows(); }
  const RationalMatrix& basis() const { return basis_; }

  /// Unique coordinates y with v = Σ y_i b_i.
  RationalVector coordinates(const RationalVector& v) const;
  /// Σ coeffs_i b_i
  RationalVector point(const std::vector<Integer>& coeffs) const;

  friend bool operator==(const Lattice& a, const Lattice& b) { return a.basis_ == b.basis_; }

 private:
  RationalMatrix basis_;
  RationalMatrix coord_map_;  // (B⁻¹)ᵀ
};

/// True iff the coordinates of `v` in the basis are integral. Throws
/// DimensionError on a length mismatch.
bool membership(const Lattice& lattice, const RationalVector& v);

/// Closed ball {x : q(x − center) ≤ radius_sq} in the metric q.
struct BallQuery {
  QuadraticForm form;
  RationalVector center;
  Rational radius_sq;
};

struct LatticePoint {
  RationalVector point;
  Rational value;  // q(point − center)

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

struct EnumerationOptions {
  std::uint64_t max_nodes = 100'000'000;
};

/// All lattice points in the closed ball, sorted lexicographically.
///
/// Fincke–Pohst style depth-first search over basis coefficients, driven by
/// an exact LDLᵀ factorization of the Gram matrix B·Q·Bᵀ. Coefficient ranges
/// come from integer square roots, so nothing is approximated. Throws
/// PreconditionError for an indefinite form and EnumerationLimitError once
/// more than `options.max_nodes` candidate coefficients were examined.
std::vector<LatticePoint> enumerate_in_ball(const Lattice& lattice, const BallQuery& query,
                                            const EnumerationOptions& options = {});

/// Test oracle: scans every coefficient vector in [−box_bound, box_bound]^n.
std::vector<LatticePoint> enumerate_brute_force(const Lattice& lattice, const BallQuery& query,
                                                long box_bound);

}  // namespace delforge
