#pragma once

#include <optional>
#include <string>
#include <vector>

#include "delforge/constructions.hpp"
#include "delforge/lattice.hpp"

namespace delforge {

struct Circumsphere {
  RationalVector center;
  Rational radius_sq;
};

enum class SphereStatus { verified, refuted };

/// Why a SphereCertificate was refuted. `none` when verified.
enum class RefutationReason {
  none,
  vertex_not_in_lattice,
  vertex_off_sphere,
  interior_point,
  extra_on_sphere_point,
};

std::string to_string(SphereStatus s);
std::string to_string(RefutationReason r);

/// Outcome of the empty-sphere test.
///
/// When verified, the lattice points of the closed ball are exactly the
/// instance vertices and all lie on the sphere. When refuted, `witness` is
/// the first offending point in lexicographic enumeration order (or the
/// offending vertex for the two vertex-level reasons).
struct SphereCertificate {
  RationalVector center;
  Rational radius_sq;
  SphereStatus status = SphereStatus::refuted;
  RefutationReason reason = RefutationReason::none;
  std::optional<RationalVector> witness;
  std::size_t on_sphere_count = 0;

  bool verified() const { return status == SphereStatus::verified; }
};

/// rank{v_i − v_0} + 1. Throws PreconditionError for an empty list.
std::size_t affine_rank(const std::vector<RationalVector>& points);

/// Unique (c, r²) with q(v − c) = r² for every vertex. Solves
/// 2(v − v₀)ᵀQc = vᵀQv − v₀ᵀQv₀ over all vertices. Throws DegenerateError if
/// the vertices do not affinely span or are not cospherical.
Circumsphere circumcenter(const std::vector<RationalVector>& vertices, const QuadraticForm& form);

/// Empty-sphere certificate for the instance. Throws DegenerateError when
/// the vertices do not affinely span, PreconditionError for an indefinite
/// form, EnumerationLimitError when the enumeration cap is hit.
SphereCertificate verify_delaunay(const DelaunayInstance& inst, const EnumerationOptions& options = {});

}  // namespace delforge
