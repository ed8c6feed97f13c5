#include "delforge/delaunay.hpp"

#include <algorithm>

#include "delforge/errors.hpp"

namespace delforge {

namespace {

void check_dims(const std::vector<RationalVector>& vertices, std::size_t n) {
  for (const auto& v : vertices) {
    if (v.size() != n) throw DimensionError("vertex length does not match dimension");
  }
}

// Indices of a greedily chosen affinely independent subset, first vertex
// always included. Keeps a reduced echelon basis of the differences.
std::vector<std::size_t> affine_frame(const std::vector<RationalVector>& vertices, std::size_t n) {
  std::vector<std::size_t> picked{0};
  std::vector<RationalVector> basis;
  std::vector<std::size_t> pivot_col;
  for (std::size_t k = 1; k < vertices.size() && basis.size() < n; ++k) {
    RationalVector d = vertices[k] - vertices[0];
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Rational f = d[pivot_col[b]];
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) d[j] -= f * basis[b][j];
    }
    auto it = std::find_if(d.begin(), d.end(), [](const Rational& x) { return !x.is_zero(); });
    if (it == d.end()) continue;
    const std::size_t col = static_cast<std::size_t>(it - d.begin());
    const Rational inv = Rational(1) / d[col];
    for (auto& x : d) x *= inv;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Rational f = basis[b][col];
      if (f.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) basis[b][j] -= f * d[j];
    }
    basis.push_back(std::move(d));
    pivot_col.push_back(col);
    picked.push_back(k);
  }
  return picked;
}

Circumsphere solve_sphere(const std::vector<RationalVector>& vertices, const QuadraticForm& form) {
  const std::size_t n = form.dim();
  const RationalVector& v0 = vertices.front();
  const Rational q0 = form.evaluate(v0);
  RationalMatrix system(vertices.size() - 1, n);
  RationalVector rhs(vertices.size() - 1);
  for (std::size_t k = 1; k < vertices.size(); ++k) {
    const RationalVector d = vertices[k] - v0;
    for (std::size_t j = 0; j < n; ++j) {
      Rational acc;
      for (std::size_t i = 0; i < n; ++i) {
        if (!d[i].is_zero()) acc += d[i] * form(i, j);
      }
      system(k - 1, j) = 2 * acc;
    }
    rhs[k - 1] = form.evaluate(vertices[k]) - q0;
  }
  if (rank(system) != n) throw DegenerateError("vertices do not determine a unique center");
  auto center = solve(system, rhs);
  if (!center) throw DegenerateError("vertices are not cospherical");
  Rational r2 = form.distance_sq(v0, *center);
  return {std::move(*center), std::move(r2)};
}

}  // namespace

std::string to_string(SphereStatus s) { return s == SphereStatus::verified ? "verified" : "refuted"; }

std::string to_string(RefutationReason r) {
  switch (r) {
    case RefutationReason::none: return "none";
    case RefutationReason::vertex_not_in_lattice: return "vertex_not_in_lattice";
    case RefutationReason::vertex_off_sphere: return "vertex_off_sphere";
    case RefutationReason::interior_point: return "interior_point";
    case RefutationReason::extra_on_sphere_point: return "extra_on_sphere_point";
  }
  return "none";
}

std::size_t affine_rank(const std::vector<RationalVector>& points) {
  if (points.empty()) throw PreconditionError("affine rank of an empty point list");
  const std::size_t n = points.front().size();
  check_dims(points, n);
  RationalMatrix diffs(points.size() - 1, n);
  for (std::size_t k = 1; k < points.size(); ++k)
    for (std::size_t j = 0; j < n; ++j) diffs(k - 1, j) = points[k][j] - points[0][j];
  return rank(diffs) + 1;
}

Circumsphere circumcenter(const std::vector<RationalVector>& vertices, const QuadraticForm& form) {
  if (vertices.empty()) throw DegenerateError("no vertices");
  check_dims(vertices, form.dim());
  if (affine_rank(vertices) != form.dim() + 1) throw DegenerateError("vertices do not affinely span");
  return solve_sphere(vertices, form);
}

SphereCertificate verify_delaunay(const DelaunayInstance& inst, const EnumerationOptions& options) {
  const std::size_t n = inst.dim;
  if (inst.form.dim() != n || inst.lattice.dim() != n) {
    throw DimensionError("instance form/lattice dimension mismatch");
  }
  if (inst.vertices.empty()) throw DegenerateError("instance has no vertices");
  check_dims(inst.vertices, n);
  if (!is_positive_definite(inst.form)) throw PreconditionError("instance form is not positive definite");

  const auto frame = affine_frame(inst.vertices, n);
  if (frame.size() != n + 1) throw DegenerateError("vertices do not affinely span");
  std::vector<RationalVector> frame_pts;
  for (auto i : frame) frame_pts.push_back(inst.vertices[i]);
  const Circumsphere sphere = solve_sphere(frame_pts, inst.form);

  SphereCertificate cert;
  cert.center = sphere.center;
  cert.radius_sq = sphere.radius_sq;
  auto refute = [&](RefutationReason why, const RationalVector& w) {
    cert.status = SphereStatus::refuted;
    cert.reason = why;
    cert.witness = w;
    return cert;
  };

  for (const auto& v : inst.vertices) {
    if (!membership(inst.lattice, v)) return refute(RefutationReason::vertex_not_in_lattice, v);
  }
  for (const auto& v : inst.vertices) {
    if (inst.form.distance_sq(v, sphere.center) != sphere.radius_sq) {
      return refute(RefutationReason::vertex_off_sphere, v);
    }
  }

  std::vector<RationalVector> sorted = inst.vertices;
  std::sort(sorted.begin(), sorted.end(), lex_less);
  const auto points = enumerate_in_ball(inst.lattice, {inst.form, sphere.center, sphere.radius_sq}, options);
  for (const auto& p : points) {
    if (p.value == sphere.radius_sq) ++cert.on_sphere_count;
  }
  for (const auto& p : points) {
    if (p.value < sphere.radius_sq) return refute(RefutationReason::interior_point, p.point);
    if (!std::binary_search(sorted.begin(), sorted.end(), p.point, lex_less)) {
      return refute(RefutationReason::extra_on_sphere_point, p.point);
    }
  }
  cert.status = SphereStatus::verified;
  cert.reason = RefutationReason::none;
  return cert;
}

}  // namespace delforge
