#pragma once

#include <string>
#include <vector>

#include "delforge/lattice.hpp"
#include "delforge/matrix.hpp"

namespace delforge {

/// A candidate Delaunay polytope: vertices in a lattice under a metric.
struct DelaunayInstance {
  std::string label;
  std::size_t dim = 0;
  QuadraticForm form = QuadraticForm::identity(0);
  Lattice lattice = Lattice(RationalMatrix());
  std::vector<RationalVector> vertices;
};

/// Root lattice D_m with basis {e_1+e_2} ∪ {e_i − e_{i+1}}. Requires m ≥ 2.
Lattice standard_d_lattice(std::size_t m);

/// Lattice generated by D_{n−1}×{0} and g = (1/2, …, 1/2, 1). Requires n ≥ 3.
Lattice l_n_lattice(std::size_t n);

/// Diagonal form diag(1, …, 1, (n−3)/4) that makes P_n Delaunay.
QuadraticForm pn_form(std::size_t n);

/// Half-cube ½H_m over D_m, identity form, vertices in lexicographic order.
DelaunayInstance construct_half_cube(std::size_t m);

/// Cross-polytope {e_1 ± e_i} over D_m, identity form.
DelaunayInstance construct_cross_polytope(std::size_t m);

/// Three-layer polytope P_n over L_n: the apex (1/2,…,1/2,1), the half-cube
/// layer {(x,0) : x ∈ ½H_{n−1}}, and V_{j,±} = (1/2,…,1/2,−1) ± e_j.
/// Vertex order: apex, half-cube layer (lexicographic), then V_{j,+}, V_{j,−}
/// for j = 1..n−1. Requires n even and n ≥ 6.
DelaunayInstance construct_pn(std::size_t n);

/// The 2(n−1) points V_{j,±} for any n ≥ 3, without the parity check.
std::vector<RationalVector> pn_third_layer(std::size_t n);

/// Unit segment {0, 1} in Z¹.
DelaunayInstance construct_segment();

/// 1 + 2^{n−2} + 2(n−1)
std::size_t pn_vertex_count(std::size_t n);

}  // namespace delforge
