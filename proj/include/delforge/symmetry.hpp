#pragma once

#include <vector>

#include "delforge/constructions.hpp"
#include "delforge/matrix.hpp"
#include "delforge/perm_group.hpp"

namespace delforge {

/// Isometry group of a vertex set, acting on vertex indices.
struct SymmetryReport {
  std::vector<Permutation> generators;
  Integer group_order;
  std::size_t orbit_count = 0;
  std::vector<std::vector<std::size_t>> orbits;
};

/// D[u][v] = q(u − v) over the instance vertices.
RationalMatrix distance_matrix(const DelaunayInstance& inst);

bool preserves_distances(const Permutation& p, const RationalMatrix& distances);

/// Automorphisms of a symmetric distance matrix.
///
/// Individualization–refinement search: vertices are coloured by their
/// multiset of distances, the colouring is refined to an equitable one,
/// and the search branches on the first largest colour class. Generators
/// are collected along the first path of the search tree; the order is
/// taken from a Schreier–Sims chain over them and cross-checked against
/// the orbit lengths seen during the search.
SymmetryReport automorphisms(const RationalMatrix& distances);

/// For full-dimensional vertex sets these are exactly the isometries of
/// the polytope.
SymmetryReport automorphisms(const DelaunayInstance& inst);

}  // namespace delforge
