#pragma once

#include <cstdint>
#include <vector>

#include "delforge/rational.hpp"

namespace delforge {

/// One-line permutation of {0, …, degree−1}: p[x] is the image of x.
using Permutation = std::vector<std::uint32_t>;

Permutation identity_permutation(std::size_t degree);
bool is_identity(const Permutation& p);
/// Apply a, then b.
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& p);
/// Throws PreconditionError unless `p` is a bijection on {0, …, degree−1}.
void validate_permutation(const Permutation& p, std::size_t degree);

/// Base and strong generating set built by deterministic Schreier–Sims.
class StabilizerChain {
 public:
  /// `base_hint` lists preferred base points, tried in order whenever a new
  /// level is needed. Throws PreconditionError on malformed generators.
  StabilizerChain(std::size_t degree, const std::vector<Permutation>& generators,
                  const std::vector<std::uint32_t>& base_hint = {});

  std::size_t degree() const { return degree_; }
  Integer order() const;
  bool contains(const Permutation& p) const;
  std::vector<std::uint32_t> base() const;
  std::vector<std::size_t> orbit_lengths() const;

 private:
  struct Level {
    std::uint32_t base_point = 0;
    std::vector<Permutation> gens;
    std::vector<std::int32_t> slot;  // point -> orbit index, −1 if outside
    std::vector<std::uint32_t> orbit;
    std::vector<Permutation> transversal;  // base_point ↦ orbit[k]
    std::vector<Permutation> transversal_inv;
    std::vector<std::vector<bool>> checked;  // [gen][orbit index]
  };

  // Residue of `h` after stripping from level `start`; `level` is where it
  // stopped (levels_.size() when it passed through every level).
  struct Sifted {
    Permutation residue;
    std::size_t level;
  };

  Sifted sift(Permutation h, std::size_t start) const;
  void add_strong_generator(const Permutation& h, std::size_t from, std::size_t to);
  void extend_orbit(Level& level);
  void complete(std::size_t level);
  std::uint32_t pick_base_point(const Permutation& h) const;

  std::size_t degree_;
  std::vector<std::uint32_t> base_hint_;
  std::vector<Level> levels_;
};

/// Order of ⟨generators⟩.
Integer group_order(const std::vector<Permutation>& generators, std::size_t degree);

/// Orbits of ⟨generators⟩, each sorted, ordered by smallest element.
std::vector<std::vector<std::size_t>> group_orbits(const std::vector<Permutation>& generators,
                                                   std::size_t degree);

}  // namespace delforge
