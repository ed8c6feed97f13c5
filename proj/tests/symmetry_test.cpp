#include <gtest/gtest.h>

#include "delforge/constructions.hpp"
#include "delforge/errors.hpp"
#include "delforge/symmetry.hpp"
#include "support/oracles.hpp"

namespace delforge {
namespace {

Permutation cycle_on(std::size_t degree, std::vector<std::uint32_t> cycle) {
  Permutation p = identity_permutation(degree);
  for (std::size_t i = 0; i < cycle.size(); ++i) p[cycle[i]] = cycle[(i + 1) % cycle.size()];
  return p;
}

TEST(GroupOrderTest, Examples) {
  EXPECT_EQ(group_order({cycle_on(2, {0, 1})}, 2), 2);
  EXPECT_EQ(group_order({cycle_on(4, {0, 1}), cycle_on(4, {0, 1, 2, 3})}, 4), 24);
  EXPECT_EQ(group_order({identity_permutation(5)}, 5), 1);
  EXPECT_EQ(group_order({}, 3), 1);
}

TEST(GroupOrderTest, RejectsMalformedPermutations) {
  EXPECT_THROW(group_order({{0, 0, 1}}, 3), PreconditionError);
  EXPECT_THROW(group_order({{0, 1}}, 3), PreconditionError);
  EXPECT_THROW(group_order({{0, 1, 3}}, 3), PreconditionError);
}

TEST(GroupOrderTest, MatchesEnumerationOnSmallGroups) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t degree = 3 + trial % 5;
    std::vector<Permutation> gens;
    for (int g = 0; g < 1 + trial % 3; ++g) {
      Permutation p = identity_permutation(degree);
      std::shuffle(p.begin(), p.end(), rng);
      gens.push_back(p);
    }
    const StabilizerChain chain(degree, gens);
    EXPECT_EQ(chain.order(), testing::enumerate_group_size(gens, degree));
    for (const auto& g : gens) EXPECT_TRUE(chain.contains(g));
  }
}

TEST(GroupOrderTest, LargeSymmetricGroup) {
  // ⟨(0 1), (0 1 … 11)⟩ = Sym(12)
  std::vector<std::uint32_t> all(12);
  std::iota(all.begin(), all.end(), 0U);
  EXPECT_EQ(group_order({cycle_on(12, {0, 1}), cycle_on(12, all)}, 12), 479001600);
  // Alternating group from 3-cycles.
  EXPECT_EQ(group_order({cycle_on(6, {0, 1, 2}), cycle_on(6, {1, 2, 3}), cycle_on(6, {2, 3, 4}),
                         cycle_on(6, {3, 4, 5})},
                        6),
            360);
}

TEST(OrbitsTest, UnionOfCycles) {
  const auto orbits = group_orbits({cycle_on(6, {0, 2}), cycle_on(6, {3, 5, 4})}, 6);
  EXPECT_EQ(orbits, (std::vector<std::vector<std::size_t>>{{0, 2}, {1}, {3, 4, 5}}));
}

TEST(DistanceMatrixTest, Examples) {
  const DelaunayInstance two{"two", 1, QuadraticForm::identity(1), Lattice(RationalMatrix::identity(1)), {{0}, {1}}};
  EXPECT_EQ(distance_matrix(two), (RationalMatrix{{0, 1}, {1, 0}}));
  for (std::size_t n : {6, 8}) {
    const auto inst = construct_pn(n);
    const auto d = distance_matrix(inst);
    EXPECT_TRUE(d.is_symmetric());
    for (std::size_t w = 1; w <= (std::size_t{1} << (n - 2)); ++w) {
      EXPECT_EQ(d(0, w), Rational(Integer(static_cast<long>(n) - 2), 2));
    }
    for (std::size_t i = 0; i < d.rows(); ++i) EXPECT_TRUE(d(i, i).is_zero());
  }
}

TEST(AutomorphismsTest, TwoPoints) {
  const auto r = automorphisms(RationalMatrix{{0, 1}, {1, 0}});
  EXPECT_EQ(r.group_order, 2);
  EXPECT_EQ(r.orbit_count, 1u);
}

TEST(AutomorphismsTest, Schlaefli) {
  const auto inst = construct_pn(6);
  const auto r = automorphisms(inst);
  EXPECT_EQ(r.group_order, 51840);
  EXPECT_EQ(r.orbit_count, 1u);
  const auto d = distance_matrix(inst);
  for (const auto& g : r.generators) EXPECT_TRUE(preserves_distances(g, d));
}

TEST(AutomorphismsTest, PnHasThreeLayerOrbits) {
  for (std::size_t n : {8, 10}) {
    const auto inst = construct_pn(n);
    const auto r = automorphisms(inst);
    Integer expected = 1;
    for (unsigned long i = 2; i < n; ++i) expected *= i;
    expected <<= static_cast<mp_bitcnt_t>(n - 2);
    EXPECT_EQ(r.group_order, expected) << n;
    ASSERT_EQ(r.orbit_count, 3u);
    const std::size_t layer = std::size_t{1} << (n - 2);
    EXPECT_EQ(r.orbits[0], (std::vector<std::size_t>{0}));
    EXPECT_EQ(r.orbits[1].size(), layer);
    EXPECT_EQ(r.orbits[2].size(), 2 * (n - 1));
    const auto d = distance_matrix(inst);
    for (const auto& g : r.generators) EXPECT_TRUE(preserves_distances(g, d));
  }
}

TEST(AutomorphismsTest, HalfCubeFourMatchesExhaustiveCount) {
  // ½H_4 is the 16-cell: the exhaustive count over 8! permutations is 384,
  // twice m!·2^{m−1}.
  const auto inst = construct_half_cube(4);
  const auto d = distance_matrix(inst);
  const std::size_t brute = testing::count_automorphisms_exhaustively(d);
  EXPECT_EQ(brute, 384u);
  EXPECT_EQ(automorphisms(inst).group_order, brute);
}

TEST(AutomorphismsTest, HalfCubeFive) {
  EXPECT_EQ(automorphisms(construct_half_cube(5)).group_order, 1920);  // 5!·2^4
}

TEST(AutomorphismsTest, SmallInstancesMatchExhaustiveCount) {
  for (const auto& inst : {construct_cross_polytope(3), construct_cross_polytope(4), construct_half_cube(3),
                           construct_segment()}) {
    const auto d = distance_matrix(inst);
    EXPECT_EQ(automorphisms(d).group_order, testing::count_automorphisms_exhaustively(d)) << inst.label;
  }
}

TEST(AutomorphismsTest, GenericPointSetHasTrivialGroup) {
  const RationalMatrix d{{0, 1, 4}, {1, 0, 9}, {4, 9, 0}};
  const auto r = automorphisms(d);
  EXPECT_EQ(r.group_order, 1);
  EXPECT_EQ(r.orbit_count, 3u);
}

}  // namespace
}  // namespace delforge
