#include <random>

#include <gtest/gtest.h>

#include "delforge/constructions.hpp"
#include "delforge/delaunay.hpp"
#include "delforge/errors.hpp"
#include "delforge/lattice.hpp"
#include "support/oracles.hpp"

namespace delforge {
namespace {

Lattice integer_lattice(std::size_t n) { return Lattice(RationalMatrix::identity(n)); }

std::vector<RationalVector> points_of(const std::vector<LatticePoint>& pts) {
  std::vector<RationalVector> out;
  for (const auto& p : pts) out.push_back(p.point);
  return out;
}

TEST(MembershipTest, Examples) {
  EXPECT_TRUE(membership(l_n_lattice(6), RationalVector(6)));
  EXPECT_TRUE(membership(l_n_lattice(6), {Rational(3, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2),
                                          Rational(1, 2), -1}));
  EXPECT_FALSE(membership(l_n_lattice(7), {Rational(3, 2), Rational(1, 2), Rational(1, 2), Rational(1, 2),
                                           Rational(1, 2), Rational(1, 2), -1}));
  EXPECT_THROW(membership(l_n_lattice(6), RationalVector(5)), DimensionError);
}

TEST(MembershipTest, BasisRowsAndCombinationsAreMembers) {
  const Lattice l = l_n_lattice(8);
  for (std::size_t i = 0; i < l.dim(); ++i) EXPECT_TRUE(membership(l, l.basis().row_vector(i)));
  EXPECT_TRUE(membership(l, l.point({3, -2, 0, 1, 0, 0, 5, -7})));
  EXPECT_FALSE(membership(l, Rational(1, 2) * l.basis().row_vector(3)));
}

TEST(LatticeTest, RejectsSingularBasis) {
  EXPECT_THROW(Lattice(RationalMatrix{{1, 2}, {2, 4}}), PreconditionError);
  EXPECT_THROW(Lattice(RationalMatrix{{1, 2}}), DimensionError);
}

TEST(EnumerateTest, UnitBallInZ2) {
  const auto pts = enumerate_in_ball(integer_lattice(2), {QuadraticForm::identity(2), {0, 0}, 1});
  EXPECT_EQ(points_of(pts), (std::vector<RationalVector>{{-1, 0}, {0, -1}, {0, 0}, {0, 1}, {1, 0}}));
  EXPECT_EQ(pts[2].value, Rational(0));
  EXPECT_EQ(pts[0].value, Rational(1));
}

TEST(EnumerateTest, SmallBallAroundHoleIsEmpty) {
  EXPECT_TRUE(enumerate_in_ball(integer_lattice(2),
                                {QuadraticForm::identity(2), {Rational(1, 2), Rational(1, 2)}, Rational(1, 4)})
                  .empty());
}

TEST(EnumerateTest, NegativeRadiusIsEmpty) {
  const BallQuery q{QuadraticForm::identity(2), {0, 0}, -1};
  EXPECT_TRUE(enumerate_in_ball(integer_lattice(2), q).empty());
  EXPECT_TRUE(enumerate_brute_force(integer_lattice(2), q, 3).empty());
}

TEST(EnumerateTest, BruteForceMatchesOnUnitBall) {
  const BallQuery q{QuadraticForm::identity(2), {0, 0}, 1};
  EXPECT_EQ(enumerate_brute_force(integer_lattice(2), q, 3), enumerate_in_ball(integer_lattice(2), q));
}

TEST(EnumerateTest, RejectsIndefiniteForm) {
  const BallQuery q{QuadraticForm(RationalMatrix{{1, 2}, {2, 1}}), {0, 0}, 1};
  EXPECT_THROW(enumerate_in_ball(integer_lattice(2), q), PreconditionError);
}

TEST(EnumerateTest, NodeCapIsEnforced) {
  const BallQuery q{QuadraticForm::identity(3), {0, 0, 0}, 100};
  EXPECT_THROW(enumerate_in_ball(integer_lattice(3), q, {.max_nodes = 50}), EnumerationLimitError);
  EXPECT_NO_THROW(enumerate_in_ball(integer_lattice(3), q, {.max_nodes = 1'000'000}));
}

TEST(EnumerateTest, SchlaefliSphereHoldsExactly27Points) {
  const auto inst = construct_pn(6);
  const auto sphere = circumcenter(inst.vertices, inst.form);
  const auto pts = enumerate_in_ball(inst.lattice, {inst.form, sphere.center, sphere.radius_sq});
  EXPECT_EQ(pts.size(), 27u);
  for (const auto& p : pts) EXPECT_EQ(p.value, sphere.radius_sq);
}

TEST(EnumerationOracle, MatchesBruteForceOnRandomInstances) {
  std::mt19937 rng(424242);
  int nonempty = 0;
  for (int checked = 0; checked < 250; ++checked) {
    const auto c = testing::random_ball_case(rng, 60000);
    const auto fast = enumerate_in_ball(c.lattice, c.query);
    const auto slow = enumerate_brute_force(c.lattice, c.query, c.box);
    ASSERT_EQ(fast, slow) << "case " << checked;
    if (!fast.empty()) ++nonempty;
    for (const auto& p : fast) EXPECT_TRUE(membership(c.lattice, p.point));
  }
  EXPECT_GT(nonempty, 100);
}

TEST(EnumerationOracle, ShrinkingTheRadiusGivesAStrictSubset) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    auto c = testing::random_ball_case(rng, 60000);
    const auto full = enumerate_in_ball(c.lattice, c.query);
    if (full.empty()) continue;
    Rational min_value = full.front().value;
    for (const auto& p : full) min_value = std::min(min_value, p.value);
    BallQuery smaller = c.query;
    smaller.radius_sq = min_value - Rational(1, 1000);
    const auto shrunk = enumerate_in_ball(c.lattice, smaller);
    EXPECT_LT(shrunk.size(), full.size());
    for (const auto& p : shrunk) EXPECT_NE(std::find(full.begin(), full.end(), p), full.end());
  }
}

}  // namespace
}  // namespace delforge
