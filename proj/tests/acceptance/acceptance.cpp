// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "delforge/constructions.hpp"
#include "delforge/delaunay.hpp"
#include "delforge/errors.hpp"
#include "delforge/extremality.hpp"
#include "delforge/lattice.hpp"
#include "delforge/matrix.hpp"
#include "delforge/report.hpp"
#include "delforge/symmetry.hpp"
#include "support/oracles.hpp"

namespace {

using namespace delforge;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::ostringstream note;

  void check(bool cond, const std::string& what) {
    if (!cond) {
      if (!ok) note << "; ";
      note << what;
      ok = false;
    }
  }
};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

QuadraticForm expected_form(std::size_t n) {
  RationalVector d(n, Rational(1));
  d[n - 1] = Rational(Integer(static_cast<long>(n) - 3), Integer(4));
  return QuadraticForm::diagonal(d);
}

Integer expected_order(std::size_t n) {
  Integer order = 1;
  for (std::size_t k = 2; k <= n - 1; ++k) order *= Integer(static_cast<long>(k));
  for (std::size_t k = 0; k < n - 2; ++k) order *= 2;
  return order;
}

// Full pipeline for one n; `note` gets the first thing that went wrong.
void pipeline(std::size_t n, std::size_t vertices, const Integer& order, std::vector<std::size_t> orbits,
              double budget, Outcome& out) {
  const auto t0 = Clock::now();
  const std::string tag = "n=" + std::to_string(n) + ": ";
  const auto inst = construct_pn(n);
  out.check(inst.vertices.size() == vertices, tag + "vertex count " + std::to_string(inst.vertices.size()));
  const auto sphere = verify_delaunay(inst);
  out.check(sphere.verified(), tag + "not Delaunay");
  out.check(sphere.on_sphere_count == vertices, tag + "on-sphere count " + std::to_string(sphere.on_sphere_count));
  const auto ext = certify_extreme(inst, sphere);
  out.check(ext.kernel_dim == 1, tag + "kernel_dim " + std::to_string(ext.kernel_dim));
  out.check(ext.is_extreme, tag + "not extreme");
  out.check(ext.recovered_form && *ext.recovered_form == expected_form(n), tag + "recovered form");
  const auto sym = automorphisms(inst);
  out.check(sym.group_order == order, tag + "group order " + sym.group_order.get_str());
  out.check(orbit_sizes(sym) == orbits, tag + "orbit sizes");
  const double elapsed = seconds_since(t0);
  out.check(elapsed < budget, tag + "took " + std::to_string(elapsed) + " s");
  if (out.ok) out.note << tag << elapsed << " s ";
}

Outcome criterion_1() {
  Outcome out;
  pipeline(6, 27, Integer(51840), {27}, 10.0, out);
  return out;
}

Outcome criterion_2() {
  Outcome out;
  for (std::size_t n : {8, 10, 12}) {
    std::vector<std::size_t> orbits{1, 2 * (n - 1), std::size_t{1} << (n - 2)};
    std::sort(orbits.begin(), orbits.end());
    const std::size_t vertices = 1 + (std::size_t{1} << (n - 2)) + 2 * (n - 1);
    pipeline(n, vertices, expected_order(n), orbits, 300.0, out);
  }
  return out;
}

Outcome criterion_3() {
  Outcome out;
  for (std::size_t n : {6, 8, 10, 12}) {
    const auto tag = "n=" + std::to_string(n) + ": ";
    const long k = static_cast<long>(n) - 3;
    RationalVector center(n, Rational(1, 2));
    center[n - 1] = Rational(Integer(-1), Integer(k));
    const Rational r2(Integer((static_cast<long>(n) - 2) * (static_cast<long>(n) - 2)), Integer(4 * k));
    const auto sphere = verify_delaunay(construct_pn(n));
    out.check(sphere.center == center, tag + "center " + to_string(sphere.center));
    out.check(sphere.radius_sq == r2, tag + "r^2 " + sphere.radius_sq.to_string());

    const auto report = run_pn_report(n);
    const std::string text = to_text(report);
    RationalVector nominal(n, Rational(0));
    nominal[n - 1] = center[n - 1];
    out.check(text.find(to_string(nominal)) != std::string::npos, tag + "nominal center not printed");
    out.check(text.find("MISMATCH") != std::string::npos, tag + "nominal mismatch not flagged");
    out.check(!report.nominal_matches(), tag + "nominal values reported as matching");
  }
  return out;
}

Outcome criterion_4() {
  Outcome out;
  for (const auto& inst : {construct_half_cube(5), construct_cross_polytope(4)}) {
    const auto sphere = verify_delaunay(inst);
    out.check(sphere.verified(), inst.label + " not Delaunay");
    const auto ext = certify_extreme(inst, sphere);
    out.check(!ext.is_extreme && ext.kernel_dim > 1, inst.label + " certified extreme");
    out.check(ext.kernel_basis.size() >= 2, inst.label + " fewer than two kernel triples");
    for (const auto& t : ext.kernel_basis)
      for (const auto& v : inst.vertices) out.check(evaluate_quadric(t, v).is_zero(), inst.label + " triple misses a vertex");
    if (out.ok) out.note << inst.label << " kernel_dim " << ext.kernel_dim << "; ";
  }
  const auto seg = certify_extreme(construct_segment());
  out.check(seg.is_extreme && seg.kernel_dim == 1, "segment not extreme");
  return out;
}

Outcome criterion_5() {
  Outcome out;
  for (std::size_t n : {7, 9}) {
    const auto tag = "n=" + std::to_string(n) + ": ";
    const auto lattice = l_n_lattice(n);
    const auto third = pn_third_layer(n);
    bool any_member = false;
    for (const auto& v : third) any_member = any_member || membership(lattice, v);
    out.check(!third.empty() && !any_member, tag + "third layer lies in L_n");
    bool rejected = false;
    try {
      construct_pn(n);
    } catch (const PreconditionError& e) {
      rejected = std::string(e.what()).find("if and only if n is even") != std::string::npos;
    }
    out.check(rejected, tag + "construct_pn did not refuse");
  }
  for (std::size_t n : {6, 8}) {
    const auto lattice = l_n_lattice(n);
    for (const auto& v : pn_third_layer(n))
      out.check(membership(lattice, v), "n=" + std::to_string(n) + ": third layer outside L_n");
  }
  return out;
}

std::vector<DelaunayInstance> shipped_small_instances() {
  std::vector<DelaunayInstance> out{construct_segment(), construct_pn(6)};
  for (std::size_t m = 3; m <= 6; ++m) out.push_back(construct_half_cube(m));  // ½H_2 is a segment in R^2
  for (std::size_t m = 2; m <= 6; ++m) out.push_back(construct_cross_polytope(m));
  return out;
}

Outcome criterion_6() {
  Outcome out;
  std::mt19937 rng(20240611);
  int cases = 0;
  for (; cases < 250; ++cases) {
    const auto c = testing::random_ball_case(rng, 2.0e5);
    if (enumerate_in_ball(c.lattice, c.query) != enumerate_brute_force(c.lattice, c.query, c.box)) {
      out.check(false, "enumeration mismatch on case " + std::to_string(cases));
      break;
    }
  }
  int instances = 0;
  for (const auto& inst : shipped_small_instances()) {
    if (inst.dim > 6) continue;
    const auto ext = certify_extreme(inst);
    const auto oracle = kernel_dim_oracle(inst.vertices, inst.dim);
    out.check(ext.kernel_dim == oracle, inst.label + ": " + std::to_string(ext.kernel_dim) + " vs oracle " +
                                            std::to_string(oracle));
    ++instances;
  }
  if (out.ok) out.note << cases << " enumeration cases, " << instances << " instances";
  return out;
}

Outcome criterion_7() {
  Outcome out;
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    const auto a = testing::random_matrix(rng, rows, cols, 3);
    const auto ker = kernel(a);
    out.check(rank(a) + ker.size() == cols, "rank-nullity");
    for (const auto& k : ker)
      for (const auto& entry : a.apply(k)) out.check(entry.is_zero(), "kernel vector not annihilated");
  }
  for (const auto& inst : shipped_small_instances()) {
    const auto cm = condition_matrix(inst.vertices, inst.dim);
    for (const auto& k : kernel(cm))
      for (const auto& entry : cm.apply(k)) out.check(entry.is_zero(), inst.label + ": condition kernel");

    const auto d = distance_matrix(inst);
    for (const auto& g : automorphisms(inst).generators)
      out.check(preserves_distances(g, d), inst.label + ": generator moves a distance");

    const std::size_t base = certify_extreme(inst).kernel_dim;
    auto scaled = inst;
    scaled.form = inst.form.scaled(Rational(7, 3));
    out.check(certify_extreme(scaled).kernel_dim == base, inst.label + ": scaling changed kernel_dim");
    std::vector<RationalVector> moved;
    RationalVector shift(inst.dim);
    for (std::size_t i = 0; i < inst.dim; ++i) shift[i] = Rational(Integer(static_cast<long>(i) - 2), Integer(5));
    for (const auto& v : inst.vertices) moved.push_back(Rational(-3, 2) * v + shift);
    out.check(kernel_dim_oracle(moved, inst.dim) == base &&
                  quadric_unknowns(inst.dim) - rank(condition_matrix(moved, inst.dim)) == base,
              inst.label + ": homothety changed kernel_dim");
  }
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"AC1 P_6 pipeline", criterion_1},
      {"AC2 P_8, P_10, P_12 pipelines", criterion_2},
      {"AC3 exact circumsphere, nominal mismatch flagged", criterion_3},
      {"AC4 negative controls and the segment", criterion_4},
      {"AC5 parity gate for n = 7, 9", criterion_5},
      {"AC6 oracle equivalence", criterion_6},
      {"AC7 property suites", criterion_7},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    Outcome out;
    try {
      out = run();
    } catch (const std::exception& e) {
      out.ok = false;
      out.note << "exception: " << e.what();
    }
    std::printf("%s %s (%s)\n", out.ok ? "PASS" : "FAIL", name.c_str(), out.note.str().c_str());
    std::fflush(stdout);
    failed += out.ok ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
