#include "delforge/report.hpp"

#include <algorithm>
#include <sstream>

#include "delforge/errors.hpp"

namespace delforge {

namespace {

std::string describe_form(const QuadraticForm& q) {
  const RationalMatrix& m = q.matrix();
  bool diagonal = true;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && !m(i, j).is_zero()) diagonal = false;
  std::ostringstream os;
  if (diagonal) {
    RationalVector d;
    for (std::size_t i = 0; i < m.rows(); ++i) d.push_back(m(i, i));
    os << "diag" << to_string(d);
  } else {
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) os << (i ? ", " : "") << to_string(m.row_vector(i));
    os << ']';
  }
  return os.str();
}

const char* mark(bool ok) { return ok ? "ok" : "FAIL"; }

}  // namespace

PnExpectations pn_expectations(std::size_t n) {
  if (n < 4) throw PreconditionError("expectations need n >= 4");
  PnExpectations e;
  const Integer k(static_cast<long>(n) - 3);
  const Integer m(static_cast<long>(n) - 2);
  e.vertex_count = pn_vertex_count(n);
  e.center.assign(n, Rational(1, 2));
  e.center[n - 1] = Rational(Integer(-1), k);
  e.radius_sq = Rational(m * m, 4 * k);
  e.nominal_center.assign(n, 0);
  e.nominal_center[n - 1] = Rational(Integer(-1), k);
  e.nominal_radius_sq = Rational(m * m, k);
  e.form = pn_form(n);
  if (n == 6) {
    e.group_order = 51840;
    e.orbit_sizes = {e.vertex_count};
  } else {
    Integer order = 1;
    for (unsigned long i = 2; i < n; ++i) order *= i;
    order <<= static_cast<mp_bitcnt_t>(n - 2);
    e.group_order = order;
    e.orbit_sizes = {1, 2 * (n - 1), std::size_t{1} << (n - 2)};
    std::sort(e.orbit_sizes.begin(), e.orbit_sizes.end());
  }
  return e;
}

std::vector<std::size_t> orbit_sizes(const SymmetryReport& report) {
  std::vector<std::size_t> sizes;
  for (const auto& o : report.orbits) sizes.push_back(o.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

bool PnReport::vertices_ok() const { return vertex_count && *vertex_count == expected.vertex_count; }

bool PnReport::delaunay_ok() const {
  return sphere && sphere->verified() && sphere->on_sphere_count == expected.vertex_count;
}

bool PnReport::sphere_ok() const {
  return sphere && sphere->center == expected.center && sphere->radius_sq == expected.radius_sq;
}

bool PnReport::nominal_matches() const {
  return sphere && sphere->center == expected.nominal_center && sphere->radius_sq == expected.nominal_radius_sq;
}

bool PnReport::extreme_ok() const {
  return extremality && extremality->is_extreme && extremality->kernel_dim == 1 &&
         extremality->recovered_form && *extremality->recovered_form == expected.form;
}

bool PnReport::symmetry_ok() const {
  return symmetry && symmetry->group_order == expected.group_order && orbit_sizes(*symmetry) == expected.orbit_sizes;
}

bool PnReport::all_passed() const {
  return !error && vertices_ok() && delaunay_ok() && sphere_ok() && extreme_ok() && symmetry_ok();
}

PnReport run_pn_report(std::size_t n, const EnumerationOptions& options) {
  PnReport r;
  r.n = n;
  try {
    const DelaunayInstance inst = construct_pn(n);
    r.expected = pn_expectations(n);
    r.vertex_count = inst.vertices.size();
    r.sphere = verify_delaunay(inst, options);
    if (!r.sphere->verified()) return r;
    r.extremality = certify_extreme(inst, *r.sphere);
    r.symmetry = automorphisms(inst);
  } catch (const Error& e) {
    r.error = e.what();
  }
  return r;
}

Json to_json(const PnReport& r) {
  Json checks{{"vertices", r.vertices_ok()},
              {"delaunay", r.delaunay_ok()},
              {"circumsphere", r.sphere_ok()},
              {"extreme", r.extreme_ok()},
              {"symmetry", r.symmetry_ok()}};
  Json expected{{"vertex_count", r.expected.vertex_count},
                {"center", to_json(r.expected.center)},
                {"radius_sq", to_json(r.expected.radius_sq)},
                {"form", to_json(r.expected.form.matrix())},
                {"group_order", r.expected.group_order.get_str()},
                {"orbit_sizes", r.expected.orbit_sizes}};
  Json nominal{{"center", to_json(r.expected.nominal_center)},
               {"radius_sq", to_json(r.expected.nominal_radius_sq)},
               {"matches_computed", r.nominal_matches()}};
  Json out{{"n", r.n},
           {"passed", r.all_passed()},
           {"error", r.error ? Json(*r.error) : Json(nullptr)},
           {"checks", std::move(checks)},
           {"vertex_count", r.vertex_count ? Json(*r.vertex_count) : Json(nullptr)},
           {"expected", std::move(expected)},
           {"nominal", std::move(nominal)},
           {"delaunay", r.sphere ? to_json(*r.sphere) : Json(nullptr)},
           {"extremality", r.extremality ? to_json(*r.extremality) : Json(nullptr)},
           {"symmetry", nullptr}};
  if (r.symmetry) {
    out["symmetry"] = Json{{"group_order", r.symmetry->group_order.get_str()},
                           {"orbit_count", r.symmetry->orbit_count},
                           {"orbit_sizes", orbit_sizes(*r.symmetry)},
                           {"generator_count", r.symmetry->generators.size()}};
  }
  return out;
}

std::string to_text(const PnReport& r) {
  std::ostringstream os;
  os << "P_" << r.n << " (dimension " << r.n << ")\n";
  if (r.vertex_count) {
    os << "  vertices: " << *r.vertex_count << " (expected " << r.expected.vertex_count << ") "
       << mark(r.vertices_ok()) << '\n';
  }
  if (r.sphere) {
    os << "  Delaunay: " << to_string(r.sphere->status) << ", " << r.sphere->on_sphere_count
       << " lattice points on the sphere, none inside " << mark(r.delaunay_ok()) << '\n';
    if (r.sphere->witness) {
      os << "    witness (" << to_string(r.sphere->reason) << "): " << to_string(*r.sphere->witness) << '\n';
    }
  }
  if (r.extremality) {
    os << "(i)   extremality: kernel_dim " << r.extremality->kernel_dim;
    if (r.extremality->recovered_form) os << ", recovered form " << describe_form(*r.extremality->recovered_form);
    os << " " << mark(r.extreme_ok()) << '\n';
  }
  if (r.sphere) {
    os << "(ii)  circumsphere: center " << to_string(r.sphere->center) << ", r^2 = " << r.sphere->radius_sq << " "
       << mark(r.sphere_ok()) << '\n';
    os << "      nominal values: center " << to_string(r.expected.nominal_center)
       << ", r^2 = " << r.expected.nominal_radius_sq
       << (r.nominal_matches() ? " (agree with computed values)\n" : " (MISMATCH with computed values)\n");
  }
  if (r.symmetry) {
    os << "(iii) symmetry: group order " << r.symmetry->group_order << ", " << r.symmetry->orbit_count
       << " orbit(s) of sizes (";
    const auto sizes = orbit_sizes(*r.symmetry);
    for (std::size_t i = 0; i < sizes.size(); ++i) os << (i ? ", " : "") << sizes[i];
    os << ") " << mark(r.symmetry_ok()) << '\n';
  }
  if (r.error) os << "  error: " << *r.error << '\n';
  os << "result: " << (r.all_passed() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

}  // namespace delforge
