#include "delforge/serialize.hpp"

#include "delforge/errors.hpp"

namespace delforge {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

const Json& array(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  return j;
}

std::size_t count_from_json(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    throw ParseError(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

QuadricTriple triple_from_json(const Json& j) {
  return {matrix_from_json(field(j, "Q")), vector_from_json(field(j, "b")), rational_from_json(field(j, "s"))};
}

Json triple_to_json(const QuadricTriple& t) {
  return Json{{"Q", to_json(t.Q)}, {"b", to_json(t.b)}, {"s", to_json(t.s)}};
}

Json permutation_to_json(const Permutation& p) {
  Json out = Json::array();
  for (auto x : p) out.push_back(x);
  return out;
}

}  // namespace

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

Json to_json(const RationalMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row_vector(i)));
  return out;
}

Json to_json(const Lattice& l) { return Json{{"dim", l.dim()}, {"basis", to_json(l.basis())}}; }

Json to_json(const DelaunayInstance& inst) {
  Json verts = Json::array();
  for (const auto& v : inst.vertices) verts.push_back(to_json(v));
  return Json{{"label", inst.label},
              {"dim", inst.dim},
              {"form", to_json(inst.form.matrix())},
              {"lattice", to_json(inst.lattice)},
              {"vertices", std::move(verts)}};
}

Json to_json(const SphereCertificate& cert) {
  return Json{{"center", to_json(cert.center)},
              {"radius_sq", to_json(cert.radius_sq)},
              {"status", to_string(cert.status)},
              {"reason", to_string(cert.reason)},
              {"witness", cert.witness ? to_json(*cert.witness) : Json(nullptr)},
              {"on_sphere_count", cert.on_sphere_count}};
}

Json to_json(const ExtremalityCertificate& cert) {
  Json basis = Json::array();
  for (const auto& t : cert.kernel_basis) basis.push_back(triple_to_json(t));
  return Json{{"kernel_dim", cert.kernel_dim},
              {"is_extreme", cert.is_extreme},
              {"kernel_basis", std::move(basis)},
              {"recovered_form", cert.recovered_form ? to_json(cert.recovered_form->matrix()) : Json(nullptr)}};
}

Json to_json(const SymmetryReport& report) {
  Json orbits = Json::array();
  for (const auto& o : report.orbits) orbits.push_back(o);
  Json gens = Json::array();
  for (const auto& g : report.generators) gens.push_back(permutation_to_json(g));
  return Json{{"group_order", report.group_order.get_str()},
              {"orbit_count", report.orbit_count},
              {"orbits", std::move(orbits)},
              {"generators", std::move(gens)}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  throw ParseError("rational must be a \"p/q\" string or an integer");
}

RationalVector vector_from_json(const Json& j) {
  RationalVector v;
  for (const auto& x : array(j, "vector")) v.push_back(rational_from_json(x));
  return v;
}

RationalMatrix matrix_from_json(const Json& j) {
  std::vector<RationalVector> rows;
  for (const auto& r : array(j, "matrix")) rows.push_back(vector_from_json(r));
  try {
    return RationalMatrix::from_rows(rows);
  } catch (const DimensionError& e) {
    throw ParseError(e.what());
  }
}

Lattice lattice_from_json(const Json& j) {
  const std::size_t dim = count_from_json(field(j, "dim"), "lattice dim");
  RationalMatrix basis = matrix_from_json(field(j, "basis"));
  if (basis.rows() != dim || basis.cols() != dim) throw ParseError("lattice basis must be dim x dim");
  try {
    return Lattice(std::move(basis));
  } catch (const Error& e) {
    throw ParseError(std::string("invalid lattice: ") + e.what());
  }
}

DelaunayInstance instance_from_json(const Json& j) {
  DelaunayInstance inst;
  const Json& label = field(j, "label");
  if (!label.is_string()) throw ParseError("label must be a string");
  inst.label = label.get<std::string>();
  inst.dim = count_from_json(field(j, "dim"), "dim");
  try {
    inst.form = QuadraticForm(matrix_from_json(field(j, "form")));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(std::string("invalid form: ") + e.what());
  }
  inst.lattice = lattice_from_json(field(j, "lattice"));
  if (inst.form.dim() != inst.dim || inst.lattice.dim() != inst.dim) {
    throw ParseError("form and lattice must match dim");
  }
  for (const auto& v : array(field(j, "vertices"), "vertices")) {
    inst.vertices.push_back(vector_from_json(v));
    if (inst.vertices.back().size() != inst.dim) throw ParseError("vertex length must equal dim");
  }
  return inst;
}

SphereCertificate sphere_certificate_from_json(const Json& j) {
  SphereCertificate cert;
  cert.center = vector_from_json(field(j, "center"));
  cert.radius_sq = rational_from_json(field(j, "radius_sq"));
  const Json& status = field(j, "status");
  if (status == "verified") {
    cert.status = SphereStatus::verified;
  } else if (status == "refuted") {
    cert.status = SphereStatus::refuted;
  } else {
    throw ParseError("status must be \"verified\" or \"refuted\"");
  }
  if (auto it = j.find("reason"); it != j.end()) {
    const std::string r = it->is_string() ? it->get<std::string>() : "";
    bool known = false;
    for (auto candidate : {RefutationReason::none, RefutationReason::vertex_not_in_lattice,
                           RefutationReason::vertex_off_sphere, RefutationReason::interior_point,
                           RefutationReason::extra_on_sphere_point}) {
      if (to_string(candidate) == r) {
        cert.reason = candidate;
        known = true;
      }
    }
    if (!known) throw ParseError("unknown refutation reason '" + r + "'");
  }
  const Json& w = field(j, "witness");
  if (!w.is_null()) cert.witness = vector_from_json(w);
  cert.on_sphere_count = count_from_json(field(j, "on_sphere_count"), "on_sphere_count");
  return cert;
}

ExtremalityCertificate extremality_certificate_from_json(const Json& j) {
  ExtremalityCertificate cert;
  cert.kernel_dim = count_from_json(field(j, "kernel_dim"), "kernel_dim");
  const Json& ext = field(j, "is_extreme");
  if (!ext.is_boolean()) throw ParseError("is_extreme must be a boolean");
  cert.is_extreme = ext.get<bool>();
  for (const auto& t : array(field(j, "kernel_basis"), "kernel_basis")) cert.kernel_basis.push_back(triple_from_json(t));
  if (cert.kernel_basis.size() != cert.kernel_dim) throw ParseError("kernel_basis length must equal kernel_dim");
  const Json& form = field(j, "recovered_form");
  if (!form.is_null()) {
    try {
      cert.recovered_form = QuadraticForm(matrix_from_json(form));
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(std::string("invalid recovered_form: ") + e.what());
    }
  }
  return cert;
}

SymmetryReport symmetry_report_from_json(const Json& j) {
  SymmetryReport report;
  const Json& order = field(j, "group_order");
  if (!order.is_string() || report.group_order.set_str(order.get<std::string>(), 10) != 0) {
    throw ParseError("group_order must be a decimal string");
  }
  report.orbit_count = count_from_json(field(j, "orbit_count"), "orbit_count");
  for (const auto& o : array(field(j, "orbits"), "orbits")) {
    std::vector<std::size_t> orbit;
    for (const auto& x : array(o, "orbit")) orbit.push_back(count_from_json(x, "orbit entry"));
    report.orbits.push_back(std::move(orbit));
  }
  for (const auto& g : array(field(j, "generators"), "generators")) {
    Permutation p;
    for (const auto& x : array(g, "generator")) p.push_back(static_cast<std::uint32_t>(count_from_json(x, "image")));
    report.generators.push_back(std::move(p));
  }
  return report;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace delforge
