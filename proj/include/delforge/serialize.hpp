#pragma once

#include <string>

#include <json.hpp>

#include "delforge/constructions.hpp"
#include "delforge/delaunay.hpp"
#include "delforge/extremality.hpp"
#include "delforge/lattice.hpp"
#include "delforge/symmetry.hpp"

namespace delforge {

using Json = nlohmann::ordered_json;

// Rationals are written as "p/q" strings ("p" when q = 1). Readers also
// accept JSON integers. Every reader throws ParseError on malformed input.

Json to_json(const Rational& r);
Json to_json(const RationalVector& v);
Json to_json(const RationalMatrix& m);
Json to_json(const Lattice& l);
Json to_json(const DelaunayInstance& inst);
Json to_json(const SphereCertificate& cert);
Json to_json(const ExtremalityCertificate& cert);
Json to_json(const SymmetryReport& report);

Rational rational_from_json(const Json& j);
RationalVector vector_from_json(const Json& j);
RationalMatrix matrix_from_json(const Json& j);
Lattice lattice_from_json(const Json& j);
DelaunayInstance instance_from_json(const Json& j);
SphereCertificate sphere_certificate_from_json(const Json& j);
ExtremalityCertificate extremality_certificate_from_json(const Json& j);
SymmetryReport symmetry_report_from_json(const Json& j);

/// Parses text; throws ParseError with the parser's message.
Json parse_json(const std::string& text);
/// Two-space indented dump with a trailing newline.
std::string dump_json(const Json& j);

}  // namespace delforge
