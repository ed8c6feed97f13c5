#pragma once

#include <optional>
#include <string>
#include <vector>

#include "delforge/constructions.hpp"
#include "delforge/delaunay.hpp"
#include "delforge/extremality.hpp"
#include "delforge/serialize.hpp"
#include "delforge/symmetry.hpp"

namespace delforge {

/// Closed-form values every P_n is checked against.
struct PnExpectations {
  std::size_t vertex_count = 0;
  RationalVector center;                 // (1/2, …, 1/2, −1/(n−3))
  Rational radius_sq;                    // (n−2)² / (4(n−3))
  RationalVector nominal_center;         // (0, …, 0, −1/(n−3))
  Rational nominal_radius_sq;            // ((n−2)/√(n−3))² = (n−2)²/(n−3)
  QuadraticForm form = QuadraticForm::identity(0);  // diag(1, …, 1, (n−3)/4)
  Integer group_order;                   // 51840 for n = 6, (n−1)!·2^{n−2} otherwise
  std::vector<std::size_t> orbit_sizes;  // ascending
};

PnExpectations pn_expectations(std::size_t n);

/// Sorted orbit sizes of a symmetry report.
std::vector<std::size_t> orbit_sizes(const SymmetryReport& report);

/// construct → verify-delaunay → certify-extreme → symmetry for P_n, with
/// every result compared to PnExpectations. Stage errors are caught and
/// recorded; later stages are then skipped.
struct PnReport {
  std::size_t n = 0;
  PnExpectations expected;
  std::optional<std::size_t> vertex_count;
  std::optional<SphereCertificate> sphere;
  std::optional<ExtremalityCertificate> extremality;
  std::optional<SymmetryReport> symmetry;
  std::optional<std::string> error;

  bool vertices_ok() const;
  bool delaunay_ok() const;
  bool sphere_ok() const;
  bool nominal_matches() const;
  bool extreme_ok() const;
  bool symmetry_ok() const;
  bool all_passed() const;
};

PnReport run_pn_report(std::size_t n, const EnumerationOptions& options = {});

Json to_json(const PnReport& report);
std::string to_text(const PnReport& report);

}  // namespace delforge
