#include "delforge/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "delforge/constructions.hpp"
#include "delforge/delaunay.hpp"
#include "delforge/errors.hpp"
#include "delforge/extremality.hpp"
#include "delforge/report.hpp"
#include "delforge/serialize.hpp"
#include "delforge/symmetry.hpp"

namespace delforge {

namespace {

struct RunConfig {
  std::string family;
  std::optional<std::size_t> dim;
  std::string in;
  std::string out;
  bool quiet = false;
};

// Any usage mistake; mapped to exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

void add_common_options(CLI::App* cmd, RunConfig& cfg, bool with_input_file) {
  cmd->add_option("--family", cfg.family, "pn | half-cube | cross-polytope | segment");
  cmd->add_option("--dim", cfg.dim, "dimension n");
  if (with_input_file) cmd->add_option("--in", cfg.in, "instance JSON file");
  cmd->add_option("--out", cfg.out, "output file (default: stdout)");
  cmd->add_flag("--quiet", cfg.quiet, "suppress the summary line");
}

DelaunayInstance build_family(const std::string& family, std::size_t dim) {
  if (family == "pn") return construct_pn(dim);
  if (family == "half-cube") return construct_half_cube(dim);
  if (family == "cross-polytope") return construct_cross_polytope(dim);
  if (family == "segment") {
    if (dim != 1) throw UsageError("the segment family only exists in dimension 1");
    return construct_segment();
  }
  throw UsageError("unknown family '" + family + "' (expected pn, half-cube, cross-polytope or segment)");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

DelaunayInstance load_input(const RunConfig& cfg) {
  const bool from_family = !cfg.family.empty() || cfg.dim.has_value();
  const bool from_file = !cfg.in.empty();
  if (from_family == from_file) throw UsageError("give exactly one input: --family with --dim, or --in FILE");
  if (from_file) return instance_from_json(parse_json(read_file(cfg.in)));
  if (cfg.family.empty() || !cfg.dim) throw UsageError("--family and --dim must be given together");
  return build_family(cfg.family, *cfg.dim);
}

EnumerationOptions enumeration_options() {
  EnumerationOptions opts;
  if (const char* cap = std::getenv("DELFORGE_MAX_ENUM")) {
    const std::string text(cap);
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char c) { return std::isdigit(c); })) {
      throw UsageError("DELFORGE_MAX_ENUM must be a non-negative integer");
    }
    try {
      opts.max_nodes = std::stoull(text);
    } catch (const std::exception&) {
      throw UsageError("DELFORGE_MAX_ENUM is out of range");
    }
  }
  return opts;
}

class Emitter {
 public:
  Emitter(const RunConfig& cfg, std::ostream& out, std::ostream& err) : cfg_(cfg), out_(out), err_(err) {}

  void write(const std::string& text) {
    if (cfg_.out.empty() || cfg_.out == "-") {
      out_ << text;
      return;
    }
    std::ofstream f(cfg_.out, std::ios::binary);
    if (!f) throw UsageError("cannot write '" + cfg_.out + "'");
    f << text;
  }

  std::ostream& summary() { return (cfg_.out.empty() || cfg_.out == "-") ? err_ : out_; }

  void line(const std::string& text) {
    if (!cfg_.quiet) summary() << text << '\n';
  }

 private:
  const RunConfig& cfg_;
  std::ostream& out_;
  std::ostream& err_;
};

int cmd_construct(const RunConfig& cfg, Emitter& emit) {
  if (!cfg.in.empty()) throw UsageError("construct takes --family and --dim");
  if (cfg.family.empty() || !cfg.dim) throw UsageError("construct needs --family and --dim");
  const DelaunayInstance inst = build_family(cfg.family, *cfg.dim);
  emit.write(dump_json(to_json(inst)));
  emit.line(inst.label + ": " + std::to_string(inst.vertices.size()) + " vertices");
  return kVerified;
}

int cmd_verify_delaunay(const RunConfig& cfg, Emitter& emit) {
  const DelaunayInstance inst = load_input(cfg);
  const SphereCertificate cert = verify_delaunay(inst, enumeration_options());
  emit.write(dump_json(to_json(cert)));
  std::string msg = inst.label + ": " + to_string(cert.status) + ", center " + to_string(cert.center) +
                    ", r^2 = " + cert.radius_sq.to_string() + ", " + std::to_string(cert.on_sphere_count) +
                    " on-sphere points";
  if (cert.witness) msg += ", witness " + to_string(*cert.witness) + " (" + to_string(cert.reason) + ")";
  emit.line(msg);
  return cert.verified() ? kVerified : kRefuted;
}

int cmd_certify_extreme(const RunConfig& cfg, Emitter& emit) {
  const DelaunayInstance inst = load_input(cfg);
  const ExtremalityCertificate cert = certify_extreme(inst, enumeration_options());
  emit.write(dump_json(to_json(cert)));
  emit.line(inst.label + ": kernel_dim " + std::to_string(cert.kernel_dim) +
            (cert.is_extreme ? ", extreme" : ", not extreme"));
  return cert.is_extreme ? kVerified : kRefuted;
}

int cmd_symmetry(const RunConfig& cfg, Emitter& emit) {
  const DelaunayInstance inst = load_input(cfg);
  const SymmetryReport report = automorphisms(inst);
  Json j = to_json(report);
  int code = kVerified;
  if (cfg.family == "pn" && cfg.dim) {
    const PnExpectations e = pn_expectations(*cfg.dim);
    const bool match = report.group_order == e.group_order && orbit_sizes(report) == e.orbit_sizes;
    j["expected_group_order"] = e.group_order.get_str();
    j["expected_orbit_sizes"] = e.orbit_sizes;
    j["matches_expected"] = match;
    if (!match) code = kRefuted;
  }
  emit.write(dump_json(j));
  emit.line(inst.label + ": group order " + report.group_order.get_str() + ", " +
            std::to_string(report.orbit_count) + " orbit(s)");
  return code;
}

int cmd_report(const RunConfig& cfg, Emitter& emit) {
  if (!cfg.in.empty()) throw UsageError("report takes --dim");
  if (!cfg.family.empty() && cfg.family != "pn") throw UsageError("report only covers --family pn");
  if (!cfg.dim) throw UsageError("report needs --dim");
  const PnReport r = run_pn_report(*cfg.dim, enumeration_options());
  emit.write(dump_json(to_json(r)));
  if (!cfg.quiet) emit.summary() << to_text(r);
  if (r.all_passed()) return kVerified;
  return r.error ? kError : kRefuted;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"delforge: exact certificates for Delaunay polytopes in lattices"};
  app.require_subcommand(1);
  RunConfig cfg;
  auto* construct = app.add_subcommand("construct", "write an instance JSON file");
  auto* verify = app.add_subcommand("verify-delaunay", "empty-sphere certificate");
  auto* extreme = app.add_subcommand("certify-extreme", "extremality certificate");
  auto* symmetry = app.add_subcommand("symmetry", "isometry group and vertex orbits");
  auto* report = app.add_subcommand("report", "full pipeline for P_n");
  add_common_options(construct, cfg, false);
  add_common_options(verify, cfg, true);
  add_common_options(extreme, cfg, true);
  add_common_options(symmetry, cfg, true);
  add_common_options(report, cfg, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kVerified;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }

  Emitter emit(cfg, out, err);
  try {
    if (construct->parsed()) return cmd_construct(cfg, emit);
    if (verify->parsed()) return cmd_verify_delaunay(cfg, emit);
    if (extreme->parsed()) return cmd_certify_extreme(cfg, emit);
    if (symmetry->parsed()) return cmd_symmetry(cfg, emit);
    if (report->parsed()) return cmd_report(cfg, emit);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}

}  // namespace delforge
