#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "liecurv/cartan_structures.hpp"
#include "liecurv/connection_curvature.hpp"
#include "liecurv/geodesics_subgroups.hpp"
#include "liecurv/matrix_json.hpp"
#include "verify.hpp"

namespace liecurv::cli {

namespace {

using nlohmann::json;

struct Config {
  std::string structure;
  std::uint64_t seed = 42;
  int trials = 500;
  std::optional<double> tol;
  std::string u;
  std::string v;
  double t_max = 0.0;
  int steps = 0;
  std::string group;
  std::string out;
  std::string format = "json";
  std::string sample_case = "all";
  bool experimental = false;
};

// Thrown for problems that map to exit code 2 but are not ParseErrors.
struct UsageError : Error {
  using Error::Error;
};

std::string csv_number(double x) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", x);
  return buffer;
}

json matrix_json(const MatrixElement& m) { return json::parse(to_json_string(m)); }

MatrixElement load_matrix(const std::string& source, const char* flag) {
  if (source.empty()) throw UsageError(std::string(flag) + " is required");
  const auto first = source.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && source[first] == '{') return parse_matrix_json(source);
  std::ifstream in(source);
  if (!in) throw ParseError(std::string(flag) + ": cannot open \"" + source + "\" and it is not inline JSON");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_matrix_json(text.str());
}

CartanStructure structure_for(const Config& cfg, const MatrixElement& u) {
  if (cfg.structure.empty()) return u.is_real() ? gl_real(u.n()) : gl_complex(u.n());
  CartanStructure s = parse_structure(cfg.structure);
  try {
    s.require_member(u);
  } catch (const DimensionMismatch& e) {
    throw UsageError("matrix does not belong to " + s.name() + ": " + e.what());
  }
  return s;
}

// section --------------------------------------------------------------------------

int cmd_section(const Config& cfg, std::ostream& out) {
  const MatrixElement u = load_matrix(cfg.u, "--u");
  const MatrixElement v = load_matrix(cfg.v, "--v");
  const CartanStructure s = structure_for(cfg, u);
  try {
    s.require_member(v);
  } catch (const DimensionMismatch& e) {
    throw UsageError(std::string("--v: ") + e.what());
  }
  const SectionReport r = sectional(s, u, v);

  std::optional<SpecialQuartic> special;
  try {
    special = quartic_special(s, u, v);
  } catch (const NotPureType&) {
  }
  std::optional<double> commuting;
  try {
    commuting = quartic_commuting(s, u, v);
  } catch (const NotCommuting&) {
  }
  const std::string tag =
      commuting ? "commuting" : special ? std::string(to_string(special->which)) : std::string("general");

  if (cfg.format == "csv") {
    out << "quartic,area_sq,sectional,term_pp,term_mixed,term_cross,case\n"
        << csv_number(r.quartic) << ',' << csv_number(r.area_sq) << ',' << csv_number(r.sectional) << ','
        << csv_number(r.term_pp) << ',' << csv_number(r.term_mixed) << ',' << csv_number(r.term_cross) << ','
        << tag << '\n';
    return kExitOk;
  }
  json doc;
  doc["structure"] = s.name();
  doc["quartic"] = r.quartic;
  doc["area_sq"] = r.area_sq;
  doc["sectional"] = r.sectional;
  doc["terms"] = {{"pp", r.term_pp}, {"mixed", r.term_mixed}, {"cross", r.term_cross}};
  doc["bracket_norm"] = bracket(u, v).norm();
  doc["case"] = tag;
  if (special) doc["special"] = {{"case", std::string(to_string(special->which))}, {"quartic", special->value}};
  if (commuting) doc["commuting_quartic"] = *commuting;
  out << doc.dump(2) << '\n';
  return kExitOk;
}

// verify ---------------------------------------------------------------------------

int cmd_verify(const Config& cfg, std::ostream& out, std::ostream& err) {
  VerifyOptions options;
  options.structure = cfg.structure;
  options.seed = Seed{cfg.seed};
  options.trials = cfg.trials;
  options.tol = cfg.tol;
  const VerifyReport report = run_verify(options);

  if (cfg.format == "csv") {
    out << "suite,max_error,tolerance,bound,samples,passed\n";
    for (const SuiteResult& s : report.suites) {
      out << s.name << ',' << csv_number(s.max_error) << ',' << csv_number(s.tolerance) << ','
          << (s.bound == Bound::kAtMost ? "at_most" : "at_least") << ',' << s.samples << ','
          << (s.passed ? "true" : "false") << '\n';
    }
  } else {
    json doc;
    doc["structure"] = report.structure;
    doc["seed"] = report.seed.value;
    doc["trials"] = report.trials;
    doc["passed"] = report.all_passed();
    doc["suites"] = json::array();
    for (const SuiteResult& s : report.suites) {
      doc["suites"].push_back({{"name", s.name},
                               {"max_error", s.max_error},
                               {"tolerance", s.tolerance},
                               {"bound", s.bound == Bound::kAtMost ? "at_most" : "at_least"},
                               {"samples", s.samples},
                               {"passed", s.passed},
                               {"detail", s.detail}});
    }
    out << doc.dump(2) << '\n';
  }
  for (const SuiteResult& s : report.suites) {
    if (!s.passed) err << "verify: suite " << s.name << " failed (max_error " << csv_number(s.max_error)
                       << ", tolerance " << csv_number(s.tolerance) << ")\n";
  }
  return report.all_passed() ? kExitOk : kExitVerificationFailure;
}

// sample ---------------------------------------------------------------------------

enum class SampleKind { kPP, kKK, kPK, kGeneral };

const char* tag_of(SampleKind k) {
  switch (k) {
    case SampleKind::kPP: return "p*p";
    case SampleKind::kKK: return "k*k";
    case SampleKind::kPK: return "p*k";
    case SampleKind::kGeneral: return "g*g";
  }
  return "";
}

std::vector<SampleKind> sample_kinds(const CartanStructure& s, const std::string& which) {
  const int n = s.n();
  const bool real = s.field() == Field::kReal;
  const int dim_p = real ? n * (n + 1) / 2 : n * n;
  const int dim_k = real ? n * (n - 1) / 2 : n * n;
  const auto available = [&](SampleKind k) {
    switch (k) {
      case SampleKind::kPP: return dim_p >= 2;
      case SampleKind::kKK: return dim_k >= 2;
      case SampleKind::kPK: return dim_p >= 1 && dim_k >= 1;
      case SampleKind::kGeneral: return s.real_dimension() >= 2;
    }
    return false;
  };
  std::vector<SampleKind> kinds;
  if (which == "all") {
    for (SampleKind k : {SampleKind::kPP, SampleKind::kKK, SampleKind::kPK, SampleKind::kGeneral}) {
      if (available(k)) kinds.push_back(k);
    }
    if (kinds.empty()) throw UsageError(s.name() + " has no 2-planes to sample");
    return kinds;
  }
  const SampleKind k = which == "pp" ? SampleKind::kPP
                       : which == "kk" ? SampleKind::kKK
                       : which == "pk" ? SampleKind::kPK
                                       : SampleKind::kGeneral;
  if (!available(k)) throw UsageError(std::string(tag_of(k)) + " sections do not exist in " + s.name());
  return {k};
}

int cmd_sample(const Config& cfg, std::ostream& out) {
  const CartanStructure s = parse_structure(cfg.structure.empty() ? "gl:real:3" : cfg.structure);
  const std::vector<SampleKind> kinds = sample_kinds(s, cfg.sample_case);

  struct Row {
    int index;
    SampleKind kind;
    double quartic;
    double area_sq;
    double sectional;
  };
  std::vector<Row> rows;
  rows.reserve(static_cast<std::size_t>(cfg.trials));
  for (int i = 0; i < cfg.trials; ++i) {
    const SampleKind kind = kinds[static_cast<std::size_t>(i) % kinds.size()];
    SampleStream stream(derive_seed(Seed{cfg.seed}, static_cast<std::uint64_t>(i)));
    MatrixElement u;
    MatrixElement v;
    switch (kind) {
      case SampleKind::kPP: u = random_in_p(s, stream); v = random_in_p(s, stream); break;
      case SampleKind::kKK: u = random_in_k(s, stream); v = random_in_k(s, stream); break;
      case SampleKind::kPK: u = random_in_p(s, stream); v = random_in_k(s, stream); break;
      case SampleKind::kGeneral: u = random_in_algebra(s, stream); v = random_in_algebra(s, stream); break;
    }
    Row row{i, kind, quartic(s, u, v), 0.0, std::nan("")};
    try {
      const SectionReport r = sectional(s, u, v);
      row.area_sq = r.area_sq;
      row.sectional = r.sectional;
    } catch (const DegenerateSection&) {
      row.area_sq = s.inner(u, u) * s.inner(v, v) - std::pow(s.inner(u, v), 2);
    }
    rows.push_back(row);
  }

  if (cfg.format == "json") {
    json doc;
    doc["structure"] = s.name();
    doc["seed"] = cfg.seed;
    doc["rows"] = json::array();
    for (const Row& r : rows) {
      json entry = {{"seed_index", r.index}, {"case_tag", tag_of(r.kind)}, {"quartic", r.quartic},
                    {"area_sq", r.area_sq}};
      entry["sectional"] = std::isnan(r.sectional) ? json(nullptr) : json(r.sectional);
      doc["rows"].push_back(std::move(entry));
    }
    out << doc.dump(2) << '\n';
    return kExitOk;
  }
  out << "seed_index,case_tag,quartic,area_sq,sectional\n";
  for (const Row& r : rows) {
    out << r.index << ',' << tag_of(r.kind) << ',' << csv_number(r.quartic) << ',' << csv_number(r.area_sq)
        << ',' << csv_number(r.sectional) << '\n';
  }
  return kExitOk;
}

// geodesic -------------------------------------------------------------------------

int cmd_geodesic(const Config& cfg, std::ostream& out, std::ostream& err) {
  const MatrixElement u = load_matrix(cfg.u, "--u");
  const CartanStructure s = structure_for(cfg, u);
  const bool use_experimental = cfg.experimental || s.field() != Field::kReal;
  if (s.field() != Field::kReal && !cfg.experimental) {
    throw UsageError("the closed-form geodesic is proven for gl(n,R) only; pass --experimental for " + s.name());
  }
  const double t_max = cfg.t_max > 0.0 ? cfg.t_max : 1.0;
  const int steps = cfg.steps > 0 ? cfg.steps : 11;
  if (steps < 2) throw UsageError("--steps must be >= 2");
  const std::vector<GeodesicSample> samples =
      use_experimental ? experimental::trace_geodesic(s, u, t_max, steps) : trace_geodesic(s, u, t_max, steps);

  const double tol = cfg.tol.value_or(1e-6);
  double max_residual = 0.0;
  for (const auto& sample : samples) max_residual = std::max(max_residual, sample.residual);
  // The finite-difference error grows with the speed of the curve.
  const double scale = 1.0 + u.squared_norm();
  const bool passed = max_residual <= tol * scale;

  if (cfg.format == "csv") {
    out << "t,residual,abs_det_gamma,gamma_norm,omega_norm\n";
    for (const auto& sample : samples) {
      out << csv_number(sample.t) << ',' << csv_number(sample.residual) << ','
          << csv_number(std::abs(determinant(sample.gamma))) << ',' << csv_number(sample.gamma.norm()) << ','
          << csv_number(sample.omega.norm()) << '\n';
    }
  } else {
    json doc;
    doc["structure"] = s.name();
    doc["formula"] = use_experimental ? "experimental" : "gl_real";
    doc["t_max"] = t_max;
    doc["steps"] = steps;
    doc["tolerance"] = tol * scale;
    doc["max_residual"] = max_residual;
    doc["passed"] = passed;
    doc["samples"] = json::array();
    for (const auto& sample : samples) {
      doc["samples"].push_back({{"t", sample.t},
                                {"residual", sample.residual},
                                {"gamma", matrix_json(sample.gamma)},
                                {"omega", matrix_json(sample.omega)}});
    }
    out << doc.dump(2) << '\n';
  }
  if (!passed) {
    err << "geodesic: max residual " << csv_number(max_residual) << " exceeds " << csv_number(tol * scale) << '\n';
    return kExitVerificationFailure;
  }
  return kExitOk;
}

// subgroup -------------------------------------------------------------------------

int cmd_subgroup(const Config& cfg, std::ostream& out) {
  if (cfg.group.empty()) throw UsageError("--group is required");
  const SubgroupSpec spec = parse_subgroup(cfg.group);
  const MatrixElement u = load_matrix(cfg.u, "--u");
  if (!u.is_real() || u.n() != spec.n) {
    throw UsageError("--u must be a real " + std::to_string(spec.n) + "x" + std::to_string(spec.n) +
                     " matrix for " + spec.name);
  }
  const double t_max = cfg.t_max > 0.0 ? cfg.t_max : 2.0;
  const int steps = cfg.steps > 0 ? cfg.steps : kDefaultGridPoints;
  if (steps < 2) throw UsageError("--steps must be >= 2");
  const TotallyGeodesicReport r = totally_geodesic_check(spec, u, t_max, steps);

  if (cfg.format == "csv") {
    out << "group,max_defect,t_at_max,threshold,min_abs_det,passed\n"
        << r.group << ',' << csv_number(r.max_defect) << ',' << csv_number(r.t_at_max) << ','
        << csv_number(r.threshold) << ',' << csv_number(r.min_abs_det) << ',' << (r.passed ? "true" : "false")
        << '\n';
  } else {
    json doc;
    doc["group"] = r.group;
    doc["transpose_invariant"] = spec.transpose_invariant;
    doc["t_max"] = t_max;
    doc["steps"] = steps;
    doc["max_defect"] = r.max_defect;
    doc["t_at_max"] = r.t_at_max;
    doc["threshold"] = r.threshold;
    doc["min_abs_det"] = r.min_abs_det;
    doc["passed"] = r.passed;
    out << doc.dump(2) << '\n';
  }
  return r.passed ? kExitOk : kExitVerificationFailure;
}

// wiring ---------------------------------------------------------------------------

void add_output_options(CLI::App* cmd, Config& cfg, const std::string& default_format) {
  cmd->add_option("--out", cfg.out, "Write the report to this path instead of stdout");
  cmd->add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->default_str(default_format);
}

void add_structure_option(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--structure", cfg.structure, "gl:real:<n> or gl:complex:<n>");
}

void add_tol_option(CLI::App* cmd, Config& cfg, const char* help) {
  cmd->add_option_function<double>("--tol", [&cfg](const double& x) { cfg.tol = x; }, help)
      ->check(CLI::NonNegativeNumber);
}

int dispatch(const std::string& command, const Config& cfg, std::ostream& out, std::ostream& err) {
  if (command == "section") return cmd_section(cfg, out);
  if (command == "verify") return cmd_verify(cfg, out, err);
  if (command == "sample") return cmd_sample(cfg, out);
  if (command == "geodesic") return cmd_geodesic(cfg, out, err);
  return cmd_subgroup(cfg, out);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Curvature of left-invariant metrics on matrix Lie groups", "liecurv"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every command");
  Config cfg;

  CLI::App* section = app.add_subcommand("section", "Sectional curvature of span{u, v}");
  add_structure_option(section, cfg);
  section->add_option("--u", cfg.u, "Matrix JSON, inline or a file path")->required();
  section->add_option("--v", cfg.v, "Matrix JSON, inline or a file path")->required();
  add_output_options(section, cfg, "json");

  CLI::App* verify = app.add_subcommand("verify", "Run the verification suites and emit a certificate");
  add_structure_option(verify, cfg);
  verify->add_option("--seed", cfg.seed, "Base seed")->capture_default_str();
  verify->add_option("--trials", cfg.trials, "Samples per suite")->check(CLI::Range(1, 100000000))->capture_default_str();
  add_tol_option(verify, cfg, "Replace every suite tolerance");
  add_output_options(verify, cfg, "json");

  CLI::App* sample = app.add_subcommand("sample", "Random sections, stratified by type");
  add_structure_option(sample, cfg);
  sample->add_option("--seed", cfg.seed, "Base seed")->capture_default_str();
  sample->add_option("--trials", cfg.trials, "Number of rows")->check(CLI::Range(1, 100000000))->capture_default_str();
  sample->add_option("--case", cfg.sample_case, "Section type")
      ->check(CLI::IsMember({"all", "pp", "kk", "pk", "general"}))
      ->capture_default_str();
  add_output_options(sample, cfg, "csv");

  CLI::App* geodesic = app.add_subcommand("geodesic", "Trace the geodesic tangent to u and its residual");
  add_structure_option(geodesic, cfg);
  geodesic->add_option("--u", cfg.u, "Matrix JSON, inline or a file path")->required();
  geodesic->add_option("--t-max", cfg.t_max, "End time (default 1)")->check(CLI::PositiveNumber);
  geodesic->add_option("--steps", cfg.steps, "Grid points (default 11)")->check(CLI::Range(2, 1000000));
  geodesic->add_flag("--experimental", cfg.experimental, "Use the candidate formula for non-gl(n,R) structures");
  add_tol_option(geodesic, cfg, "Residual tolerance, scaled by 1 + |u|^2 (default 1e-6)");
  add_output_options(geodesic, cfg, "json");

  CLI::App* subgroup = app.add_subcommand("subgroup", "Check that a subgroup contains its tangent geodesic");
  subgroup->add_option("--group", cfg.group, "so:<n>, sl:<n>, opq:<p>,<q> or ut:<n>")->required();
  subgroup->add_option("--u", cfg.u, "Tangent, matrix JSON inline or a file path")->required();
  subgroup->add_option("--t-max", cfg.t_max, "End time (default 2)")->check(CLI::PositiveNumber);
  subgroup->add_option("--steps", cfg.steps, "Grid points (default 64)")->check(CLI::Range(2, 1000000));
  add_output_options(subgroup, cfg, "json");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    CLI::App* chosen = app.get_subcommands().front();
    // sample defaults to CSV, everything else to JSON
    if (chosen->count("--format") == 0) cfg.format = chosen == sample ? "csv" : "json";

    std::ofstream file;
    std::ostream* sink = &out;
    if (!cfg.out.empty()) {
      file.open(cfg.out);
      if (!file) {
        err << "liecurv: cannot open --out path \"" << cfg.out << "\"\n";
        return kExitUsage;
      }
      sink = &file;
    }
    return dispatch(chosen->get_name(), cfg, *sink, err);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  } catch (const DegenerateSection& e) {
    err << "liecurv: degenerate section: " << e.what() << '\n';
    return kExitDegenerateSection;
  } catch (const TangentNotInAlgebra& e) {
    err << "liecurv: " << e.what() << '\n';
    return kExitTangentViolation;
  } catch (const Error& e) {
    // ParseError, DimensionMismatch, NonFiniteEntry, UsageError and friends
    err << "liecurv: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace liecurv::cli
