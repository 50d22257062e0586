#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "twistor4/report.hpp"

namespace twistor4::cli {

namespace {

using nlohmann::json;

struct SurfaceArgs {
  std::string name;
  std::string expr;
  std::string json_file;
};

struct GridArgs {
  std::vector<double> domain;
  int n = 41;
  double h = 0;
};

struct ConfigArgs {
  double tol = kDefaultTol;
  double isothermal_tol = 1e-8;
  double minimal_tol = 1e-8;
  double isotropy_tol = 1e-6;
  double seed_tol = 1e-2;
  int seed_normal = -1;
  double fd_step = 0;
  bool richardson = false;

  AnalysisConfig config() const {
    AnalysisConfig c;
    c.tol = tol;
    c.isothermal_tol = isothermal_tol;
    c.minimal_tol = minimal_tol;
    c.isotropy_tol = isotropy_tol;
    c.seed_tol = seed_tol;
    if (seed_normal >= 0) c.seed_branch = seed_normal;
    c.fd_step = fd_step;
    c.richardson = richardson;
    return c;
  }
};

void add_surface_options(CLI::App* app, SurfaceArgs& s) {
  auto* name = app->add_option("--surface", s.name, "Catalog surface name");
  auto* expr = app->add_option("--expr", s.expr, "Surface as \"f1, f2, f3, f4\" in u and v");
  auto* file = app->add_option("--json-file", s.json_file, "Surface definition JSON file");
  name->excludes(expr)->excludes(file);
  expr->excludes(file);
}

void add_grid_options(CLI::App* app, GridArgs& g) {
  app->add_option("--domain", g.domain, "u0 u1 v0 v1")->expected(4);
  auto* n = app->add_option("--n", g.n, "Points per side");
  auto* h = app->add_option("--h", g.h, "Grid spacing in u (sets the point count)")->check(CLI::PositiveNumber);
  n->excludes(h);
}

void add_config_options(CLI::App* app, ConfigArgs& c) {
  app->add_option("--tol", c.tol, "Algebraic tolerance");
  app->add_option("--isothermal-tol", c.isothermal_tol, "Tolerance for g11 = g22, g12 = 0");
  app->add_option("--minimal-tol", c.minimal_tol, "Tolerance for H = 0");
  app->add_option("--isotropy-tol", c.isotropy_tol, "Tolerance for the isotropy conditions");
  app->add_option("--seed-tol", c.seed_tol, "Minimum normal projection of a frame seed");
  app->add_option("--seed-normal", c.seed_normal, "Pin the normal-frame seed branch (0-5)")
      ->check(CLI::Range(0, static_cast<int>(kSeedBranches.size()) - 1));
  app->add_option("--fd-step", c.fd_step, "Step for differentiating the normal frame");
  app->add_flag("--richardson", c.richardson, "Richardson-extrapolate the normal connection");
}

SurfaceDef load_surface(const SurfaceArgs& s) {
  if (!s.name.empty()) return catalog_entry(s.name).surface();
  if (!s.expr.empty()) return parse_surface(s.expr, "expr");
  if (!s.json_file.empty()) {
    std::ifstream in(s.json_file);
    if (!in) throw InvalidArgument("cannot read '" + s.json_file + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_surface_json(buf.str());
  }
  throw InvalidArgument("one of --surface, --expr or --json-file is required");
}

GridSpec grid_spec(const SurfaceDef& s, const GridArgs& g) {
  GridSpec spec{s.domain, g.n};
  if (!g.domain.empty()) spec.domain = {g.domain[0], g.domain[1], g.domain[2], g.domain[3]};
  if (spec.domain.u1 <= spec.domain.u0 || spec.domain.v1 <= spec.domain.v0) {
    throw InvalidArgument("domain must satisfy u0 < u1 and v0 < v1");
  }
  if (g.h > 0) spec.n = static_cast<int>(std::lround((spec.domain.u1 - spec.domain.u0) / g.h)) + 1;
  spec.validate();
  return spec;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_catalog(bool as_json, bool check, std::ostream& out) {
  const AnalysisConfig cfg;
  json entries = json::array();
  if (!as_json) {
    out << std::left << std::setw(22) << "name" << std::setw(12) << "isothermal" << std::setw(9) << "minimal"
        << std::setw(11) << "isotropic" << std::setw(15) << "constant_lift";
    if (check) out << std::setw(8) << "check";
    out << "definition\n";
  }
  for (const auto& e : catalog()) {
    std::optional<SurfaceFlags> computed;
    if (check) computed = pipeline_flags(e.surface(), GridSpec{e.domain, 41}, cfg);
    if (as_json) {
      json j = {{"name", e.name},
                {"definition", e.text},
                {"domain", {e.domain.u0, e.domain.u1, e.domain.v0, e.domain.v1}},
                {"isothermal", e.expected.isothermal},
                {"minimal", e.expected.minimal},
                {"isotropic", e.expected.isotropic},
                {"constant_lift", e.expected.constant_lift},
                {"note", e.note}};
      if (computed) j["check"] = *computed == e.expected;
      entries.push_back(j);
    } else {
      out << std::setw(22) << e.name << std::setw(12) << yes_no(e.expected.isothermal) << std::setw(9)
          << yes_no(e.expected.minimal) << std::setw(11) << yes_no(e.expected.isotropic) << std::setw(15)
          << e.expected.constant_lift;
      if (computed) out << std::setw(8) << (*computed == e.expected ? "ok" : "MISMATCH");
      out << e.text << '\n';
    }
  }
  if (as_json) out << entries.dump(2) << '\n';
  return kSuccess;
}

int cmd_analyze(const SurfaceArgs& sa, const std::vector<double>& at, const ConfigArgs& ca, std::ostream& out) {
  const SurfaceDef s = load_surface(sa);
  const AnalysisConfig cfg = ca.config();
  if (!s.domain.contains(at[0], at[1])) throw InvalidArgument("point lies outside the surface domain");
  PointOptions opts = cfg.point_options();
  if (opts.fd_step <= 0) opts.fd_step = 1e-4 * s.domain.diameter();
  AnalysisConfig shown = cfg;
  shown.fd_step = opts.fd_step;
  const SurfacePointData p = analyze_point(s, at[0], at[1], opts);
  out << point_report(s, p, shown).dump(2) << '\n';
  return kSuccess;
}

int cmd_grid(const SurfaceArgs& sa, const GridArgs& ga, const ConfigArgs& ca, const std::string& path,
             const std::string& format, std::ostream& out) {
  const SurfaceDef s = load_surface(sa);
  const GridReport r = build_grid_report(s, grid_spec(s, ga), ca.config());
  std::ofstream file;
  std::ostream* os = &out;
  if (!path.empty() && path != "-") {
    file.open(path);
    if (!file) throw InvalidArgument("cannot write '" + path + "'");
    os = &file;
  }
  if (format == "csv") {
    write_grid_csv(*os, r);
  } else {
    write_grid_jsonl(*os, r);
  }
  if (os != &out) out << summary_json(r.summary).dump(2) << '\n';
  return kSuccess;
}

json run_header(const SurfaceDef& s, const AnalysisConfig& cfg, const FieldGrid& g) {
  AnalysisConfig shown = cfg;
  shown.fd_step = g.fd_step;
  const auto [a, b] = kSeedBranches[g.seed_branch];
  return {{"tool", kToolName},
          {"version", kToolVersion},
          {"surface", surface_json(s)},
          {"config", config_json(shown)},
          {"n", g.spec().n},
          {"h", g.spec().hu()},
          {"seed_branch", {{"index", g.seed_branch}, {"seeds", {a, b}}}}};
}

int cmd_isotropy(const SurfaceArgs& sa, const GridArgs& ga, const ConfigArgs& ca, bool as_json, std::ostream& out) {
  const SurfaceDef s = load_surface(sa);
  const AnalysisConfig cfg = ca.config();
  const FieldGrid g = build_field_grid(s, grid_spec(s, ga), cfg.point_options());
  const IsotropyReport r = isotropy_report(g, cfg.isotropy_tol, cfg.minimal_tol);
  if (as_json) {
    json j = run_header(s, cfg, g);
    j["isotropy"] = isotropy_json(r);
    out << j.dump(2) << '\n';
    return kSuccess;
  }
  static const char* texts[5] = {"(b1)^2 + (b2)^2 = 0", "b-form relations (b)", "b-form relations (c)",
                                 "lambda^2(theta) independent of theta", "a twistor lift is constant"};
  out << s.name << " on " << g.spec().n << "x" << g.spec().n << " grid, tol " << format_double(r.tol) << '\n';
  for (int k = 0; k < 5; ++k) {
    const auto& c = r.conditions[k];
    out << "(" << c.label << ") " << std::left << std::setw(40) << texts[k] << std::setw(26)
        << format_double(c.residual) << (c.holds ? "true" : "false") << '\n';
  }
  out << "consensus: " << (!r.consensus ? "DISAGREE" : r.isotropic ? "ISOTROPIC" : "NON-ISOTROPIC");
  if (r.constant_lift != "none") out << ", constant lift F" << r.constant_lift;
  out << '\n';
  return r.consensus ? kSuccess : kNumericError;
}

int cmd_residuals(const SurfaceArgs& sa, const GridArgs& ga, const ConfigArgs& ca, bool as_json,
                  std::ostream& out) {
  const SurfaceDef s = load_surface(sa);
  const AnalysisConfig cfg = ca.config();
  const GridSpec spec = grid_spec(s, ga);
  const ResidualConvergence rc = residual_convergence(s, spec, cfg.point_options(), cfg.minimal_tol);
  if (as_json) {
    json j = {{"tool", kToolName},
              {"version", kToolVersion},
              {"surface", surface_json(s)},
              {"config", config_json(cfg)},
              {"convergence", convergence_json(rc)}};
    out << j.dump(2) << '\n';
    return kSuccess;
  }
  out << s.name << ": h = " << format_double(rc.coarse.hu()) << " (n = " << rc.coarse.n << "), h/2 (n = " << rc.fine.n
      << ")\n";
  out << std::left << std::setw(10) << "residual" << std::setw(26) << "at h" << std::setw(26) << "at h/2"
      << "order\n";
  for (int k = 0; k < StructureResiduals::kCount; ++k) {
    const double p = rc.order(k);
    out << std::setw(10) << StructureResiduals::name(k) << std::setw(26) << format_double(rc.at_h[k]) << std::setw(26)
        << format_double(rc.at_half_h[k]) << (std::isnan(p) ? std::string("exact") : format_double(p)) << '\n';
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Twistor lifts and Gauss maps of surfaces in E^4", "twistor4"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  bool as_json = false, check = false;
  SurfaceArgs sa;
  GridArgs ga;
  ConfigArgs ca;
  std::vector<double> at;
  std::string out_path, format = "json";

  auto* catalog_cmd = app.add_subcommand("catalog", "List built-in surfaces with their expected flags");
  catalog_cmd->add_flag("--json", as_json, "Emit JSON");
  catalog_cmd->add_flag("--check", check, "Recompute the flags on a 41x41 grid");

  auto* analyze_cmd = app.add_subcommand("analyze", "Pointwise geometry and twistor lifts as JSON");
  add_surface_options(analyze_cmd, sa);
  analyze_cmd->add_option("--at", at, "u v")->expected(2)->required();
  add_config_options(analyze_cmd, ca);

  auto* grid_cmd = app.add_subcommand("grid", "Per-point plotting rows and a residual summary");
  add_surface_options(grid_cmd, sa);
  add_grid_options(grid_cmd, ga);
  add_config_options(grid_cmd, ca);
  grid_cmd->add_option("--out", out_path, "Output file (default stdout)");
  grid_cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto* isotropy_cmd = app.add_subcommand("isotropy", "Five-way isotropy test for a minimal surface");
  add_surface_options(isotropy_cmd, sa);
  add_grid_options(isotropy_cmd, ga);
  add_config_options(isotropy_cmd, ca);
  isotropy_cmd->add_flag("--json", as_json, "Emit JSON");

  auto* residuals_cmd = app.add_subcommand("residuals", "Structure-equation residuals at h and h/2");
  add_surface_options(residuals_cmd, sa);
  add_grid_options(residuals_cmd, ga);
  add_config_options(residuals_cmd, ca);
  residuals_cmd->add_flag("--json", as_json, "Emit JSON");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::CallForVersion&) {
    out << kToolVersion << '\n';
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  try {
    if (*catalog_cmd) return cmd_catalog(as_json, check, out);
    if (*analyze_cmd) return cmd_analyze(sa, at, ca, out);
    if (*grid_cmd) return cmd_grid(sa, ga, ca, out_path, format, out);
    if (*isotropy_cmd) return cmd_isotropy(sa, ga, ca, as_json, out);
    if (*residuals_cmd) return cmd_residuals(sa, ga, ca, as_json, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const HypothesisError& e) {
    err << "hypothesis failed: " << e.what() << '\n';
    return kHypothesisError;
  } catch (const Error& e) {
    err << "numeric error: " << e.what() << '\n';
    return kNumericError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kNumericError;
  }
  return kSuccess;
}

}  // namespace twistor4::cli
