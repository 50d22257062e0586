#include "twistor4/catalog.hpp"

#include "twistor4/twistor.hpp"

namespace twistor4 {

PointOptions AnalysisConfig::point_options() const {
  PointOptions o;
  o.tol = tol;
  o.isothermal_tol = isothermal_tol;
  o.seed_tol = seed_tol;
  o.seed_branch = seed_branch;
  o.fd_step = fd_step;
  o.richardson = richardson;
  return o;
}

SurfaceDef CatalogEntry::surface() const { return parse_surface(text, name, domain); }

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"plane", "u, v, 0, 0", {-1, 1, -1, 1}, {true, true, true, "both"}, "coordinate plane span{e1, e2}"},
      {"holo_square", "u, v, u^2 - v^2, 2*u*v", {-1, 1, -1, 1}, {true, true, true, "+"},
       "graph of the holomorphic map w -> w^2"},
      {"holo_cube", "u, v, u^3 - 3*u*v^2, 3*u^2*v - v^3", {-1, 1, -1, 1}, {true, true, true, "+"},
       "graph of the holomorphic map w -> w^3"},
      {"clifford_torus", "cos(u)/sqrt(2), sin(u)/sqrt(2), cos(v)/sqrt(2), sin(v)/sqrt(2)",
       {-0.5, 0.5, -0.5, 0.5}, {true, false, false, "none"}, "flat torus in S^3, |H| = 1"},
      {"catenoid_E3", "cosh(v)*cos(u), cosh(v)*sin(u), v, 0", {-1, 1, -1, 1}, {true, true, false, "none"},
       "catenoid in E^3, minimal but not isotropic"},
      {"round_sphere", "2*u/(u^2 + v^2 + 1), 2*v/(u^2 + v^2 + 1), (u^2 + v^2 - 1)/(u^2 + v^2 + 1), 0",
       {-0.5, 0.5, -0.5, 0.5}, {true, false, false, "none"}, "unit sphere in E^3 by inverse stereographic projection"},
      {"nonisothermal_graph", "u, v, u^2, v^2", {-1, 1, -1, 1}, {false, false, false, "none"},
       "graph with g11 != g22 off the diagonals |u| = |v|"},
  };
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog()) {
    if (e.name == name) return e;
  }
  throw InvalidArgument("unknown catalog surface '" + name + "'");
}

SurfaceFlags pipeline_flags(const SurfaceDef& s, const GridSpec& spec, const AnalysisConfig& cfg) {
  const FieldGrid g = build_field_grid(s, spec, cfg.point_options());
  SurfaceFlags f;
  f.isothermal = g.all_isothermal();
  f.minimal = g.sup_mean_curvature() <= cfg.minimal_tol;
  if (f.isothermal && f.minimal) {
    const IsotropyReport r = isotropy_report(g, cfg.isotropy_tol, cfg.minimal_tol);
    f.isotropic = r.isotropic;
    f.constant_lift = r.constant_lift;
  } else if (f.isothermal) {
    const LiftGrid lifts = lift_grid(g);
    const double scale = spec.domain.diameter();
    const bool plus = sup_gradient(lifts.plus) * scale <= cfg.isotropy_tol;
    const bool minus = sup_gradient(lifts.minus) * scale <= cfg.isotropy_tol;
    f.constant_lift = plus && minus ? "both" : plus ? "+" : minus ? "-" : "none";
  }
  return f;
}

}  // namespace twistor4
