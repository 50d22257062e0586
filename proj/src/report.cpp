#include "twistor4/report.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

namespace twistor4 {

using nlohmann::json;

namespace {

json num(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json vec_json(const Vec4& v) { return {num(v[0]), num(v[1]), num(v[2]), num(v[3])}; }
json vec_json(const Vec3& v) { return {num(v[0]), num(v[1]), num(v[2])}; }

json complex_json(Complex z) { return {num(z.real()), num(z.imag())}; }

json mat_json(const Mat4& m) {
  json rows = json::array();
  for (int i = 0; i < 4; ++i) {
    json row = json::array();
    for (int j = 0; j < 4; ++j) row.push_back(num(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json mat_json(const Mat2& m) { return {{num(m(0, 0)), num(m(0, 1))}, {num(m(1, 0)), num(m(1, 1))}}; }

json chart_json(const ChartValue& g) {
  return {{"value", g.at_infinity ? json(nullptr) : complex_json(g.value)},
          {"at_infinity", g.at_infinity},
          {"secondary", complex_json(g.secondary)}};
}

json seed_json(int branch) {
  const auto [a, b] = kSeedBranches[branch];
  return {{"index", branch}, {"seeds", {a, b}}};
}

double json_num(const json& j) { return j.is_null() ? NAN : j.get<double>(); }

}  // namespace

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

json config_json(const AnalysisConfig& c) {
  return {{"tol", c.tol},
          {"isothermal_tol", c.isothermal_tol},
          {"minimal_tol", c.minimal_tol},
          {"isotropy_tol", c.isotropy_tol},
          {"seed_tol", c.seed_tol},
          {"seed_branch", c.seed_branch ? json(*c.seed_branch) : json(nullptr)},
          {"fd_step", c.fd_step},
          {"richardson", c.richardson}};
}

json surface_json(const SurfaceDef& s) { return json::parse(surface_to_json(s)); }

json point_report(const SurfaceDef& s, const SurfacePointData& p, const AnalysisConfig& cfg) {
  json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["surface"] = surface_json(s);
  j["config"] = config_json(cfg);
  j["u"] = p.u;
  j["v"] = p.v;
  j["F"] = vec_json(p.d.F);
  j["F_u"] = vec_json(p.d.Fu);
  j["F_v"] = vec_json(p.d.Fv);
  j["first_form"] = {{"g11", p.first.g11}, {"g12", p.first.g12}, {"g22", p.first.g22}};
  j["isothermal"] = p.isothermal;
  j["alpha"] = p.alpha ? num(*p.alpha) : json(nullptr);
  j["seed_branch"] = seed_json(p.seed_branch);
  j["frame"] = {{"t1", vec_json(p.frame.t1)},
                {"t2", vec_json(p.frame.t2)},
                {"n1", vec_json(p.frame.n1)},
                {"n2", vec_json(p.frame.n2)}};

  json b = json::object();
  for (int k = 0; k < 2; ++k) {
    for (int i = 0; i < 2; ++i) {
      for (int l = i; l < 2; ++l) {
        b["b" + std::to_string(k + 1) + std::to_string(i + 1) + std::to_string(l + 1)] = num(p.second(k, i, l));
      }
    }
  }
  j["second_form"] = b;
  j["shape_operators"] = {{"A1", mat_json(p.shape.A1)}, {"A2", mat_json(p.shape.A2)}};
  j["H"] = vec_json(p.H);
  j["H_norm"] = p.H.norm();

  j["fd_step"] = cfg.fd_step;
  if (p.connection) {
    j["normal_connection"] = {{"gamma1", num(p.connection->gamma1)}, {"gamma2", num(p.connection->gamma2)}};
  } else {
    j["normal_connection"] = nullptr;
  }
  if (p.beta_gamma) {
    j["beta1"] = complex_json(p.beta_gamma->beta1);
    j["beta2"] = complex_json(p.beta_gamma->beta2);
    j["gamma"] = complex_json(p.beta_gamma->gamma);
  } else {
    j["beta1"] = j["beta2"] = j["gamma"] = nullptr;
  }

  const LiftPoint lp = gauss_map(p);
  j["lift_plus"] = {{"matrix", mat_json(lp.plus.matrix())}, {"coords", vec_json(lp.plus.coords())}};
  j["lift_minus"] = {{"matrix", mat_json(lp.minus.matrix())}, {"coords", vec_json(lp.minus.coords())}};
  j["g_plus"] = chart_json(lp.gplus);
  j["g_minus"] = chart_json(lp.gminus);

  if (p.isothermal) {
    const PsiVector ps = psi(p.d);
    j["psi"] = {complex_json(ps[0]), complex_json(ps[1]), complex_json(ps[2]), complex_json(ps[3])};
    const auto r = isotropy_pointwise(p);
    j["isotropy_residuals"] = {{"a", r[0]}, {"b", r[1]}, {"c", r[2]}, {"d", r[3]}};
  } else {
    j["psi"] = nullptr;
    j["isotropy_residuals"] = nullptr;
  }
  return j;
}

const std::vector<std::string>& GridRow::columns() {
  static const std::vector<std::string> cols = {
      "u",        "v",        "g11",         "g12",      "g22",      "H_norm",      "cplus1",
      "cplus2",   "cplus3",   "cminus1",     "cminus2",  "cminus3",  "gplus_re",    "gplus_im",
      "gplus_pole", "gminus_re", "gminus_im", "gminus_pole", "res_a", "res_b", "res_c", "res_d"};
  return cols;
}

double GridRow::get(const std::string& column) const {
  const auto& cols = columns();
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (cols[k] == column) return values.at(k);
  }
  throw InvalidArgument("unknown grid column '" + column + "'");
}

GridReport build_grid_report(const SurfaceDef& s, const GridSpec& spec, const AnalysisConfig& cfg) {
  spec.validate();
  PointOptions opts = cfg.point_options();
  opts.with_connection = false;
  const FieldGrid g = build_field_grid(s, spec, opts);
  const LiftGrid lifts = lift_grid(g);

  GridReport r;
  r.surface = s;
  r.config = cfg;
  r.config.fd_step = g.fd_step;
  GridSummary& sm = r.summary;
  sm.spec = spec;
  sm.fd_step = g.fd_step;
  sm.seed_branch = g.seed_branch;
  sm.isothermal = g.all_isothermal();
  sm.sup_H = g.sup_mean_curvature();

  for (int j = 0; j < spec.n; ++j) {
    for (int i = 0; i < spec.n; ++i) {
      const SurfacePointData& p = g.points.at(i, j);
      const Vec3 cp = lifts.plus.at(i, j).block<3, 1>(1, 0);
      const Vec3 cm = lifts.minus.at(i, j).block<3, 1>(1, 0);
      const ChartValue& gp = lifts.gplus.at(i, j);
      const ChartValue& gm = lifts.gminus.at(i, j);
      sm.poles_plus += gp.at_infinity ? 1 : 0;
      sm.poles_minus += gm.at_infinity ? 1 : 0;
      std::array<double, 4> res{NAN, NAN, NAN, NAN};
      if (p.isothermal) res = isotropy_pointwise(p);
      GridRow row;
      row.values = {p.u,
                    p.v,
                    p.first.g11,
                    p.first.g12,
                    p.first.g22,
                    p.H.norm(),
                    cp[0],
                    cp[1],
                    cp[2],
                    cm[0],
                    cm[1],
                    cm[2],
                    gp.at_infinity ? NAN : gp.value.real(),
                    gp.at_infinity ? NAN : gp.value.imag(),
                    gp.at_infinity ? 1.0 : 0.0,
                    gm.at_infinity ? NAN : gm.value.real(),
                    gm.at_infinity ? NAN : gm.value.imag(),
                    gm.at_infinity ? 1.0 : 0.0,
                    res[0],
                    res[1],
                    res[2],
                    res[3]};
      r.rows.push_back(std::move(row));
    }
  }

  sm.grad_plus = sup_gradient(lifts.plus);
  sm.grad_minus = sup_gradient(lifts.minus);
  if (sm.isothermal) {
    if (sm.poles_plus == 0) sm.holo_gplus = holomorphicity_residual(lifts.gplus_field());
    if (sm.poles_minus == 0) sm.holo_gminus_conj = holomorphicity_residual(lifts.gminus_conj_field());
  }
  return r;
}

json summary_json(const GridSummary& s) {
  return {{"domain", {s.spec.domain.u0, s.spec.domain.u1, s.spec.domain.v0, s.spec.domain.v1}},
          {"n", s.spec.n},
          {"hu", s.spec.hu()},
          {"hv", s.spec.hv()},
          {"fd_step", s.fd_step},
          {"seed_branch", seed_json(s.seed_branch)},
          {"isothermal", s.isothermal},
          {"sup_H", num(s.sup_H)},
          {"sup_grad_plus", num(s.grad_plus)},
          {"sup_grad_minus", num(s.grad_minus)},
          {"holomorphicity_gplus", s.holo_gplus ? num(*s.holo_gplus) : json(nullptr)},
          {"holomorphicity_gminus_conj", s.holo_gminus_conj ? num(*s.holo_gminus_conj) : json(nullptr)},
          {"poles_plus", s.poles_plus},
          {"poles_minus", s.poles_minus}};
}

namespace {

json header_json(const GridReport& r) {
  return {{"tool", r.tool},
          {"version", r.version},
          {"surface", surface_json(r.surface)},
          {"config", config_json(r.config)},
          {"summary", summary_json(r.summary)},
          {"columns", GridRow::columns()}};
}

double parse_cell(const std::string& s) {
  if (s == "nan" || s.empty()) return NAN;
  if (s == "inf") return INFINITY;
  if (s == "-inf") return -INFINITY;
  std::size_t pos = 0;
  const double x = std::stod(s, &pos);
  if (pos != s.size()) throw InvalidArgument("malformed CSV cell '" + s + "'");
  return x;
}

}  // namespace

void write_grid_jsonl(std::ostream& os, const GridReport& r) {
  os << header_json(r).dump() << '\n';
  const auto& cols = GridRow::columns();
  for (const auto& row : r.rows) {
    json j = json::object();
    for (std::size_t k = 0; k < cols.size(); ++k) j[cols[k]] = num(row.values[k]);
    os << j.dump() << '\n';
  }
}

void write_grid_csv(std::ostream& os, const GridReport& r) {
  std::istringstream header(header_json(r).dump(2));
  for (std::string line; std::getline(header, line);) os << "# " << line << '\n';
  const auto& cols = GridRow::columns();
  for (std::size_t k = 0; k < cols.size(); ++k) os << (k ? "," : "") << cols[k];
  os << '\n';
  for (const auto& row : r.rows) {
    for (std::size_t k = 0; k < row.values.size(); ++k) os << (k ? "," : "") << format_double(row.values[k]);
    os << '\n';
  }
}

std::vector<GridRow> read_grid_csv(std::istream& is, json* header) {
  std::string meta, line;
  std::vector<std::string> names;
  std::vector<GridRow> rows;
  while (std::getline(is, line)) {
    if (line.rfind("# ", 0) == 0) {
      meta += line.substr(2) + '\n';
      continue;
    }
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
    if (names.empty()) {
      names = cells;
      if (names != GridRow::columns()) throw InvalidArgument("unexpected CSV columns");
      continue;
    }
    if (cells.size() != names.size()) throw InvalidArgument("CSV row has the wrong number of cells");
    GridRow row;
    for (const auto& c : cells) row.values.push_back(parse_cell(c));
    rows.push_back(std::move(row));
  }
  if (header) *header = meta.empty() ? json(nullptr) : json::parse(meta);
  return rows;
}

std::vector<GridRow> read_grid_jsonl(std::istream& is, json* header) {
  std::vector<GridRow> rows;
  bool first = true;
  const auto& cols = GridRow::columns();
  for (std::string line; std::getline(is, line);) {
    if (line.empty()) continue;
    const json j = json::parse(line);
    if (first) {
      first = false;
      if (header) *header = j;
      continue;
    }
    GridRow row;
    for (const auto& c : cols) row.values.push_back(json_num(j.at(c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json isotropy_json(const IsotropyReport& r) {
  json conds = json::array();
  for (const auto& c : r.conditions) {
    conds.push_back({{"label", std::string(1, c.label)}, {"residual", num(c.residual)}, {"holds", c.holds}});
  }
  return {{"conditions", conds},
          {"tol", r.tol},
          {"consensus", r.consensus},
          {"verdict", !r.consensus ? "DISAGREE" : r.isotropic ? "ISOTROPIC" : "NON-ISOTROPIC"},
          {"constant_lift", r.constant_lift},
          {"sup_grad_plus", num(r.grad_plus)},
          {"sup_grad_minus", num(r.grad_minus)},
          {"relation_plus", num(r.relation_plus)},
          {"relation_minus", num(r.relation_minus)},
          {"lift_derivative_residual", num(r.lift_derivative_residual)}};
}

json convergence_json(const ResidualConvergence& rc) {
  json rows = json::array();
  for (int k = 0; k < StructureResiduals::kCount; ++k) {
    rows.push_back({{"name", StructureResiduals::name(k)},
                    {"at_h", num(rc.at_h[k])},
                    {"at_half_h", num(rc.at_half_h[k])},
                    {"order", num(rc.order(k))},
                    {"second_order", rc.second_order(k)}});
  }
  return {{"h", rc.coarse.hu()},
          {"n", rc.coarse.n},
          {"n_fine", rc.fine.n},
          {"roundoff_floor", kRoundoffFloor},
          {"residuals", rows}};
}

}  // namespace twistor4
