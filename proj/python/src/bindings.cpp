#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "twistor4/catalog.hpp"
#include "twistor4/report.hpp"
#include "twistor4/structure.hpp"
#include "twistor4/twistor.hpp"

namespace py = pybind11;
using namespace twistor4;

namespace {

Chirality to_chirality(int eps) {
  if (eps == 1) return Chirality::Plus;
  if (eps == -1) return Chirality::Minus;
  throw InvalidArgument("chirality must be +1 or -1");
}

Domain to_domain(const SurfaceDef& s, const std::optional<std::array<double, 4>>& d) {
  if (!d) return s.domain;
  return Domain{(*d)[0], (*d)[1], (*d)[2], (*d)[3]};
}

PointOptions point_options(const SurfaceDef& s, const AnalysisConfig& cfg) {
  PointOptions opts = cfg.point_options();
  if (opts.fd_step <= 0) opts.fd_step = 1e-4 * s.domain.diameter();
  return opts;
}

// Reports cross the boundary as JSON text; the Python package decodes them.
std::string analyze(const SurfaceDef& s, double u, double v, const AnalysisConfig& cfg) {
  if (!s.domain.contains(u, v)) throw InvalidArgument("point lies outside the surface domain");
  const PointOptions opts = point_options(s, cfg);
  AnalysisConfig shown = cfg;
  shown.fd_step = opts.fd_step;
  return point_report(s, analyze_point(s, u, v, opts), shown).dump();
}

std::string grid_jsonl(const SurfaceDef& s, int n, const std::optional<std::array<double, 4>>& domain,
                       const AnalysisConfig& cfg) {
  std::ostringstream os;
  write_grid_jsonl(os, build_grid_report(s, GridSpec{to_domain(s, domain), n}, cfg));
  return os.str();
}

std::string isotropy(const SurfaceDef& s, int n, const std::optional<std::array<double, 4>>& domain,
                     const AnalysisConfig& cfg) {
  const FieldGrid g = build_field_grid(s, GridSpec{to_domain(s, domain), n}, cfg.point_options());
  nlohmann::json j = isotropy_json(isotropy_report(g, cfg.isotropy_tol, cfg.minimal_tol));
  j["seed_branch"] = g.seed_branch;
  j["fd_step"] = g.fd_step;
  return j.dump();
}

std::string residuals(const SurfaceDef& s, int n, const std::optional<std::array<double, 4>>& domain,
                      const AnalysisConfig& cfg) {
  const GridSpec spec{to_domain(s, domain), n};
  return convergence_json(residual_convergence(s, spec, cfg.point_options(), cfg.minimal_tol)).dump();
}

}  // namespace

PYBIND11_MODULE(_twistor4, m) {
  m.doc() = "Twistor lifts of surfaces in four-dimensional Euclidean space.";
  m.attr("__version__") = kToolVersion;

  auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<HypothesisError>(m, "HypothesisError", error.ptr());
  py::register_exception<NumericError>(m, "NumericError", error.ptr());

  py::class_<AnalysisConfig>(m, "AnalysisConfig")
      .def(py::init<>())
      .def_readwrite("tol", &AnalysisConfig::tol)
      .def_readwrite("isothermal_tol", &AnalysisConfig::isothermal_tol)
      .def_readwrite("minimal_tol", &AnalysisConfig::minimal_tol)
      .def_readwrite("isotropy_tol", &AnalysisConfig::isotropy_tol)
      .def_readwrite("seed_tol", &AnalysisConfig::seed_tol)
      .def_readwrite("seed_branch", &AnalysisConfig::seed_branch)
      .def_readwrite("fd_step", &AnalysisConfig::fd_step)
      .def_readwrite("richardson", &AnalysisConfig::richardson);

  py::class_<SurfaceDef>(m, "Surface")
      .def(py::init([](const std::string& text, const std::string& name,
                       const std::optional<std::array<double, 4>>& domain) {
             Domain d;
             if (domain) d = Domain{(*domain)[0], (*domain)[1], (*domain)[2], (*domain)[3]};
             return parse_surface(text, name, d);
           }),
           py::arg("text"), py::arg("name") = "expr", py::arg("domain") = py::none())
      .def_static("from_catalog", [](const std::string& name) { return catalog_entry(name).surface(); })
      .def_static("from_json", [](const std::string& text) { return parse_surface_json(text); })
      .def_readonly("name", &SurfaceDef::name)
      .def_property_readonly("domain",
                             [](const SurfaceDef& s) {
                               return std::array<double, 4>{s.domain.u0, s.domain.u1, s.domain.v0, s.domain.v1};
                             })
      .def("to_json", &surface_to_json)
      .def("__str__", &SurfaceDef::to_string)
      .def(
          "jet",
          [](const SurfaceDef& s, double u, double v) {
            Eigen::Matrix<double, 4, 6, Eigen::RowMajor> out;
            const auto jets = eval_surface_jet(s, u, v);
            for (int i = 0; i < 4; ++i) out.row(i) << jets[i].val, jets[i].du, jets[i].dv, jets[i].duu, jets[i].duv,
                jets[i].dvv;
            return out;
          },
          "Rows are components; columns are f, f_u, f_v, f_uu, f_uv, f_vv.");

  m.def("catalog_names", [] {
    std::vector<std::string> names;
    for (const auto& e : catalog()) names.push_back(e.name);
    return names;
  });

  m.def("basis_I", [](int eps, int k) { return basis_I(to_chirality(eps), k).matrix(); });
  m.def(
      "compose_ocs", [](int eps, const Vec3& c) { return compose_ocs(to_chirality(eps), c).matrix(); }, py::arg("eps"),
      py::arg("c"));
  m.def("classify_ocs", [](const Mat4& a) {
    const OCS o = classify_ocs(a);
    return py::make_tuple(static_cast<int>(o.chirality()), o.coords());
  });
  m.def("plane_to_pair", [](const Vec4& a, const Vec4& b) {
    const StructurePair p = plane_to_pair(OrientedPlane(a, b));
    return py::make_tuple(p.plus.matrix(), p.minus.matrix());
  });
  m.def("pair_to_plane", [](const Mat4& plus, const Mat4& minus) {
    const OrientedPlane p = pair_to_plane(classify_ocs(plus), classify_ocs(minus));
    return py::make_tuple(p.a(), p.b());
  });
  m.def("phi", [](const Eigen::Vector4d& b) { return phi(b); });
  m.def("phi_tilde", [](const Mat4& a) { return phi_tilde(a); });
  m.def("h1h2_factorize", [](const Mat4& a) {
    const SO4Factorization f = h1h2_factorize(a);
    return py::make_tuple(f.b_quat, f.c_block);
  });

  m.def("_catalog_json", [] {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : catalog()) {
      out.push_back({{"name", e.name},
                     {"text", e.text},
                     {"domain", {e.domain.u0, e.domain.u1, e.domain.v0, e.domain.v1}},
                     {"isothermal", e.expected.isothermal},
                     {"minimal", e.expected.minimal},
                     {"isotropic", e.expected.isotropic},
                     {"constant_lift", e.expected.constant_lift}});
    }
    return out.dump();
  });
  m.def("_analyze", &analyze);
  m.def("_grid_jsonl", &grid_jsonl);
  m.def("_isotropy", &isotropy);
  m.def("_residuals", &residuals);
}
