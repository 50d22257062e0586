#include "twistor4/geometry.hpp"

#include <cmath>

#include "twistor4/errors.hpp"

namespace twistor4 {

namespace {

Vec4 column(const std::array<Jet2, 4>& jets, double Jet2::*member) {
  return Vec4(jets[0].*member, jets[1].*member, jets[2].*member, jets[3].*member);
}

Vec4 normal_projection(const Vec4& s, const Vec4& t1, const Vec4& t2) {
  return s - inner4(s, t1) * t1 - inner4(s, t2) * t2;
}

}  // namespace

SurfaceDerivatives SurfaceDerivatives::from_jets(const std::array<Jet2, 4>& jets) {
  return {column(jets, &Jet2::val), column(jets, &Jet2::du),  column(jets, &Jet2::dv),
          column(jets, &Jet2::duu), column(jets, &Jet2::duv), column(jets, &Jet2::dvv)};
}

const Vec4& SurfaceDerivatives::second(int a, int b) const {
  if (a != b) return Fuv;
  return a == 0 ? Fuu : Fvv;
}

FirstForm first_form(const SurfaceDerivatives& d, double tol) {
  FirstForm g{inner4(d.Fu, d.Fu), inner4(d.Fu, d.Fv), inner4(d.Fv, d.Fv)};
  if (!(g.det() > tol * g.g11 * g.g22) || !(g.g11 > 0) || !(g.g22 > 0)) {
    throw NotImmersed("F_u and F_v are linearly dependent");
  }
  return g;
}

bool is_isothermal(const FirstForm& g, double tol) {
  const double scale = 0.5 * (g.g11 + g.g22);
  return std::abs(g.g11 - g.g22) <= tol * scale && std::abs(g.g12) <= tol * scale;
}

Christoffel christoffel_tangential(const SurfaceDerivatives& d, const FirstForm& g) {
  const Mat2 ginv = g.matrix().inverse();
  Christoffel gamma{};
  for (int i = 0; i < 2; ++i) {
    for (int j = i; j < 2; ++j) {
      const Vec4& fij = d.second(i, j);
      const Eigen::Vector2d rhs(inner4(fij, d.Fu), inner4(fij, d.Fv));
      const Eigen::Vector2d sol = ginv * rhs;
      for (int k = 0; k < 2; ++k) gamma[k][i][j] = gamma[k][j][i] = sol[k];
    }
  }
  return gamma;
}

Christoffel christoffel_from_metric(const FirstForm& g, const FirstForm& g_u, const FirstForm& g_v) {
  const Mat2 ginv = g.matrix().inverse();
  const Mat2 dg[2] = {g_u.matrix(), g_v.matrix()};
  Christoffel gamma{};
  for (int k = 0; k < 2; ++k) {
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        double s = 0;
        for (int l = 0; l < 2; ++l) s += ginv(k, l) * (dg[i](j, l) + dg[j](i, l) - dg[l](i, j));
        gamma[k][i][j] = 0.5 * s;
      }
    }
  }
  return gamma;
}

Frame build_frame(const SurfaceDerivatives& d, const Vec4& seed1, const Vec4& seed2, double seed_tol) {
  Frame f;
  f.t1 = d.Fu.normalized();
  f.t2 = (d.Fv - inner4(d.Fv, f.t1) * f.t1).normalized();

  const Vec4 p1 = normal_projection(seed1, f.t1, f.t2);
  const double n1_norm = p1.norm();
  if (!(n1_norm > seed_tol)) throw DegenerateSeed("first seed is nearly tangent");
  f.n1 = p1 / n1_norm;

  Vec4 p2 = normal_projection(seed2, f.t1, f.t2);
  p2 -= inner4(p2, f.n1) * f.n1;
  const double n2_norm = p2.norm();
  if (!(n2_norm > seed_tol)) throw DegenerateSeed("second seed is nearly dependent");
  f.n2 = p2 / n2_norm;

  if (det4(f.matrix()) < 0) f.n2 = -f.n2;
  return f;
}

Frame build_frame(const SurfaceDerivatives& d, int branch, double seed_tol) {
  if (branch < 0 || branch >= static_cast<int>(kSeedBranches.size())) {
    throw InvalidArgument("seed branch index out of range");
  }
  const auto [i, j] = kSeedBranches[branch];
  return build_frame(d, unit(i), unit(j), seed_tol);
}

int select_seed_branch(const SurfaceDerivatives& d, double seed_tol) {
  for (int b = 0; b < static_cast<int>(kSeedBranches.size()); ++b) {
    try {
      build_frame(d, b, seed_tol);
      return b;
    } catch (const DegenerateSeed&) {
    }
  }
  throw DegenerateSeed("no seed branch yields a normal frame");
}

Frame rotate_normals(const Frame& f, double theta, bool reflect) {
  const double c = std::cos(theta), s = std::sin(theta);
  Frame r = f;
  r.n1 = c * f.n1 + s * f.n2;
  r.n2 = reflect ? Vec4(s * f.n1 - c * f.n2) : Vec4(-s * f.n1 + c * f.n2);
  return r;
}

SecondForm second_form(const SurfaceDerivatives& d, const Frame& frame) {
  SecondForm b;
  for (int k = 0; k < 2; ++k) {
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) b.b[k][i][j] = inner4(d.second(i, j), frame.normal(k));
    }
  }
  return b;
}

ShapeOperators shape_operators(const FirstForm& g, const SecondForm& b) {
  const Mat2 ginv = g.matrix().inverse();
  return {ginv * b.component(0), ginv * b.component(1)};
}

Vec4 mean_curvature(const FirstForm& g, const SecondForm& b, const Frame& frame) {
  const ShapeOperators a = shape_operators(g, b);
  return 0.5 * (a.A1.trace() * frame.n1 + a.A2.trace() * frame.n2);
}

namespace {

Vec4 n1_at(const SurfaceDef& s, double u, double v, int branch, double seed_tol) {
  const auto d = SurfaceDerivatives::from_jets(eval_surface_jet(s, u, v));
  try {
    return build_frame(d, branch, seed_tol).n1;
  } catch (const DegenerateSeed&) {
    throw SeedBranchFlip("normal frame branch is not continuous on the stencil");
  }
}

std::pair<Vec4, Vec4> n1_differences(const SurfaceDef& s, double u, double v, double h, int branch,
                                     double seed_tol) {
  const Vec4 du = (n1_at(s, u + h, v, branch, seed_tol) - n1_at(s, u - h, v, branch, seed_tol)) / (2 * h);
  const Vec4 dv = (n1_at(s, u, v + h, branch, seed_tol) - n1_at(s, u, v - h, branch, seed_tol)) / (2 * h);
  return {du, dv};
}

}  // namespace

NormalConnection normal_connection(const SurfaceDef& s, double u, double v, double h, int branch,
                                   double seed_tol, bool richardson) {
  const auto d = SurfaceDerivatives::from_jets(eval_surface_jet(s, u, v));
  const Frame f = build_frame(d, branch, seed_tol);
  auto [du, dv] = n1_differences(s, u, v, h, branch, seed_tol);
  if (richardson) {
    const auto [du2, dv2] = n1_differences(s, u, v, h / 2, branch, seed_tol);
    du = (4 * du2 - du) / 3;
    dv = (4 * dv2 - dv) / 3;
  }
  return {inner4(du, f.n2), inner4(dv, f.n2)};
}

SurfacePointData analyze_point(const SurfaceDef& s, double u, double v, const PointOptions& opts) {
  SurfacePointData p;
  p.u = u;
  p.v = v;
  p.jets = eval_surface_jet(s, u, v);
  p.d = SurfaceDerivatives::from_jets(p.jets);
  p.first = first_form(p.d, opts.tol);
  p.isothermal = is_isothermal(p.first, opts.isothermal_tol);
  if (p.isothermal) p.alpha = 0.5 * std::log(p.first.g11);

  p.seed_branch = opts.seed_branch ? *opts.seed_branch : select_seed_branch(p.d, opts.seed_tol);
  p.frame = build_frame(p.d, p.seed_branch, opts.seed_tol);
  p.second = second_form(p.d, p.frame);
  p.shape = shape_operators(p.first, p.second);
  p.christoffel = christoffel_tangential(p.d, p.first);
  p.H = 0.5 * (p.shape.A1.trace() * p.frame.n1 + p.shape.A2.trace() * p.frame.n2);

  if (opts.with_connection) {
    const double h = opts.fd_step > 0 ? opts.fd_step : 1e-4 * s.domain.diameter();
    p.connection = normal_connection(s, u, v, h, p.seed_branch, opts.seed_tol, opts.richardson);
    if (p.isothermal) p.beta_gamma = beta_gamma(p);
  }
  return p;
}

std::pair<Mat4, Mat4> gauss_weingarten_matrices(const SurfacePointData& p) {
  if (!p.connection) throw InvalidArgument("Gauss-Weingarten matrices need the normal connection");
  const double gam[2] = {p.connection->gamma1, p.connection->gamma2};
  std::pair<Mat4, Mat4> out;
  for (int j = 0; j < 2; ++j) {
    Mat4 m = Mat4::Zero();
    for (int i = 0; i < 2; ++i) {
      for (int l = 0; l < 2; ++l) {
        m(i, l) = p.christoffel[i][l][j];
        m(2 + i, l) = p.second(i, l, j);
      }
      for (int k = 0; k < 2; ++k) m(i, 2 + k) = -p.shape[k](i, j);
    }
    m(2, 3) = -gam[j];
    m(3, 2) = gam[j];
    (j == 0 ? out.first : out.second) = m;
  }
  return out;
}

BetaGamma beta_gamma(const SurfacePointData& p) {
  if (!p.isothermal) throw NotIsothermal("β and γ are defined for isothermal coordinates");
  if (!p.connection) throw InvalidArgument("γ needs the normal connection");
  const Complex i(0, 1);
  return {0.5 * (p.second(0, 0, 0) - i * p.second(0, 0, 1)),
          0.5 * (p.second(1, 0, 0) - i * p.second(1, 0, 1)),
          0.5 * (p.connection->gamma1 + i * p.connection->gamma2)};
}

}  // namespace twistor4
