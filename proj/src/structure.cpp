#include "twistor4/structure.hpp"

#include <limits>

namespace twistor4 {

double StructureResiduals::operator[](int k) const {
  switch (k) {
    case 0:
      return gauss;
    case 1:
      return codazzi1;
    case 2:
      return codazzi2;
    case 3:
      return ricci;
    default:
      return hopf;
  }
}

const char* StructureResiduals::name(int k) {
  static const char* names[] = {"gauss", "codazzi1", "codazzi2", "ricci", "hopf"};
  return names[k];
}

void require_minimal_isothermal(const FieldGrid& g, double minimal_tol) {
  if (!g.all_isothermal()) throw NotIsothermal("hypothesis 'isothermal' fails: g11 != g22 or g12 != 0");
  const double h = g.sup_mean_curvature();
  if (h > minimal_tol) {
    throw NotMinimal("hypothesis 'minimal' fails: sup |H| = " + std::to_string(h));
  }
}

StructureResiduals structure_residuals(const FieldGrid& g, double minimal_tol) {
  require_minimal_isothermal(g, minimal_tol);
  const auto& pts = g.points;
  for (const auto& p : pts.data) {
    if (!p.beta_gamma) throw InvalidArgument("structure residuals need the normal connection");
  }
  const Grid<double> alpha = pts.map([](const SurfacePointData& p) { return *p.alpha; });
  const Grid<Complex> b1 = pts.map([](const SurfacePointData& p) { return p.beta_gamma->beta1; });
  const Grid<Complex> b2 = pts.map([](const SurfacePointData& p) { return p.beta_gamma->beta2; });
  const Grid<Complex> gam = pts.map([](const SurfacePointData& p) { return p.beta_gamma->gamma; });
  const Grid<Complex> hopf = pts.map([](const SurfacePointData& p) {
    const auto& bg = *p.beta_gamma;
    return bg.beta1 * bg.beta1 + bg.beta2 * bg.beta2;
  });

  const GridSpec& s = pts.spec;
  StructureResiduals r;
  r.gauss = interior_sup(s, [&](int i, int j) {
    const auto& p = pts.at(i, j);
    const auto& bg = *p.beta_gamma;
    return std::abs(laplacian(alpha, i, j) - 4.0 / p.e2a() * (std::norm(bg.beta1) + std::norm(bg.beta2)));
  });
  r.codazzi1 = interior_sup(s, [&](int i, int j) {
    const auto& bg = *pts.at(i, j).beta_gamma;
    return std::abs(d_wbar(b1, i, j) - bg.beta2 * bg.gamma);
  });
  r.codazzi2 = interior_sup(s, [&](int i, int j) {
    const auto& bg = *pts.at(i, j).beta_gamma;
    return std::abs(d_wbar(b2, i, j) + bg.beta1 * bg.gamma);
  });
  r.ricci = interior_sup(s, [&](int i, int j) {
    const auto& p = pts.at(i, j);
    const auto& bg = *p.beta_gamma;
    return std::abs((d_w(gam, i, j) + 2.0 / p.e2a() * bg.beta1 * std::conj(bg.beta2)).imag());
  });
  r.hopf = interior_sup(s, [&](int i, int j) { return std::abs(d_wbar(hopf, i, j)); });
  return r;
}

double ResidualConvergence::order(int k) const {
  if (at_h[k] <= kRoundoffFloor && at_half_h[k] <= kRoundoffFloor) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  return observed_order(at_h[k], at_half_h[k]);
}

bool ResidualConvergence::second_order(int k) const {
  if (at_h[k] <= kRoundoffFloor && at_half_h[k] <= kRoundoffFloor) return true;
  const double p = order(k);
  return p >= 1.7 && p <= 2.3;
}

ResidualConvergence residual_convergence(const SurfaceDef& s, const GridSpec& coarse,
                                         const PointOptions& opts, double minimal_tol) {
  ResidualConvergence rc;
  rc.coarse = coarse;
  rc.fine = coarse.refined();
  const FieldGrid gc = build_field_grid(s, rc.coarse, opts);
  // Same branch on both levels so the frame-dependent fields are identical functions.
  PointOptions fine_opts = opts;
  fine_opts.seed_branch = gc.seed_branch;
  fine_opts.fd_step = gc.fd_step;
  const FieldGrid gf = build_field_grid(s, rc.fine, fine_opts);
  rc.at_h = structure_residuals(gc, minimal_tol);
  rc.at_half_h = structure_residuals(gf, minimal_tol);
  return rc;
}

GaussWeingartenResiduals gauss_weingarten_residuals(const FieldGrid& g) {
  const auto& pts = g.points;
  const Grid<Mat4> frame = pts.map([](const SurfacePointData& p) {
    Mat4 m;
    m << p.d.Fu, p.d.Fv, p.frame.n1, p.frame.n2;
    return m;
  });
  const Grid<Mat4> s1 = pts.map([](const SurfacePointData& p) { return gauss_weingarten_matrices(p).first; });
  const Grid<Mat4> s2 = pts.map([](const SurfacePointData& p) { return gauss_weingarten_matrices(p).second; });

  const GridSpec& s = pts.spec;
  GaussWeingartenResiduals r;
  r.frame_u = interior_sup(s, [&](int i, int j) {
    return (Mat4(diff_u(frame, i, j)) - frame.at(i, j) * s1.at(i, j)).norm();
  });
  r.frame_v = interior_sup(s, [&](int i, int j) {
    return (Mat4(diff_v(frame, i, j)) - frame.at(i, j) * s2.at(i, j)).norm();
  });
  r.integrability = interior_sup(s, [&](int i, int j) {
    const Mat4& a = s1.at(i, j);
    const Mat4& b = s2.at(i, j);
    return (Mat4(diff_v(s1, i, j)) - Mat4(diff_u(s2, i, j)) + b * a - a * b).norm();
  });
  return r;
}

}  // namespace twistor4
