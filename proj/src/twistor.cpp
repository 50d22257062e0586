#include "twistor4/twistor.hpp"

#include <cmath>

#include "twistor4/structure.hpp"

namespace twistor4 {

namespace {

const Complex I(0, 1);

}  // namespace

Complex PsiVector::sum_squares() const {
  Complex s = 0;
  for (const auto& p : psi) s += p * p;
  return s;
}

double PsiVector::sum_abs_squares() const {
  double s = 0;
  for (const auto& p : psi) s += std::norm(p);
  return s;
}

PsiVector psi(const SurfaceDerivatives& d) {
  PsiVector p;
  for (int i = 0; i < 4; ++i) p.psi[i] = 0.5 * Complex(d.Fu[i], -d.Fv[i]);
  return p;
}

PsiVector psi(const std::array<Jet2, 4>& jets) { return psi(SurfaceDerivatives::from_jets(jets)); }

std::array<Complex, 3> BigPsi::scaled(double e2a) const {
  const Complex f = -2.0 * I / e2a;
  return {f * Psi[0], f * Psi[1], f * Psi[2]};
}

Vec3 BigPsi::sphere_coords(double e2a) const {
  const auto s = scaled(e2a);
  return {s[0].real(), s[1].real(), s[2].real()};
}

BigPsi big_psi(const PsiVector& p, Chirality eps) {
  const double e = sign(eps);
  // ψ^a ψ̄^b − ψ^b ψ̄^a, 0-based indices
  auto cross = [&](int a, int b) { return p[a] * std::conj(p[b]) - p[b] * std::conj(p[a]); };
  BigPsi out;
  out.eps = eps;
  out.Psi = {cross(0, 1) + e * cross(2, 3), cross(0, 2) + e * cross(3, 1), cross(0, 3) + e * cross(1, 2)};
  return out;
}

OCS lift_isothermal(const PsiVector& p, double e2a, Chirality eps, double tol) {
  if (std::abs(p.sum_squares()) > tol * e2a || std::abs(p.sum_abs_squares() - 0.5 * e2a) > tol * e2a) {
    throw NotIsothermal("ψ does not satisfy the isothermal identities");
  }
  return compose_ocs(eps, big_psi(p, eps).sphere_coords(e2a), tol);
}

OCS lift_frame(const Frame& f, Chirality eps, double tol) {
  const Bivector b = wedge(f.t1, f.t2) + sign(eps) * wedge(f.n1, f.n2);
  return classify_ocs(b.matrix(), tol);
}

ChartValue chart(const Vec3& c, double tol) {
  if (std::abs(c.norm() - 1.0) > tol) throw NonUnitCoords("chart argument is not on the unit sphere");
  ChartValue g;
  const Complex num(c[0], c[1]);
  g.secondary = num / (1.0 + c[2]);
  if (1.0 - c[2] <= kChartPoleTol) {
    g.at_infinity = true;
    g.value = Complex(INFINITY, INFINITY);
  } else {
    g.value = num / (1.0 - c[2]);
  }
  return g;
}

Vec3 inverse_chart(Complex g) {
  const double a = g.real(), b = g.imag();
  const double r = a * a + b * b;
  return Vec3(2 * a, 2 * b, r - 1) / (r + 1);
}

Complex g_plus_closed_form(const PsiVector& p, double tol) {
  const double e2a = 2 * p.sum_abs_squares();
  const Vec3 c = big_psi(p, Chirality::Plus).sphere_coords(e2a);
  if (1.0 - c[2] <= tol) throw PoleOfChart("g+ is at the pole of the chart");
  // g₊ = (1/i)(ψ¹ + iψ⁴)/(ψ² − iψ³) = i(ψ² + iψ³)/(ψ¹ − iψ⁴)
  const Complex den1 = p[1] - I * p[2];
  const Complex den2 = p[0] - I * p[3];
  if (std::abs(den1) >= std::abs(den2)) return (p[0] + I * p[3]) / (I * den1);
  return I * (p[1] + I * p[2]) / den2;
}

LiftPoint gauss_map(const SurfacePointData& p) {
  OCS plus = lift_frame(p.frame, Chirality::Plus);
  OCS minus = lift_frame(p.frame, Chirality::Minus);
  const ChartValue gp = chart(plus.coords());
  const ChartValue gm = chart(minus.coords());
  return {std::move(plus), std::move(minus), gp, gm};
}

std::pair<Mat4, Mat4> lift_plus_derivatives(const SurfacePointData& p) {
  if (!p.isothermal) throw NotIsothermal("closed-form lift derivatives need isothermal coordinates");
  const Frame& f = p.frame;
  const Mat4 e1 = (wedge(f.t1, f.n1) + wedge(f.n2, f.t2)).matrix();
  const Mat4 e2 = (wedge(f.t1, f.n2) + wedge(f.t2, f.n1)).matrix();
  const double s = std::exp(-*p.alpha);
  const auto& b = p.second;
  // b(k, i, j) = b^{k+1}_{i+1 j+1}
  const Mat4 fu = s * (b(1, 0, 0) + b(0, 0, 1)) * e1 + s * (b(1, 0, 1) - b(0, 0, 0)) * e2;
  const Mat4 fv = s * (b(0, 1, 1) + b(1, 1, 0)) * e1 + s * (b(1, 1, 1) - b(0, 1, 0)) * e2;
  return {fu, fv};
}

double holomorphicity_residual(const Grid<Complex>& f) {
  f.spec.validate();
  return interior_sup(f.spec, [&](int i, int j) { return std::abs(d_wbar(f, i, j)); });
}

Grid<Complex> LiftGrid::gplus_field() const {
  return gplus.map([](const ChartValue& g) {
    if (g.at_infinity) throw PoleOfChart("g+ hits the chart pole on this grid");
    return g.value;
  });
}

Grid<Complex> LiftGrid::gminus_conj_field() const {
  return gminus.map([](const ChartValue& g) {
    if (g.at_infinity) throw PoleOfChart("g- hits the chart pole on this grid");
    return std::conj(g.value);
  });
}

LiftGrid lift_grid(const FieldGrid& g) {
  const GridSpec& s = g.spec();
  LiftGrid out{Grid<Mat4>(s), Grid<Mat4>(s), Grid<ChartValue>(s), Grid<ChartValue>(s)};
  for (std::size_t k = 0; k < g.points.data.size(); ++k) {
    const LiftPoint lp = gauss_map(g.points.data[k]);
    out.plus.data[k] = lp.plus.matrix();
    out.minus.data[k] = lp.minus.matrix();
    out.gplus.data[k] = lp.gplus;
    out.gminus.data[k] = lp.gminus;
  }
  return out;
}

double sup_gradient(const Grid<Mat4>& f) {
  f.spec.validate();
  return interior_sup(f.spec, [&](int i, int j) {
    return std::max(Mat4(diff_u(f, i, j)).norm(), Mat4(diff_v(f, i, j)).norm());
  });
}

std::array<double, 4> isotropy_pointwise(const SurfacePointData& p) {
  const auto& b = p.second;
  const double b111 = b(0, 0, 0), b112 = b(0, 0, 1), b211 = b(1, 0, 0), b212 = b(1, 0, 1);
  const Complex beta1 = 0.5 * Complex(b111, -b112);
  const Complex beta2 = 0.5 * Complex(b211, -b212);
  std::array<double, 4> res{};
  res[0] = std::abs(beta1 * beta1 + beta2 * beta2);
  res[1] = std::max(std::abs(b111 * b111 - b112 * b112 + b211 * b211 - b212 * b212),
                    std::abs(b111 * b112 + b211 * b212));
  res[2] = std::max(std::abs(b111 * b111 + b112 * b112 - b211 * b211 - b212 * b212),
                    std::abs(b111 * b211 + b112 * b212));

  // λ²(θ) = −det(cos θ M1 + sin θ M2), M_k = e^{2α} A_k
  const Mat2 m1 = p.e2a() * p.shape.A1;
  const Mat2 m2 = p.e2a() * p.shape.A2;
  const double d1 = m1.determinant(), d2 = m2.determinant(), d12 = (m1 + m2).determinant();
  const double cos2 = -0.5 * (d1 - d2);
  const double sin2 = -0.5 * (d12 - d1 - d2);
  res[3] = std::max(std::abs(cos2), std::abs(sin2));
  return res;
}

IsotropyReport isotropy_report(const FieldGrid& g, double tol, double minimal_tol) {
  require_minimal_isothermal(g, minimal_tol);
  IsotropyReport r;
  r.tol = tol;

  double res[4] = {0, 0, 0, 0};
  for (const auto& p : g.points.data) {
    const auto pr = isotropy_pointwise(p);
    for (int k = 0; k < 4; ++k) res[k] = std::max(res[k], pr[k]);

    const auto& b = p.second;
    const double b111 = b(0, 0, 0), b112 = b(0, 0, 1), b211 = b(1, 0, 0), b212 = b(1, 0, 1);
    const double b122 = b(0, 1, 1), b222 = b(1, 1, 1);
    r.relation_plus = std::max(r.relation_plus, std::max({std::abs(b111 - b212), std::abs(b111 + b122),
                                                          std::abs(b222 - b112), std::abs(b112 + b211)}));
    r.relation_minus = std::max(r.relation_minus, std::max({std::abs(b111 + b212), std::abs(b111 + b122),
                                                            std::abs(b222 + b112), std::abs(b112 - b211)}));
  }

  const LiftGrid lifts = lift_grid(g);
  r.grad_plus = sup_gradient(lifts.plus);
  r.grad_minus = sup_gradient(lifts.minus);
  const double diam = g.spec().domain.diameter();
  const double e_plus = std::max(r.relation_plus, r.grad_plus * diam);
  const double e_minus = std::max(r.relation_minus, r.grad_minus * diam);

  r.lift_derivative_residual = interior_sup(g.spec(), [&](int i, int j) {
    const auto [fu, fv] = lift_plus_derivatives(g.points.at(i, j));
    return std::max((Mat4(diff_u(lifts.plus, i, j)) - fu).norm(), (Mat4(diff_v(lifts.plus, i, j)) - fv).norm());
  });

  const char labels[5] = {'a', 'b', 'c', 'd', 'e'};
  const double residuals[5] = {res[0], res[1], res[2], res[3], std::min(e_plus, e_minus)};
  int true_count = 0;
  for (int k = 0; k < 5; ++k) {
    r.conditions[k] = {labels[k], residuals[k], residuals[k] <= tol};
    true_count += r.conditions[k].holds ? 1 : 0;
  }
  r.consensus = true_count == 0 || true_count == 5;
  r.isotropic = true_count == 5;

  const bool plus_const = e_plus <= tol, minus_const = e_minus <= tol;
  if (plus_const && minus_const) {
    r.constant_lift = "both";
  } else if (plus_const || minus_const) {
    r.constant_lift = r.relation_plus <= r.relation_minus ? "+" : "-";
  }
  return r;
}

}  // namespace twistor4
