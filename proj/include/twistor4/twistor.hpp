#pragma once

#include <array>
#include <optional>
#include <string>

#include "twistor4/complex_structures.hpp"
#include "twistor4/grid.hpp"

namespace twistor4 {

/// ψ^i = ∂f^i/∂w = ½(f^i_u − i f^i_v).
struct PsiVector {
  std::array<Complex, 4> psi{};

  const Complex& operator[](int i) const { return psi[i]; }
  /// Σ (ψ^i)², zero in isothermal coordinates.
  Complex sum_squares() const;
  /// Σ |ψ^i|² = e^{2α}/2 in isothermal coordinates.
  double sum_abs_squares() const;
};

PsiVector psi(const SurfaceDerivatives& d);
PsiVector psi(const std::array<Jet2, 4>& jets);

/// Ψ_ε^k, k = 1..3 (stored 0-based).
struct BigPsi {
  Chirality eps = Chirality::Plus;
  std::array<Complex, 3> Psi{};

  /// −(2i/e^{2α}) Ψ_ε, which is real with unit norm at isothermal points.
  std::array<Complex, 3> scaled(double e2a) const;
  /// Real parts of `scaled`.
  Vec3 sphere_coords(double e2a) const;
};

BigPsi big_psi(const PsiVector& p, Chirality eps);

/// F_ε = −(2i/e^{2α}) Σ Ψ_ε^k I_{ε,k}. Throws NotIsothermal when the ψ
/// identities fail beyond tol (relative to e^{2α}), NonUnitCoords on breakdown.
OCS lift_isothermal(const PsiVector& p, double e2a, Chirality eps, double tol = 1e-8);

/// F_ε = t1 ∧ t2 + ε n1 ∧ n2.
OCS lift_frame(const Frame& f, Chirality eps, double tol = 1e-8);

/// Stereographic chart value g = (c1 + i c2)/(1 − c3). Near the pole c3 → 1
/// the primary value is reported as infinite and `secondary` holds the
/// projection from the antipode, (c1 + i c2)/(1 + c3).
struct ChartValue {
  Complex value{0, 0};
  bool at_infinity = false;
  Complex secondary{0, 0};
};

inline constexpr double kChartPoleTol = 1e-8;

/// Throws NonUnitCoords.
ChartValue chart(const Vec3& c, double tol = 1e-8);
/// (2a, 2b, a² + b² − 1)/(a² + b² + 1) for g = a + ib.
Vec3 inverse_chart(Complex g);

/// Closed form of g₊ in terms of ψ, choosing between the two equivalent
/// quotients by the larger denominator. Throws PoleOfChart.
Complex g_plus_closed_form(const PsiVector& p, double tol = kChartPoleTol);

/// Both twistor lifts (the Gauss map into Σ₊ × Σ₋) with their chart values.
struct LiftPoint {
  OCS plus;
  OCS minus;
  ChartValue gplus;
  ChartValue gminus;
};

LiftPoint gauss_map(const SurfacePointData& p);

/// ∂_u F₊ and ∂_v F₊ at an isothermal point from the second fundamental form:
/// F₊u = e^{−α}(b²₁₁ + b¹₁₂)(t1∧n1 + n2∧t2) + e^{−α}(b²₁₂ − b¹₁₁)(t1∧n2 + t2∧n1),
/// and the same with (1, 2) → (2, 2) for v. Throws NotIsothermal.
std::pair<Mat4, Mat4> lift_plus_derivatives(const SurfacePointData& p);

/// sup over interior points of |½(∂_u + i∂_v) f|. Throws GridTooSmall.
double holomorphicity_residual(const Grid<Complex>& f);

/// Lifts sampled over a field grid.
struct LiftGrid {
  Grid<Mat4> plus, minus;
  Grid<ChartValue> gplus, gminus;

  /// g₊ as a complex field; throws PoleOfChart if any sample is at the pole.
  Grid<Complex> gplus_field() const;
  /// ḡ₋ as a complex field; throws PoleOfChart if any sample is at the pole.
  Grid<Complex> gminus_conj_field() const;
};

LiftGrid lift_grid(const FieldGrid& g);

/// sup over interior points of max(|∂_u F|, |∂_v F|).
double sup_gradient(const Grid<Mat4>& f);

struct ConditionResult {
  char label;
  double residual;
  bool holds;
};

/// The five equivalent isotropy conditions for a minimal surface:
///   (a) (β¹)² + (β²)² = 0
///   (b) (b¹₁₁)² − (b¹₁₂)² + (b²₁₁)² − (b²₁₂)² = 0 and b¹₁₁b¹₁₂ + b²₁₁b²₁₂ = 0
///   (c) (b¹₁₁)² + (b¹₁₂)² − (b²₁₁)² − (b²₁₂)² = 0 and b¹₁₁b²₁₁ + b¹₁₂b²₁₂ = 0
///   (d) the θ-dependent Fourier coefficients of λ²(θ), for ±λ the eigenvalues
///       of e^{2α}(cos θ A1 + sin θ A2), vanish
///   (e) one twistor lift is constant
struct IsotropyReport {
  std::array<ConditionResult, 5> conditions{};
  double tol = 1e-6;
  /// All five agree.
  bool consensus = false;
  bool isotropic = false;
  /// "+", "-", "both" or "none".
  std::string constant_lift = "none";

  // Witnesses behind (e).
  double grad_plus = 0, grad_minus = 0;
  double relation_plus = 0, relation_minus = 0;  // residuals of the b-relations for F₊ / F₋ constant
  /// sup |finite-difference ∂F₊ − closed form| over interior points.
  double lift_derivative_residual = 0;
};

/// Pointwise residuals of conditions (a) to (d) at one point.
std::array<double, 4> isotropy_pointwise(const SurfacePointData& p);

/// Throws NotMinimal, NotIsothermal.
IsotropyReport isotropy_report(const FieldGrid& g, double tol = 1e-6, double minimal_tol = 1e-8);

}  // namespace twistor4
