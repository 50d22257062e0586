#pragma once

#include "twistor4/grid.hpp"

namespace twistor4 {

/// Supremum over interior grid points of each structure-equation residual for
/// a minimal surface in isothermal coordinates:
///   gauss     α_uu + α_vv − (4/e^{2α})(|β¹|² + |β²|²)
///   codazzi1  ∂β¹/∂w̄ − β²γ
///   codazzi2  ∂β²/∂w̄ + β¹γ
///   ricci     Im(∂γ/∂w + (2/e^{2α}) β¹ β̄²)
///   hopf      ∂((β¹)² + (β²)²)/∂w̄
struct StructureResiduals {
  double gauss = 0, codazzi1 = 0, codazzi2 = 0, ricci = 0, hopf = 0;

  static constexpr int kCount = 5;
  double operator[](int k) const;
  static const char* name(int k);
};

/// Throws NotIsothermal or NotMinimal (sup |H| > minimal_tol) naming the failing hypothesis.
void require_minimal_isothermal(const FieldGrid& g, double minimal_tol = 1e-8);

StructureResiduals structure_residuals(const FieldGrid& g, double minimal_tol = 1e-8);

struct ResidualConvergence {
  GridSpec coarse, fine;
  StructureResiduals at_h, at_half_h;

  /// log2 of the residual ratio; NaN when both levels sit at the rounding floor.
  double order(int k) const;
  /// Order within [2 − 0.3, 2 + 0.3], or both levels at the rounding floor.
  bool second_order(int k) const;
};

ResidualConvergence residual_convergence(const SurfaceDef& s, const GridSpec& coarse,
                                         const PointOptions& opts = {}, double minimal_tol = 1e-8);

/// Consistency of the Gauss–Weingarten system on a grid:
///   frame_u   sup |∂_u(F_u, F_v, n1, n2) − (F_u, F_v, n1, n2) S1|
///   frame_v   the same in v with S2
///   integrability  sup |∂_v S1 − ∂_u S2 + S2 S1 − S1 S2|
struct GaussWeingartenResiduals {
  double frame_u = 0, frame_v = 0, integrability = 0;
};

GaussWeingartenResiduals gauss_weingarten_residuals(const FieldGrid& g);

}  // namespace twistor4
