#pragma once

#include <array>
#include <complex>
#include <optional>
#include <utility>

#include "twistor4/linalg4.hpp"
#include "twistor4/surface_expr.hpp"

namespace twistor4 {

using Complex = std::complex<double>;

/// F and its partials up to order two, assembled from the component jets.
struct SurfaceDerivatives {
  Vec4 F, Fu, Fv, Fuu, Fuv, Fvv;

  static SurfaceDerivatives from_jets(const std::array<Jet2, 4>& jets);
  /// Second partial F_ab for a, b in {0 (u), 1 (v)}.
  const Vec4& second(int a, int b) const;
  const Vec4& first(int a) const { return a == 0 ? Fu : Fv; }
};

struct FirstForm {
  double g11 = 1, g12 = 0, g22 = 1;

  double det() const { return g11 * g22 - g12 * g12; }
  Mat2 matrix() const { return (Mat2() << g11, g12, g12, g22).finished(); }
};

/// Orthonormal frame with t1, t2 tangent and det[t1 t2 n1 n2] = +1.
struct Frame {
  Vec4 t1, t2, n1, n2;

  Mat4 matrix() const {
    Mat4 m;
    m << t1, t2, n1, n2;
    return m;
  }
  const Vec4& normal(int k) const { return k == 0 ? n1 : n2; }
};

/// b[k][i][j] = ⟨F_ij, n_k⟩, symmetric in (i, j). Indices are 0-based.
struct SecondForm {
  std::array<std::array<std::array<double, 2>, 2>, 2> b{};

  double operator()(int k, int i, int j) const { return b[k][i][j]; }
  Mat2 component(int k) const {
    return (Mat2() << b[k][0][0], b[k][0][1], b[k][1][0], b[k][1][1]).finished();
  }
};

/// A_k = g⁻¹ b_k.
struct ShapeOperators {
  Mat2 A1 = Mat2::Zero(), A2 = Mat2::Zero();

  const Mat2& operator[](int k) const { return k == 0 ? A1 : A2; }
};

/// γ_a = ⟨∂_a n1, n2⟩. Depends on the chosen normal frame.
struct NormalConnection {
  double gamma1 = 0, gamma2 = 0;
};

/// Γ[k][i][j] with F_ij^⊤ = Σ_k Γ[k][i][j] F_k. Indices are 0-based.
using Christoffel = std::array<std::array<std::array<double, 2>, 2>, 2>;

struct BetaGamma {
  Complex beta1, beta2, gamma;
};

/// Fallback order of normal-frame seeds, as pairs of basis indices (1-based).
inline constexpr std::array<std::pair<int, int>, 6> kSeedBranches{
    {{3, 4}, {2, 4}, {2, 3}, {1, 4}, {1, 3}, {1, 2}}};

struct PointOptions {
  double tol = kDefaultTol;
  double isothermal_tol = 1e-8;
  /// Minimum norm of a seed's normal projection before the branch is rejected.
  double seed_tol = 1e-2;
  /// Pin the normal-frame seed branch (index into kSeedBranches).
  std::optional<int> seed_branch;
  /// Step for differentiating the normal frame; 0 means 1e-4 × domain diameter.
  double fd_step = 0;
  bool richardson = false;
  /// Compute γ1, γ2 (needs four extra frame evaluations).
  bool with_connection = true;
};

FirstForm first_form(const SurfaceDerivatives& d, double tol = kDefaultTol);
bool is_isothermal(const FirstForm& g, double tol = 1e-8);

Christoffel christoffel_tangential(const SurfaceDerivatives& d, const FirstForm& g);

/// Christoffel symbols from the metric and its first partials (g_u, g_v),
/// Γ^k_ij = ½ g^{kl}(∂_i g_jl + ∂_j g_il − ∂_l g_ij).
Christoffel christoffel_from_metric(const FirstForm& g, const FirstForm& g_u, const FirstForm& g_v);

/// Frame from explicit seeds. Throws DegenerateSeed when a seed's normal
/// projection has norm ≤ seed_tol.
Frame build_frame(const SurfaceDerivatives& d, const Vec4& seed1, const Vec4& seed2,
                  double seed_tol = 1e-2);
Frame build_frame(const SurfaceDerivatives& d, int branch, double seed_tol = 1e-2);
/// First branch of kSeedBranches that succeeds at this point.
int select_seed_branch(const SurfaceDerivatives& d, double seed_tol = 1e-2);

/// Rotates (2.1-style, reflect = false) or reflects (reflect = true) the normal
/// pair by θ: (ñ1, ñ2) = (n1, n2)·R. A reflection flips det, so the returned
/// frame is only used for covariance checks.
Frame rotate_normals(const Frame& f, double theta, bool reflect = false);

SecondForm second_form(const SurfaceDerivatives& d, const Frame& frame);
ShapeOperators shape_operators(const FirstForm& g, const SecondForm& b);
Vec4 mean_curvature(const FirstForm& g, const SecondForm& b, const Frame& frame);

/// γ1, γ2 by central differences of the frame on the 5-point stencil with the
/// branch held fixed. Throws SeedBranchFlip if a stencil frame cannot be built.
NormalConnection normal_connection(const SurfaceDef& s, double u, double v, double h, int branch,
                                   double seed_tol = 1e-2, bool richardson = false);

/// All pointwise geometry at (u, v).
struct SurfacePointData {
  double u = 0, v = 0;
  std::array<Jet2, 4> jets{};
  SurfaceDerivatives d;
  FirstForm first;
  bool isothermal = false;
  std::optional<double> alpha;  // ½ log g11, isothermal points only
  int seed_branch = 0;
  Frame frame;
  SecondForm second;
  ShapeOperators shape;
  Christoffel christoffel{};
  Vec4 H = Vec4::Zero();
  std::optional<NormalConnection> connection;
  std::optional<BetaGamma> beta_gamma;  // isothermal points with a connection

  double e2a() const { return first.g11; }
};

/// Throws NotImmersed, DomainError, DegenerateSeed, SeedBranchFlip.
SurfacePointData analyze_point(const SurfaceDef& s, double u, double v, const PointOptions& opts = {});

/// The Gauss–Weingarten coefficient matrices:
/// (F_u, F_v, n1, n2)_u = (F_u, F_v, n1, n2)·S1 and likewise for v with S2.
std::pair<Mat4, Mat4> gauss_weingarten_matrices(const SurfacePointData& p);

/// β^k = ½(b^k_11 − i b^k_12), γ = ½(γ1 + iγ2). Throws NotIsothermal.
BetaGamma beta_gamma(const SurfacePointData& p);

}  // namespace twistor4
