#pragma once

#include <array>

#include <Eigen/Dense>

namespace twistor4 {

using Vec4 = Eigen::Vector4d;
using Mat4 = Eigen::Matrix4d;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Mat2 = Eigen::Matrix2d;

inline constexpr double kDefaultTol = 1e-10;

/// Chirality of an orthogonal complex structure (the sign in I_{ε,k}).
enum class Chirality { Plus = 1, Minus = -1 };

constexpr double sign(Chirality eps) noexcept { return eps == Chirality::Plus ? 1.0 : -1.0; }
constexpr Chirality opposite(Chirality eps) noexcept {
  return eps == Chirality::Plus ? Chirality::Minus : Chirality::Plus;
}
constexpr char symbol(Chirality eps) noexcept { return eps == Chirality::Plus ? '+' : '-'; }

/// Alternating 4x4 matrix, an element of the span of {a ∧ b}.
///
/// Stored as the full matrix because products and traces are taken on it
/// directly. Construction from an arbitrary matrix checks antisymmetry.
class Bivector {
 public:
  Bivector() : m_(Mat4::Zero()) {}

  /// Throws InvalidArgument if `m` is not alternating within `tol`.
  static Bivector from_matrix(const Mat4& m, double tol = kDefaultTol);

  const Mat4& matrix() const noexcept { return m_; }

  Bivector operator+(const Bivector& o) const { return Bivector(m_ + o.m_); }
  Bivector operator-(const Bivector& o) const { return Bivector(m_ - o.m_); }
  Bivector operator-() const { return Bivector(-m_); }
  Bivector operator*(double s) const { return Bivector(m_ * s); }
  friend Bivector operator*(double s, const Bivector& b) { return b * s; }

 private:
  explicit Bivector(const Mat4& m) : m_(m) {}
  friend Bivector wedge(const Vec4& a, const Vec4& b);
  friend Bivector basis_I(Chirality eps, int k);

  Mat4 m_;
};

/// Standard inner product of E^4.
double inner4(const Vec4& a, const Vec4& b);

/// a ∧ b := b·ᵗa − a·ᵗb
Bivector wedge(const Vec4& a, const Vec4& b);

/// ⟨A, B⟩ := ¼ tr(ᵗA B). Under this product the six I_{±,k} are orthonormal.
double mat_inner(const Mat4& a, const Mat4& b);

/// The basis bivector I_{ε,k}, k in 1..3. Exact integer entries.
Bivector basis_I(Chirality eps, int k);

struct BivectorCoords {
  Vec3 plus;
  Vec3 minus;
};

/// Coordinates in the orthonormal basis {I_{+,k}, I_{-,k}}.
BivectorCoords bivector_coords(const Bivector& b);
/// Throws InvalidArgument on a non-alternating matrix.
BivectorCoords bivector_coords(const Mat4& m, double tol = kDefaultTol);
Bivector from_coords(const BivectorCoords& c);

double det4(const Mat4& a);
bool is_orthogonal(const Mat4& a, double tol = kDefaultTol);
bool is_special_orthogonal(const Mat4& a, double tol = kDefaultTol);
bool is_alternating(const Mat4& a, double tol = kDefaultTol);

/// Frobenius-norm distance, used throughout to compare matrices.
inline double distance(const Mat4& a, const Mat4& b) { return (a - b).norm(); }

inline Vec4 unit(int i) { return Vec4::Unit(i - 1); }

}  // namespace twistor4
