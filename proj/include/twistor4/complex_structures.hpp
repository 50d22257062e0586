#pragma once

#include <utility>

#include "twistor4/linalg4.hpp"

namespace twistor4 {

/// A ∈ O(4) with A² = −E4, together with its chirality ε and the unit
/// coordinates c such that A = Σ c^k I_{ε,k}.
class OrthogonalComplexStructure {
 public:
  const Mat4& matrix() const noexcept { return matrix_; }
  Chirality chirality() const noexcept { return chirality_; }
  const Vec3& coords() const noexcept { return coords_; }

  OrthogonalComplexStructure operator-() const {
    return OrthogonalComplexStructure(-matrix_, chirality_, -coords_);
  }

 private:
  OrthogonalComplexStructure(Mat4 m, Chirality eps, Vec3 c)
      : matrix_(std::move(m)), chirality_(eps), coords_(std::move(c)) {}
  friend OrthogonalComplexStructure classify_ocs(const Mat4&, double);
  friend OrthogonalComplexStructure compose_ocs(Chirality, const Vec3&, double);

  Mat4 matrix_;
  Chirality chirality_;
  Vec3 coords_;
};

using OCS = OrthogonalComplexStructure;

/// Reads ε and c off a matrix following the case split of the classification
/// argument: c = (a_1^2, a_1^3, a_1^4) and ε from the sign relation between
/// the first two columns, or from a_3^4 = ±a_1^2 when those columns vanish
/// below row two. Throws NotAComplexStructure.
OCS classify_ocs(const Mat4& a, double tol = kDefaultTol);

/// Σ c^k I_{ε,k}. Throws NonUnitCoords when |c| deviates from 1 by more than tol.
OCS compose_ocs(Chirality eps, const Vec3& c, double tol = kDefaultTol);

/// An ordered orthonormal pair (a, b). The plane it spans carries the
/// orientation class of (a, b).
class OrientedPlane {
 public:
  /// Throws DegeneratePair unless |a| = |b| = 1 and ⟨a, b⟩ = 0 within tol.
  OrientedPlane(const Vec4& a, const Vec4& b, double tol = kDefaultTol);

  const Vec4& a() const noexcept { return a_; }
  const Vec4& b() const noexcept { return b_; }

  /// Orthogonal projector a·ᵗa + b·ᵗb onto the underlying subspace.
  Mat4 projector() const { return a_ * a_.transpose() + b_ * b_.transpose(); }
  /// a ∧ b, which determines both the subspace and the orientation.
  Bivector bivector() const { return wedge(a_, b_); }

 private:
  Vec4 a_;
  Vec4 b_;
};

/// Projector distance plus orientation agreement; zero iff equal as oriented planes.
double plane_distance(const OrientedPlane& p, const OrientedPlane& q);
bool same_oriented_plane(const OrientedPlane& p, const OrientedPlane& q, double tol = kDefaultTol);

struct StructurePair {
  OCS plus;
  OCS minus;
};

/// The unique A_± ∈ Σ_± with A_± a = b.
StructurePair plane_to_pair(const OrientedPlane& p, double tol = kDefaultTol);

/// Inverse of plane_to_pair: the plane {x : A₊x = A₋x} oriented by (u, A₊u).
/// `rank_tol` thresholds the singular values of A₋A₊ + E4.
OrientedPlane pair_to_plane(const OCS& plus, const OCS& minus, double rank_tol = 1e-8);

/// Element of H1 built from a unit quaternion b = (b1, b2, b3, b4).
Mat4 h1_matrix(const Eigen::Vector4d& b);
/// Element of H2 (fixes e1) built from a 3x3 block.
Mat4 h2_matrix(const Mat3& c);

/// The product in H1 read back as a quaternion: first column of B(b)·B(b').
Eigen::Vector4d h1_product(const Eigen::Vector4d& b, const Eigen::Vector4d& bprime);

struct SO4Factorization {
  Eigen::Vector4d b_quat;
  Mat3 c_block;

  Mat4 b_matrix() const { return h1_matrix(b_quat); }
  Mat4 c_matrix() const { return h2_matrix(c_block); }
};

/// A = B·C with B ∈ H1, C ∈ H2. Throws NotSO4, FactorizationFailed.
SO4Factorization h1h2_factorize(const Mat4& a, double tol = kDefaultTol);

/// The double cover H1 → SO(3). Throws NonUnitQuaternion.
Mat3 phi(const Eigen::Vector4d& b, double tol = kDefaultTol);

/// The double cover SO(4) → SO(3) × SO(3), A = BC ↦ (C, Φ(B)·C). Throws NotSO4.
std::pair<Mat3, Mat3> phi_tilde(const Mat4& a, double tol = kDefaultTol);

/// Chirality of A ∈ Σ read from det[u Au u' Au'] for unit u, u' with
/// ⟨u', u⟩ = ⟨u', Au⟩ = 0. Throws NotAComplexStructure, FrameConditionViolated.
Chirality chirality_via_frame(const Mat4& a, const Vec4& u, const Vec4& uprime,
                              double tol = kDefaultTol);

}  // namespace twistor4
