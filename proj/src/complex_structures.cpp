#include "twistor4/complex_structures.hpp"

#include <cmath>

#include "twistor4/errors.hpp"

namespace twistor4 {

namespace {

bool squares_to_minus_identity(const Mat4& a, double tol) {
  return (a * a + Mat4::Identity()).cwiseAbs().maxCoeff() <= tol;
}

Mat4 combine(Chirality eps, const Vec3& c) {
  Mat4 m = Mat4::Zero();
  for (int k = 1; k <= 3; ++k) m += c[k - 1] * basis_I(eps, k).matrix();
  return m;
}

}  // namespace

OCS classify_ocs(const Mat4& a, double tol) {
  if (!is_orthogonal(a, tol) || !squares_to_minus_identity(a, tol)) {
    throw NotAComplexStructure("matrix is not an orthogonal complex structure");
  }
  // Entry a_j^i sits in row i, column j (1-based), i.e. a(i-1, j-1).
  const double a12 = a(1, 0), a13 = a(2, 0), a14 = a(3, 0);
  const double a23 = a(2, 1), a24 = a(3, 1);
  const double a34 = a(3, 2);

  Chirality eps;
  const double lower = a13 * a13 + a14 * a14;
  if (lower > tol) {
    // (a_2^3, a_2^4) = ε (a_1^4, −a_1^3)
    eps = (a23 * a14 - a24 * a13) > 0 ? Chirality::Plus : Chirality::Minus;
  } else {
    // A = ±I_{ε,1}: a_3^4 = ε a_1^2
    eps = (a34 * a12) > 0 ? Chirality::Plus : Chirality::Minus;
  }

  Vec3 c(a12, a13, a14);
  if (distance(combine(eps, c), a) > tol * 4 || std::abs(c.norm() - 1.0) > tol) {
    throw NotAComplexStructure("matrix does not reconstruct from its I-coordinates");
  }
  return OCS(a, eps, c);
}

OCS compose_ocs(Chirality eps, const Vec3& c, double tol) {
  if (!std::isfinite(c.norm()) || std::abs(c.norm() - 1.0) > tol) {
    throw NonUnitCoords("sphere coordinates are not a unit vector");
  }
  return OCS(combine(eps, c), eps, c);
}

OrientedPlane::OrientedPlane(const Vec4& a, const Vec4& b, double tol) : a_(a), b_(b) {
  if (std::abs(a.norm() - 1.0) > tol || std::abs(b.norm() - 1.0) > tol ||
      std::abs(inner4(a, b)) > tol) {
    throw DegeneratePair("(a, b) is not an orthonormal pair");
  }
}

StructurePair plane_to_pair(const OrientedPlane& p, double tol) {
  const Vec4& a = p.a();
  const Vec4& b = p.b();
  auto coords = [&](double e) {
    return Vec3(a[0] * b[1] - a[1] * b[0] + e * (a[2] * b[3] - a[3] * b[2]),
                a[0] * b[2] - a[2] * b[0] + e * (a[3] * b[1] - a[1] * b[3]),
                a[0] * b[3] - a[3] * b[0] + e * (a[1] * b[2] - a[2] * b[1]));
  };
  return {compose_ocs(Chirality::Plus, coords(1.0), tol),
          compose_ocs(Chirality::Minus, coords(-1.0), tol)};
}

double plane_distance(const OrientedPlane& p, const OrientedPlane& q) {
  const auto pp = plane_to_pair(p, 1e-8);
  const auto qp = plane_to_pair(q, 1e-8);
  return distance(p.projector(), q.projector()) + distance(pp.plus.matrix(), qp.plus.matrix());
}

bool same_oriented_plane(const OrientedPlane& p, const OrientedPlane& q, double tol) {
  return plane_distance(p, q) <= tol;
}

OrientedPlane pair_to_plane(const OCS& plus, const OCS& minus, double rank_tol) {
  if (plus.chirality() != Chirality::Plus || minus.chirality() != Chirality::Minus) {
    throw InvalidArgument("pair_to_plane expects (Σ+, Σ−) structures");
  }
  // A₊x = A₋x  ⇔  (A₋A₊ + E4) x = 0
  const Mat4 m = minus.matrix() * plus.matrix() + Mat4::Identity();
  Eigen::JacobiSVD<Mat4> svd(m, Eigen::ComputeFullV);
  const Eigen::Vector4d s = svd.singularValues();  // descending
  if (!(s[1] > rank_tol && s[2] <= rank_tol && s[3] <= rank_tol)) {
    throw NoCommonPlane("kernel of A−A+ + E4 is not two-dimensional");
  }
  const Vec4 u = svd.matrixV().col(3).normalized();
  Vec4 au = plus.matrix() * u;
  au.normalize();
  return OrientedPlane(u, au, 1e-8);
}

Mat4 h1_matrix(const Eigen::Vector4d& b) {
  Mat4 m;
  // clang-format off
  m << b[0], -b[1], -b[2], -b[3],
       b[1],  b[0],  b[3], -b[2],
       b[2], -b[3],  b[0],  b[1],
       b[3],  b[2], -b[1],  b[0];
  // clang-format on
  return m;
}

Mat4 h2_matrix(const Mat3& c) {
  Mat4 m = Mat4::Identity();
  m.block<3, 3>(1, 1) = c;
  return m;
}

Eigen::Vector4d h1_product(const Eigen::Vector4d& b, const Eigen::Vector4d& bprime) {
  return (h1_matrix(b) * h1_matrix(bprime)).col(0);
}

SO4Factorization h1h2_factorize(const Mat4& a, double tol) {
  if (!is_special_orthogonal(a, tol)) throw NotSO4("matrix is not in SO(4)");
  SO4Factorization f;
  f.b_quat = a.col(0);
  const Mat4 c = h1_matrix(f.b_quat).transpose() * a;
  const double off = std::max(std::abs(c(0, 0) - 1.0),
                              std::max(c.block<1, 3>(0, 1).cwiseAbs().maxCoeff(),
                                       c.block<3, 1>(1, 0).cwiseAbs().maxCoeff()));
  if (off > tol * 4) throw FactorizationFailed("C does not fix e1");
  f.c_block = c.block<3, 3>(1, 1);
  return f;
}

Mat3 phi(const Eigen::Vector4d& b, double tol) {
  if (std::abs(b.squaredNorm() - 1.0) > tol) throw NonUnitQuaternion("quaternion is not a unit vector");
  const double b1 = b[0], b2 = b[1], b3 = b[2], b4 = b[3];
  Mat3 m;
  // clang-format off
  m << b1*b1 + b2*b2 - b3*b3 - b4*b4,  2*b1*b4 + 2*b2*b3,             -2*b1*b3 + 2*b2*b4,
       -2*b1*b4 + 2*b2*b3,             b1*b1 + b3*b3 - b2*b2 - b4*b4,  2*b1*b2 + 2*b3*b4,
       2*b1*b3 + 2*b2*b4,              -2*b1*b2 + 2*b3*b4,             b1*b1 + b4*b4 - b2*b2 - b3*b3;
  // clang-format on
  return m;
}

std::pair<Mat3, Mat3> phi_tilde(const Mat4& a, double tol) {
  const auto f = h1h2_factorize(a, tol);
  return {f.c_block, phi(f.b_quat, tol * 4) * f.c_block};
}

Chirality chirality_via_frame(const Mat4& a, const Vec4& u, const Vec4& uprime, double tol) {
  if (!is_orthogonal(a, tol) || !squares_to_minus_identity(a, tol)) {
    throw NotAComplexStructure("matrix is not an orthogonal complex structure");
  }
  const Vec4 au = a * u;
  if (std::abs(u.norm() - 1.0) > tol || std::abs(uprime.norm() - 1.0) > tol ||
      std::abs(inner4(uprime, u)) > tol || std::abs(inner4(uprime, au)) > tol) {
    throw FrameConditionViolated("(u, u') violate the frame conditions");
  }
  Mat4 x;
  x.col(0) = u;
  x.col(1) = au;
  x.col(2) = uprime;
  x.col(3) = a * uprime;
  return det4(x) > 0 ? Chirality::Plus : Chirality::Minus;
}

}  // namespace twistor4
