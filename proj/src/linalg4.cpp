#include "twistor4/linalg4.hpp"

#include <cmath>

#include "twistor4/errors.hpp"

namespace twistor4 {

Bivector Bivector::from_matrix(const Mat4& m, double tol) {
  if (!is_alternating(m, tol)) {
    throw InvalidArgument("matrix is not alternating");
  }
  // Symmetrize away the tolerated asymmetry so the stored value is exact.
  return Bivector(0.5 * (m - m.transpose()));
}

double inner4(const Vec4& a, const Vec4& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

Bivector wedge(const Vec4& a, const Vec4& b) {
  return Bivector(b * a.transpose() - a * b.transpose());
}

double mat_inner(const Mat4& a, const Mat4& b) { return 0.25 * (a.transpose() * b).trace(); }

Bivector basis_I(Chirality eps, int k) {
  const double s = sign(eps);
  Mat4 m = Mat4::Zero();
  // I_{ε,1} = e1∧e2 + ε e3∧e4, I_{ε,2} = e1∧e3 + ε e4∧e2, I_{ε,3} = e1∧e4 + ε e2∧e3,
  // written out entrywise: (i, j) of a∧b is b_i a_j − a_i b_j.
  switch (k) {
    case 1:
      m(1, 0) = 1;
      m(0, 1) = -1;
      m(3, 2) = s;
      m(2, 3) = -s;
      break;
    case 2:
      m(2, 0) = 1;
      m(0, 2) = -1;
      m(1, 3) = s;
      m(3, 1) = -s;
      break;
    case 3:
      m(3, 0) = 1;
      m(0, 3) = -1;
      m(2, 1) = s;
      m(1, 2) = -s;
      break;
    default:
      throw InvalidArgument("basis_I index must be 1, 2 or 3");
  }
  return Bivector(m);
}

BivectorCoords bivector_coords(const Bivector& b) {
  BivectorCoords c;
  for (int k = 1; k <= 3; ++k) {
    c.plus[k - 1] = mat_inner(basis_I(Chirality::Plus, k).matrix(), b.matrix());
    c.minus[k - 1] = mat_inner(basis_I(Chirality::Minus, k).matrix(), b.matrix());
  }
  return c;
}

BivectorCoords bivector_coords(const Mat4& m, double tol) {
  return bivector_coords(Bivector::from_matrix(m, tol));
}

Bivector from_coords(const BivectorCoords& c) {
  Bivector b;
  for (int k = 1; k <= 3; ++k) {
    b = b + c.plus[k - 1] * basis_I(Chirality::Plus, k) + c.minus[k - 1] * basis_I(Chirality::Minus, k);
  }
  return b;
}

double det4(const Mat4& a) { return a.determinant(); }

bool is_orthogonal(const Mat4& a, double tol) {
  return (a.transpose() * a - Mat4::Identity()).cwiseAbs().maxCoeff() <= tol;
}

bool is_special_orthogonal(const Mat4& a, double tol) {
  return is_orthogonal(a, tol) && std::abs(det4(a) - 1.0) <= tol;
}

bool is_alternating(const Mat4& a, double tol) {
  return (a + a.transpose()).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace twistor4
