#pragma once

#include <cmath>
#include <random>

#include "twistor4/complex_structures.hpp"
#include "twistor4/errors.hpp"

namespace twistor4::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20241018);
  return gen;
}

inline double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng()); }

inline double normal() { return std::normal_distribution<double>(0, 1)(rng()); }

inline Vec4 random_vec4() { return {normal(), normal(), normal(), normal()}; }

inline Vec3 random_unit3() {
  Vec3 c(normal(), normal(), normal());
  return c.normalized();
}

inline Vec4 random_unit4() { return random_vec4().normalized(); }

inline Chirality random_chirality() { return uniform(0, 1) < 0.5 ? Chirality::Plus : Chirality::Minus; }

/// Haar-ish random element of SO(n) by QR of a Gaussian matrix.
template <int N>
Eigen::Matrix<double, N, N> random_rotation() {
  Eigen::Matrix<double, N, N> m;
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) m(i, j) = normal();
  }
  Eigen::HouseholderQR<Eigen::Matrix<double, N, N>> qr(m);
  Eigen::Matrix<double, N, N> q = qr.householderQ();
  if (q.determinant() < 0) q.col(0) *= -1;
  return q;
}

/// Random orthonormal pair (a, b).
inline std::pair<Vec4, Vec4> random_orthonormal_pair() {
  const Mat4 q = random_rotation<4>();
  return {q.col(0), q.col(1)};
}

}  // namespace twistor4::testing
