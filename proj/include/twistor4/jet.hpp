#pragma once

namespace twistor4 {

/// Value and partial derivatives up to order two of a scalar field in (u, v)
/// at one point, propagated exactly through arithmetic (truncated Taylor
/// polynomial of degree 2).
struct Jet2 {
  double val = 0, du = 0, dv = 0, duu = 0, duv = 0, dvv = 0;

  static constexpr Jet2 constant(double c) { return {c, 0, 0, 0, 0, 0}; }
  static constexpr Jet2 var_u(double u) { return {u, 1, 0, 0, 0, 0}; }
  static constexpr Jet2 var_v(double v) { return {v, 0, 1, 0, 0, 0}; }

  /// f∘x given f(x0), f'(x0), f''(x0).
  Jet2 compose(double f0, double f1, double f2) const {
    return {f0,
            f1 * du,
            f1 * dv,
            f2 * du * du + f1 * duu,
            f2 * du * dv + f1 * duv,
            f2 * dv * dv + f1 * dvv};
  }

  Jet2 operator-() const { return {-val, -du, -dv, -duu, -duv, -dvv}; }
};

inline Jet2 operator+(const Jet2& a, const Jet2& b) {
  return {a.val + b.val, a.du + b.du, a.dv + b.dv, a.duu + b.duu, a.duv + b.duv, a.dvv + b.dvv};
}

inline Jet2 operator-(const Jet2& a, const Jet2& b) { return a + (-b); }

inline Jet2 operator*(const Jet2& a, const Jet2& b) {
  return {a.val * b.val,
          a.du * b.val + a.val * b.du,
          a.dv * b.val + a.val * b.dv,
          a.duu * b.val + 2 * a.du * b.du + a.val * b.duu,
          a.duv * b.val + a.du * b.dv + a.dv * b.du + a.val * b.duv,
          a.dvv * b.val + 2 * a.dv * b.dv + a.val * b.dvv};
}

inline Jet2 operator*(double s, const Jet2& a) {
  return {s * a.val, s * a.du, s * a.dv, s * a.duu, s * a.duv, s * a.dvv};
}

/// Caller guarantees b.val != 0.
inline Jet2 operator/(const Jet2& a, const Jet2& b) {
  const double r = 1.0 / b.val;
  return a * b.compose(r, -r * r, 2 * r * r * r);
}

}  // namespace twistor4
