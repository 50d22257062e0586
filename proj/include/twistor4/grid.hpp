#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "twistor4/errors.hpp"
#include "twistor4/geometry.hpp"

namespace twistor4 {

/// n × n uniformly spaced sample points over a rectangle, endpoints included.
struct GridSpec {
  Domain domain;
  int n = 41;

  double hu() const { return (domain.u1 - domain.u0) / (n - 1); }
  double hv() const { return (domain.v1 - domain.v0) / (n - 1); }
  double u(int i) const { return domain.u0 + i * hu(); }
  double v(int j) const { return domain.v0 + j * hv(); }

  /// The same rectangle with the spacing halved (2n − 1 points per side).
  GridSpec refined() const { return {domain, 2 * n - 1}; }
  void validate() const {
    if (n < 3) throw GridTooSmall("grid needs at least 3 x 3 points");
  }
};

/// Row-major samples of one field; index i runs along u, j along v.
template <class T>
struct Grid {
  GridSpec spec;
  std::vector<T> data;

  Grid() = default;
  explicit Grid(GridSpec s) : spec(s), data(static_cast<std::size_t>(s.n) * s.n) {}

  T& at(int i, int j) { return data[static_cast<std::size_t>(j) * spec.n + i]; }
  const T& at(int i, int j) const { return data[static_cast<std::size_t>(j) * spec.n + i]; }
  int n() const { return spec.n; }

  template <class F>
  auto map(F&& f) const -> Grid<decltype(f(std::declval<const T&>()))> {
    Grid<decltype(f(std::declval<const T&>()))> out(spec);
    for (std::size_t k = 0; k < data.size(); ++k) out.data[k] = f(data[k]);
    return out;
  }
};

// Central differences at interior points.
template <class T>
T diff_u(const Grid<T>& g, int i, int j) {
  return (g.at(i + 1, j) - g.at(i - 1, j)) / (2 * g.spec.hu());
}

template <class T>
T diff_v(const Grid<T>& g, int i, int j) {
  return (g.at(i, j + 1) - g.at(i, j - 1)) / (2 * g.spec.hv());
}

template <class T>
T laplacian(const Grid<T>& g, int i, int j) {
  const double hu = g.spec.hu(), hv = g.spec.hv();
  return (g.at(i + 1, j) - 2.0 * g.at(i, j) + g.at(i - 1, j)) / (hu * hu) +
         (g.at(i, j + 1) - 2.0 * g.at(i, j) + g.at(i, j - 1)) / (hv * hv);
}

/// ∂/∂w̄ = ½(∂_u + i∂_v)
inline Complex d_wbar(const Grid<Complex>& g, int i, int j) {
  return 0.5 * (diff_u(g, i, j) + Complex(0, 1) * diff_v(g, i, j));
}

/// ∂/∂w = ½(∂_u − i∂_v)
inline Complex d_w(const Grid<Complex>& g, int i, int j) {
  return 0.5 * (diff_u(g, i, j) - Complex(0, 1) * diff_v(g, i, j));
}

/// Supremum of f(i, j) over interior points.
inline double interior_sup(const GridSpec& s, const std::function<double(int, int)>& f) {
  double m = 0;
  for (int j = 1; j + 1 < s.n; ++j) {
    for (int i = 1; i + 1 < s.n; ++i) m = std::max(m, f(i, j));
  }
  return m;
}

/// Pointwise geometry sampled on a grid with one normal-frame branch shared by
/// every point, so frame-dependent fields (γ, β) are differentiable across it.
struct FieldGrid {
  SurfaceDef surface;
  PointOptions options;
  Grid<SurfacePointData> points;
  int seed_branch = 0;
  double fd_step = 0;

  const GridSpec& spec() const { return points.spec; }
  bool all_isothermal() const;
  double sup_mean_curvature() const;
};

/// Chooses the first seed branch valid at every grid point and every
/// normal-connection stencil point, then samples. Throws DegenerateSeed when
/// no single branch covers the grid.
FieldGrid build_field_grid(const SurfaceDef& s, const GridSpec& spec, PointOptions opts = {});

/// Observed convergence order between two residuals at spacings h and h/2.
inline double observed_order(double coarse, double fine) { return std::log2(coarse / fine); }

/// Residuals at or below this level are treated as exact to rounding.
inline constexpr double kRoundoffFloor = 1e-10;

}  // namespace twistor4
