#include "twistor4/grid.hpp"

namespace twistor4 {

bool FieldGrid::all_isothermal() const {
  for (const auto& p : points.data) {
    if (!p.isothermal) return false;
  }
  return true;
}

double FieldGrid::sup_mean_curvature() const {
  double m = 0;
  for (const auto& p : points.data) m = std::max(m, p.H.norm());
  return m;
}

namespace {

bool branch_covers(const SurfaceDef& s, const GridSpec& spec, int branch, double h, double seed_tol) {
  const double offsets[5][2] = {{0, 0}, {h, 0}, {-h, 0}, {0, h}, {0, -h}};
  for (int j = 0; j < spec.n; ++j) {
    for (int i = 0; i < spec.n; ++i) {
      for (const auto& o : offsets) {
        const auto d = SurfaceDerivatives::from_jets(eval_surface_jet(s, spec.u(i) + o[0], spec.v(j) + o[1]));
        try {
          build_frame(d, branch, seed_tol);
        } catch (const DegenerateSeed&) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

FieldGrid build_field_grid(const SurfaceDef& s, const GridSpec& spec, PointOptions opts) {
  spec.validate();
  FieldGrid fg;
  fg.surface = s;
  fg.fd_step = opts.fd_step > 0 ? opts.fd_step : 1e-4 * spec.domain.diameter();
  opts.fd_step = fg.fd_step;

  if (opts.seed_branch) {
    fg.seed_branch = *opts.seed_branch;
  } else {
    const double h = opts.with_connection ? fg.fd_step : 0.0;
    int chosen = -1;
    for (int b = 0; b < static_cast<int>(kSeedBranches.size()) && chosen < 0; ++b) {
      if (branch_covers(s, spec, b, h, opts.seed_tol)) chosen = b;
    }
    if (chosen < 0) throw DegenerateSeed("no single seed branch covers the grid");
    fg.seed_branch = chosen;
  }
  opts.seed_branch = fg.seed_branch;
  fg.options = opts;

  fg.points = Grid<SurfacePointData>(spec);
  for (int j = 0; j < spec.n; ++j) {
    for (int i = 0; i < spec.n; ++i) fg.points.at(i, j) = analyze_point(s, spec.u(i), spec.v(j), opts);
  }
  return fg;
}

}  // namespace twistor4
