#pragma once

#include <optional>
#include <string>
#include <vector>

#include "twistor4/grid.hpp"

namespace twistor4 {

/// Tolerances and frame settings shared by every analysis entry point.
struct AnalysisConfig {
  double tol = kDefaultTol;
  double isothermal_tol = 1e-8;
  double minimal_tol = 1e-8;
  double isotropy_tol = 1e-6;
  double seed_tol = 1e-2;
  std::optional<int> seed_branch;
  double fd_step = 0;
  bool richardson = false;

  PointOptions point_options() const;
};

struct SurfaceFlags {
  bool isothermal = false;
  bool minimal = false;
  bool isotropic = false;
  /// "+", "-", "both" or "none".
  std::string constant_lift = "none";

  bool operator==(const SurfaceFlags&) const = default;
};

struct CatalogEntry {
  std::string name;
  std::string text;
  Domain domain;
  SurfaceFlags expected;
  std::string note;

  SurfaceDef surface() const;
};

const std::vector<CatalogEntry>& catalog();
/// Throws InvalidArgument for an unknown name.
const CatalogEntry& catalog_entry(const std::string& name);

/// Flags as computed by the full pipeline on an n × n grid over `domain`.
SurfaceFlags pipeline_flags(const SurfaceDef& s, const GridSpec& spec, const AnalysisConfig& cfg = {});

}  // namespace twistor4
