#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "twistor4/catalog.hpp"
#include "twistor4/structure.hpp"
#include "twistor4/twistor.hpp"

namespace twistor4 {

inline constexpr const char* kToolName = "twistor4";
inline constexpr const char* kToolVersion = "0.1.0";

nlohmann::json config_json(const AnalysisConfig& cfg);
nlohmann::json surface_json(const SurfaceDef& s);

/// Everything known at one point. Quantities that need isothermal coordinates
/// are null at non-isothermal points.
nlohmann::json point_report(const SurfaceDef& s, const SurfacePointData& p, const AnalysisConfig& cfg);

/// One plotting row per grid point; NaN marks a quantity that is unavailable.
struct GridRow {
  static const std::vector<std::string>& columns();
  std::vector<double> values;

  double get(const std::string& column) const;
};

struct GridSummary {
  GridSpec spec;
  double fd_step = 0;
  int seed_branch = 0;
  bool isothermal = false;
  double sup_H = 0;
  double grad_plus = NAN, grad_minus = NAN;
  /// Holomorphicity residuals of g₊ and ḡ₋; absent when the chart pole lies on the grid.
  std::optional<double> holo_gplus, holo_gminus_conj;
  int poles_plus = 0, poles_minus = 0;
};

struct GridReport {
  std::string tool = kToolName;
  std::string version = kToolVersion;
  SurfaceDef surface;
  AnalysisConfig config;
  GridSummary summary;
  std::vector<GridRow> rows;
};

GridReport build_grid_report(const SurfaceDef& s, const GridSpec& spec, const AnalysisConfig& cfg);

nlohmann::json summary_json(const GridSummary& s);

/// JSON lines: a header object (tool, version, surface, config, summary)
/// followed by one object per grid point.
void write_grid_jsonl(std::ostream& os, const GridReport& r);
/// CSV: '#'-prefixed header lines carrying the same metadata, then a column
/// row and one data row per point, numbers with 17 significant digits.
void write_grid_csv(std::ostream& os, const GridReport& r);

/// Rows only; metadata is returned as the parsed header object.
std::vector<GridRow> read_grid_csv(std::istream& is, nlohmann::json* header = nullptr);
std::vector<GridRow> read_grid_jsonl(std::istream& is, nlohmann::json* header = nullptr);

nlohmann::json isotropy_json(const IsotropyReport& r);
nlohmann::json convergence_json(const ResidualConvergence& rc);

/// 17 significant digits.
std::string format_double(double x);

}  // namespace twistor4
