#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gispec/model.hpp"
#include "gispec/types.hpp"

namespace gispec::specsets {

enum class Axis { kReal, kImaginary };

/// Sorted disjoint closed intervals on one axis, symmetric under negation.
struct AxisIntervalUnion {
  Axis axis = Axis::kReal;
  std::vector<std::pair<double, double>> intervals;

  /// 1-D distance from t to the union (infinity when empty).
  double distance(double t) const;
  bool empty() const { return intervals.empty(); }
  bool operator==(const AxisIntervalUnion&) const = default;
};

/// Collects raw intervals and merges them with a gap tolerance.
class IntervalAccumulator {
 public:
  explicit IntervalAccumulator(Axis axis) : axis_(axis) {}
  void add(double lo, double hi);
  /// Adds both [lo, hi] and [-hi, -lo].
  void add_symmetric(double lo, double hi);
  AxisIntervalUnion merged(double rel_gap_tol = 1e-9) const;

 private:
  Axis axis_;
  std::vector<std::pair<double, double>> raw_;
};

struct DsRegion {
  double imag_band_halfwidth = 0.0;  // |Omega|
  double disc_radius_sq = 0.0;       // max(0, -gamma)
  bool operator==(const DsRegion&) const = default;
};

struct SpectrumSet {
  AxisIntervalUnion real_part{Axis::kReal, {}};
  AxisIntervalUnion imag_part{Axis::kImaginary, {}};
  /// When set, the full-spectrum region: the imaginary axis united with
  /// {|Im lambda| <= halfwidth and |lambda|^2 <= disc_radius_sq}.
  std::optional<DsRegion> ds_region;
  bool operator==(const SpectrumSet&) const = default;
};

/// Union over sampled interior points of the pointwise symbol set, united
/// with the boundary failure intervals over sampled boundary points.
SpectrumSet essential_spectrum(const model::PlanetModel& m, int interior_samples,
                               int boundary_samples);

/// The cross bound: imaginary halfwidth sqrt(4 |Omega|^2 + max(0, N^2_sup)),
/// real halfwidth sqrt(max(0, -N^2_inf)).
SpectrumSet s1_bound(const model::PlanetModel& m);

/// Full-spectrum region for a caller-provided coercivity lower bound gamma.
SpectrumSet ds_region(const model::PlanetModel& m, double gamma);

/// True iff lambda lies within tol (complex-plane distance, regions inflated
/// by tol) of the set.
bool contains(const SpectrumSet& set, Complex lambda, double tol);

/// JSON schema {"real":[[a,b],...],"imag":[[a,b],...],"ds":{...}|null};
/// parse(export(s)) == s exactly. An optional "schema" key is ignored.
std::string export_set(const SpectrumSet& set);
SpectrumSet parse_set(const std::string& json_text);

}  // namespace gispec::specsets
