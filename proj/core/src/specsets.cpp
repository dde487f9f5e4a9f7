#include "gispec/specsets.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gispec/boundary.hpp"
#include "gispec/parallel.hpp"
#include "gispec/sampling.hpp"
#include "gispec/symbol.hpp"
#include "json.hpp"

namespace gispec::specsets {

using nlohmann::json;

double AxisIntervalUnion::distance(double t) const {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& [lo, hi] : intervals) {
    if (t < lo) {
      best = std::min(best, lo - t);
    } else if (t > hi) {
      best = std::min(best, t - hi);
    } else {
      return 0.0;
    }
  }
  return best;
}

void IntervalAccumulator::add(double lo, double hi) {
  if (lo > hi) std::swap(lo, hi);
  raw_.emplace_back(lo, hi);
}

void IntervalAccumulator::add_symmetric(double lo, double hi) {
  add(lo, hi);
  add(-hi, -lo);
}

AxisIntervalUnion IntervalAccumulator::merged(double rel_gap_tol) const {
  AxisIntervalUnion out{axis_, {}};
  if (raw_.empty()) return out;
  auto sorted = raw_;
  std::sort(sorted.begin(), sorted.end());
  double scale = 0.0;
  for (const auto& [lo, hi] : sorted) scale = std::max({scale, std::abs(lo), std::abs(hi)});
  const double gap = rel_gap_tol * scale;

  auto [cur_lo, cur_hi] = sorted.front();
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    const auto& [lo, hi] = sorted[i];
    if (lo <= cur_hi + gap) {
      cur_hi = std::max(cur_hi, hi);
    } else {
      out.intervals.emplace_back(cur_lo, cur_hi);
      cur_lo = lo;
      cur_hi = hi;
    }
  }
  out.intervals.emplace_back(cur_lo, cur_hi);
  return out;
}

namespace {

Vec3 to_domain(const model::PlanetModel& m, const Vec3& unit_point) {
  return m.domain.ball ? unit_point : Vec3(unit_point.cwiseProduct(m.domain.semi_axes));
}

}  // namespace

SpectrumSet essential_spectrum(const model::PlanetModel& m, int interior_samples,
                               int boundary_samples) {
  if (interior_samples < 1 || boundary_samples < 1) {
    throw std::invalid_argument("essential_spectrum: sample counts must be >= 1");
  }
  const auto interior = ball_product_grid(interior_samples, m.omega);
  const auto sphere = sphere_product_grid(boundary_samples, m.omega);

  // Per-point interval data, computed in parallel, reduced in order.
  struct Item {
    double real_hw, im_lo, im_hi;
  };
  std::vector<Item> in_items(interior.size());
  parallel_for(interior.size(), [&](std::size_t i) {
    const Vec3 x = to_domain(m, interior[i]);
    const auto bg = model::eval_background(m, x);
    const auto [bm, bp] = symbol::beta_pm_fields(m.omega, bg.nsq, bg.ghat, bg.g_defined);
    in_items[i] = {std::sqrt(std::max(0.0, -bg.nsq)), std::sqrt(std::max(0.0, bm)), std::sqrt(bp)};
  });
  std::vector<double> bd_halfwidth(sphere.size());
  parallel_for(sphere.size(), [&](std::size_t i) {
    const Vec3 x = to_domain(m, sphere[i]);
    bd_halfwidth[i] = boundary::boundary_failure_interval(m, x).second;
  });

  IntervalAccumulator real_acc(Axis::kReal), imag_acc(Axis::kImaginary);
  for (const auto& it : in_items) {
    real_acc.add_symmetric(0.0, it.real_hw);
    imag_acc.add_symmetric(it.im_lo, it.im_hi);
  }
  for (const double h : bd_halfwidth) imag_acc.add_symmetric(0.0, h);

  SpectrumSet set;
  set.real_part = real_acc.merged();
  set.imag_part = imag_acc.merged();
  return set;
}

SpectrumSet s1_bound(const model::PlanetModel& m) {
  // N^2 extremes over a dense radial grid (profiles are radial).
  double nsq_min = std::numeric_limits<double>::infinity();
  double nsq_max = -nsq_min;
  const double rmax = m.domain.max_radius();
  for (int i = 0; i <= 4096; ++i) {
    const double v = m.nsq.eval(rmax * static_cast<double>(i) / 4096.0);
    nsq_min = std::min(nsq_min, v);
    nsq_max = std::max(nsq_max, v);
  }
  const double imag_hw = std::sqrt(4.0 * m.omega.squaredNorm() + std::max(0.0, nsq_max));
  const double real_hw = std::sqrt(std::max(0.0, -nsq_min));

  SpectrumSet set;
  set.real_part = AxisIntervalUnion{Axis::kReal, {{-real_hw, real_hw}}};
  set.imag_part = AxisIntervalUnion{Axis::kImaginary, {{-imag_hw, imag_hw}}};
  return set;
}

SpectrumSet ds_region(const model::PlanetModel& m, double gamma) {
  SpectrumSet set;
  set.ds_region = DsRegion{m.omega.norm(), std::max(0.0, -gamma)};
  return set;
}

bool contains(const SpectrumSet& set, Complex lambda, double tol) {
  if (tol < 0.0) throw std::invalid_argument("contains: tol must be >= 0");
  const double re = lambda.real(), im = lambda.imag();
  if (!set.real_part.empty() && std::hypot(set.real_part.distance(re), im) <= tol) return true;
  if (!set.imag_part.empty() && std::hypot(re, set.imag_part.distance(im)) <= tol) return true;
  if (set.ds_region) {
    if (std::abs(re) <= tol) return true;  // the imaginary-axis component
    const double r = std::sqrt(std::max(0.0, set.ds_region->disc_radius_sq));
    if (std::abs(im) <= set.ds_region->imag_band_halfwidth + tol && std::abs(lambda) <= r + tol) {
      return true;
    }
  }
  return false;
}

std::string export_set(const SpectrumSet& set) {
  json doc;
  auto dump_axis = [](const AxisIntervalUnion& u) {
    json arr = json::array();
    for (const auto& [lo, hi] : u.intervals) arr.push_back({lo, hi});
    return arr;
  };
  doc["real"] = dump_axis(set.real_part);
  doc["imag"] = dump_axis(set.imag_part);
  if (set.ds_region) {
    doc["ds"] = {{"imag_band_halfwidth", set.ds_region->imag_band_halfwidth},
                 {"disc_radius_sq", set.ds_region->disc_radius_sq}};
  } else {
    doc["ds"] = nullptr;
  }
  return doc.dump();
}

SpectrumSet parse_set(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(std::string("parse_set: ") + e.what());
  }
  SpectrumSet set;
  auto read_axis = [&](const char* key, Axis axis) {
    AxisIntervalUnion u{axis, {}};
    if (!doc.contains(key) || !doc[key].is_array()) {
      throw std::runtime_error(std::string("parse_set: missing array \"") + key + "\"");
    }
    for (const auto& e : doc[key]) {
      if (!e.is_array() || e.size() != 2) throw std::runtime_error("parse_set: bad interval");
      u.intervals.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
    return u;
  };
  set.real_part = read_axis("real", Axis::kReal);
  set.imag_part = read_axis("imag", Axis::kImaginary);
  if (doc.contains("ds") && !doc["ds"].is_null()) {
    set.ds_region = DsRegion{doc["ds"].at("imag_band_halfwidth").get<double>(),
                             doc["ds"].at("disc_radius_sq").get<double>()};
  }
  return set;
}

}  // namespace gispec::specsets
