#include "cli/svg.hpp"

#include <algorithm>
#include <cmath>

#include "cli/output.hpp"

namespace gispec::cli {

namespace {

constexpr double kSize = 640.0;
constexpr double kMargin = 48.0;

struct Mapper {
  double scale;
  double cx = kSize / 2.0, cy = kSize / 2.0;
  double x(double re) const { return cx + scale * re; }
  double y(double im) const { return cy - scale * im; }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

void line(std::string& s, const Mapper& m, double re0, double im0, double re1, double im1,
          const std::string& style) {
  s += "  <line x1=\"" + num(m.x(re0)) + "\" y1=\"" + num(m.y(im0)) + "\" x2=\"" +
       num(m.x(re1)) + "\" y2=\"" + num(m.y(im1)) + "\" " + style + "/>\n";
}

void cross_marker(std::string& s, const Mapper& m, Complex lam, const std::string& color) {
  const double px = m.x(lam.real()), py = m.y(lam.imag());
  const double r = 5.0;
  s += "  <path d=\"M " + num(px - r) + " " + num(py - r) + " L " + num(px + r) + " " +
       num(py + r) + " M " + num(px - r) + " " + num(py + r) + " L " + num(px + r) + " " +
       num(py - r) + "\" stroke=\"" + color + "\" stroke-width=\"1.6\" fill=\"none\"/>\n";
}

void draw_axis_set(std::string& s, const Mapper& m, const specsets::SpectrumSet& set,
                   const std::string& style) {
  for (const auto& [lo, hi] : set.real_part.intervals) {
    if (hi - lo < 1e-12) continue;  // degenerate point, the axes already show it
    line(s, m, lo, 0.0, hi, 0.0, style);
  }
  for (const auto& [lo, hi] : set.imag_part.intervals) {
    if (hi - lo < 1e-12) continue;
    line(s, m, 0.0, lo, 0.0, hi, style);
  }
}

double set_extent(const specsets::SpectrumSet& set) {
  double e = 0.0;
  for (const auto& [lo, hi] : set.real_part.intervals) e = std::max({e, std::abs(lo), std::abs(hi)});
  for (const auto& [lo, hi] : set.imag_part.intervals) e = std::max({e, std::abs(lo), std::abs(hi)});
  if (set.ds_region) {
    e = std::max({e, std::sqrt(std::max(0.0, set.ds_region->disc_radius_sq)),
                  set.ds_region->imag_band_halfwidth});
  }
  return e;
}

}  // namespace

std::string spectrum_svg(const std::vector<specsets::SpectrumSet>& sets,
                         const std::vector<Complex>& eigenvalues) {
  double extent = 1e-9;
  for (const auto& s : sets) extent = std::max(extent, set_extent(s));
  for (const auto& l : eigenvalues) extent = std::max({extent, std::abs(l.real()), std::abs(l.imag())});

  Mapper m{(kSize / 2.0 - kMargin) / extent};

  std::string s;
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kSize) + "\" height=\"" +
       num(kSize) + "\" viewBox=\"0 0 " + num(kSize) + " " + num(kSize) + "\">\n";
  s += "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // Axes.
  const std::string axis_style = "stroke=\"#888888\" stroke-width=\"1\"";
  line(s, m, -extent * 1.05, 0.0, extent * 1.05, 0.0, axis_style);
  line(s, m, 0.0, -extent * 1.05, 0.0, extent * 1.05, axis_style);

  // Dashed DS boundary: circle of radius sqrt(disc_radius_sq) clipped to the
  // band |Im| <= halfwidth, with the band edges drawn across the disc.
  for (const auto& set : sets) {
    if (!set.ds_region) continue;
    const double r = std::sqrt(std::max(0.0, set.ds_region->disc_radius_sq));
    const double w = set.ds_region->imag_band_halfwidth;
    const std::string dash = "stroke=\"#333333\" stroke-width=\"1.2\" stroke-dasharray=\"6 4\" fill=\"none\"";
    if (r <= 0.0) continue;
    if (w >= r) {
      s += "  <circle cx=\"" + num(m.cx) + "\" cy=\"" + num(m.cy) + "\" r=\"" +
           num(m.scale * r) + "\" " + dash + "/>\n";
    } else {
      const double chord = std::sqrt(r * r - w * w);
      // Right and left arcs between the band edges.
      auto arc = [&](double x0, double y0, double x1, double y1, int sweep) {
        s += "  <path d=\"M " + num(m.x(x0)) + " " + num(m.y(y0)) + " A " + num(m.scale * r) +
             " " + num(m.scale * r) + " 0 0 " + std::to_string(sweep) + " " + num(m.x(x1)) + " " +
             num(m.y(y1)) + "\" " + dash + "/>\n";
      };
      arc(chord, -w, chord, w, 0);
      arc(-chord, w, -chord, -w, 0);
      line(s, m, -chord, w, chord, w, dash);
      line(s, m, -chord, -w, chord, -w, dash);
    }
  }

  // Thin cross first (so thick segments overlay it).
  if (sets.size() > 1) {
    draw_axis_set(s, m, sets[1], "stroke=\"#000000\" stroke-width=\"2\"");
  }
  if (!sets.empty()) {
    draw_axis_set(s, m, sets[0], "stroke=\"#000000\" stroke-width=\"6\" stroke-linecap=\"butt\"");
  }

  for (const auto& lam : eigenvalues) {
    const bool inside = !sets.empty() && specsets::contains(sets[0], lam, 1e-9 * (1.0 + extent));
    cross_marker(s, m, lam, inside ? "#000000" : "#cc0000");
  }
  s += "</svg>\n";
  return s;
}

void render_spectrum_svg(const std::vector<specsets::SpectrumSet>& sets,
                         const std::vector<Complex>& eigenvalues, const std::string& path) {
  write_text_file(path, spectrum_svg(sets, eigenvalues));
}

}  // namespace gispec::cli
