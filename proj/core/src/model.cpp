#include "gispec/model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "gispec/sampling.hpp"
#include "json.hpp"

namespace gispec::model {

using nlohmann::json;

double ProfileSpec::eval(double r) const {
  switch (kind) {
    case Kind::kConstant:
      return value;
    case Kind::kPolynomialR: {
      double acc = 0.0;
      for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * r + *it;
      return acc;
    }
    case Kind::kTableR: {
      if (r <= r_grid.front()) {
        // Extrapolate with the first segment slope.
        const double slope = (v_grid[1] - v_grid[0]) / (r_grid[1] - r_grid[0]);
        return v_grid[0] + slope * (r - r_grid[0]);
      }
      if (r >= r_grid.back()) {
        const std::size_t n = r_grid.size();
        const double slope = (v_grid[n - 1] - v_grid[n - 2]) / (r_grid[n - 1] - r_grid[n - 2]);
        return v_grid[n - 1] + slope * (r - r_grid[n - 1]);
      }
      const auto it = std::upper_bound(r_grid.begin(), r_grid.end(), r);
      const std::size_t hi = static_cast<std::size_t>(it - r_grid.begin());
      const std::size_t lo = hi - 1;
      const double w = (r - r_grid[lo]) / (r_grid[hi] - r_grid[lo]);
      return (1.0 - w) * v_grid[lo] + w * v_grid[hi];
    }
  }
  return 0.0;
}

double ProfileSpec::deriv(double r) const {
  switch (kind) {
    case Kind::kConstant:
      return 0.0;
    case Kind::kPolynomialR: {
      double acc = 0.0;
      for (std::size_t i = coeffs.size(); i-- > 1;) {
        acc = acc * r + static_cast<double>(i) * coeffs[i];
      }
      return acc;
    }
    case Kind::kTableR: {
      std::size_t hi = 1;
      if (r >= r_grid.back()) {
        hi = r_grid.size() - 1;
      } else if (r > r_grid.front()) {
        hi = static_cast<std::size_t>(std::upper_bound(r_grid.begin(), r_grid.end(), r) -
                                      r_grid.begin());
      }
      return (v_grid[hi] - v_grid[hi - 1]) / (r_grid[hi] - r_grid[hi - 1]);
    }
  }
  return 0.0;
}

double Domain::level(const Vec3& x) const {
  if (ball) return x.squaredNorm() - 1.0;
  const Vec3 s = x.cwiseQuotient(semi_axes);
  return s.squaredNorm() - 1.0;
}

Vec3 Domain::level_gradient(const Vec3& x) const {
  if (ball) return 2.0 * x;
  return 2.0 * x.cwiseQuotient(semi_axes.cwiseProduct(semi_axes));
}

bool Domain::contains(const Vec3& x, double tol) const { return level(x) <= tol; }

double Domain::boundary_distance(const Vec3& x) const {
  const double f = level(x);
  const double g = level_gradient(x).norm();
  if (g == 0.0) return std::abs(f);  // only at the center
  return std::abs(f) / g;
}

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ModelError("model config: " + path + ": " + what);
}

ProfileSpec parse_profile(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object with a \"kind\" field");
  if (!j.contains("kind") || !j["kind"].is_string()) fail(path + ".kind", "missing or not a string");
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "constant") {
    if (!j.contains("value") || !j["value"].is_number()) fail(path + ".value", "missing or not a number");
    return ProfileSpec::constant(j["value"].get<double>());
  }
  if (kind == "polynomial_r") {
    if (!j.contains("coeffs") || !j["coeffs"].is_array() || j["coeffs"].empty()) {
      fail(path + ".coeffs", "missing or empty array");
    }
    std::vector<double> c;
    for (const auto& e : j["coeffs"]) {
      if (!e.is_number()) fail(path + ".coeffs", "non-numeric entry");
      c.push_back(e.get<double>());
    }
    return ProfileSpec::polynomial(std::move(c));
  }
  if (kind == "table_r") {
    if (!j.contains("r") || !j["r"].is_array()) fail(path + ".r", "missing array");
    if (!j.contains("v") || !j["v"].is_array()) fail(path + ".v", "missing array");
    std::vector<double> r, v;
    for (const auto& e : j["r"]) r.push_back(e.get<double>());
    for (const auto& e : j["v"]) v.push_back(e.get<double>());
    if (r.size() != v.size()) fail(path, "r and v must have equal length");
    if (r.size() < 2) fail(path + ".r", "need at least two knots");
    for (std::size_t i = 1; i < r.size(); ++i) {
      if (!(r[i] > r[i - 1])) fail(path + ".r", "knots must be strictly increasing");
    }
    if (r.front() > 0.0 + 1e-12) fail(path + ".r", "grid must start at r = 0");
    return ProfileSpec::table(std::move(r), std::move(v));
  }
  fail(path + ".kind", "unknown kind \"" + kind + "\"");
}

Vec3 parse_vec3(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 3) fail(path, "expected an array of three numbers");
  Vec3 v;
  for (int i = 0; i < 3; ++i) {
    if (!j[i].is_number()) fail(path, "non-numeric entry");
    v(i) = j[i].get<double>();
  }
  return v;
}

json profile_to_json(const ProfileSpec& p) {
  json j;
  switch (p.kind) {
    case ProfileSpec::Kind::kConstant:
      j["kind"] = "constant";
      j["value"] = p.value;
      break;
    case ProfileSpec::Kind::kPolynomialR:
      j["kind"] = "polynomial_r";
      j["coeffs"] = p.coeffs;
      break;
    case ProfileSpec::Kind::kTableR:
      j["kind"] = "table_r";
      j["r"] = p.r_grid;
      j["v"] = p.v_grid;
      break;
  }
  return j;
}

}  // namespace

PlanetModel load_model(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ModelError(std::string("model config: JSON parse error: ") + e.what());
  }
  if (!doc.is_object()) throw ModelError("model config: top level must be an object");

  PlanetModel m;
  if (!doc.contains("omega")) fail("omega", "missing");
  m.omega = parse_vec3(doc["omega"], "omega");

  if (!doc.contains("domain")) fail("domain", "missing");
  const auto& dj = doc["domain"];
  if (dj.is_string() && dj.get<std::string>() == "unit_ball") {
    m.domain.ball = true;
  } else if (dj.is_object() && dj.contains("ellipsoid")) {
    m.domain.ball = false;
    m.domain.semi_axes = parse_vec3(dj["ellipsoid"], "domain.ellipsoid");
    if (m.domain.semi_axes.minCoeff() <= 0.0) fail("domain.ellipsoid", "semi-axes must be positive");
  } else {
    fail("domain", "expected \"unit_ball\" or {\"ellipsoid\":[a,b,c]}");
  }

  for (const char* field : {"rho0", "csq", "nsq"}) {
    if (!doc.contains(field)) fail(field, "missing");
  }
  m.rho0 = parse_profile(doc["rho0"], "rho0");
  m.csq = parse_profile(doc["csq"], "csq");
  m.nsq = parse_profile(doc["nsq"], "nsq");

  if (!doc.contains("gravity")) fail("gravity", "missing");
  const auto& gj = doc["gravity"];
  if (!gj.is_object() || !gj.contains("mode") || !gj["mode"].is_string()) {
    fail("gravity.mode", "missing or not a string");
  }
  const std::string mode = gj["mode"].get<std::string>();
  if (mode == "radial") {
    m.gravity.mode = Gravity::Mode::kRadial;
    if (!gj.contains("profile")) fail("gravity.profile", "missing");
    m.gravity.profile = parse_profile(gj["profile"], "gravity.profile");
  } else if (mode == "constant") {
    m.gravity.mode = Gravity::Mode::kConstant;
    if (!gj.contains("vector")) fail("gravity.vector", "missing");
    m.gravity.vector = parse_vec3(gj["vector"], "gravity.vector");
  } else {
    fail("gravity.mode", "unknown mode \"" + mode + "\"");
  }

  if (doc.contains("gravity_const")) {
    if (!doc["gravity_const"].is_number()) fail("gravity_const", "not a number");
    m.gravity_const = doc["gravity_const"].get<double>();
  }

  // Tables must cover the closed domain.
  const double rmax = m.domain.max_radius();
  for (const auto* p : {&m.rho0, &m.csq, &m.nsq}) {
    if (p->kind == ProfileSpec::Kind::kTableR && p->r_grid.back() < rmax - 1e-12) {
      throw ModelError("model config: table_r grid does not cover the domain radius " +
                       std::to_string(rmax));
    }
  }
  if (m.gravity.mode == Gravity::Mode::kRadial &&
      m.gravity.profile.kind == ProfileSpec::Kind::kTableR &&
      m.gravity.profile.r_grid.back() < rmax - 1e-12) {
    throw ModelError("model config: gravity.profile table does not cover the domain radius");
  }

  // c^2 must be positive everywhere; check a radial validation grid.
  for (int i = 0; i <= 64; ++i) {
    const double r = rmax * static_cast<double>(i) / 64.0;
    if (!(m.csq.eval(r) > 0.0)) {
      throw ModelError("model config: csq: non-positive value " + std::to_string(m.csq.eval(r)) +
                       " at r = " + std::to_string(r));
    }
  }
  return m;
}

PlanetModel load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot open model file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_model(ss.str());
}

std::string model_to_json(const PlanetModel& m) {
  json doc;
  doc["omega"] = {m.omega.x(), m.omega.y(), m.omega.z()};
  if (m.domain.ball) {
    doc["domain"] = "unit_ball";
  } else {
    doc["domain"] = {{"ellipsoid",
                      {m.domain.semi_axes.x(), m.domain.semi_axes.y(), m.domain.semi_axes.z()}}};
  }
  doc["rho0"] = profile_to_json(m.rho0);
  doc["csq"] = profile_to_json(m.csq);
  doc["nsq"] = profile_to_json(m.nsq);
  if (m.gravity.mode == Gravity::Mode::kRadial) {
    doc["gravity"] = {{"mode", "radial"}, {"profile", profile_to_json(m.gravity.profile)}};
  } else {
    doc["gravity"] = {{"mode", "constant"},
                      {"vector", {m.gravity.vector.x(), m.gravity.vector.y(), m.gravity.vector.z()}}};
  }
  doc["gravity_const"] = m.gravity_const;
  return doc.dump(2);
}

BackgroundSample eval_background_unchecked(const PlanetModel& m, const Vec3& x) {
  BackgroundSample s;
  s.x = x;
  const double r = x.norm();
  s.rho0 = m.rho0.eval(r);
  s.csq = m.csq.eval(r);
  s.nsq = m.nsq.eval(r);

  if (m.gravity.mode == Gravity::Mode::kConstant) {
    s.g = m.gravity.vector;
  } else {
    // Radial magnitude profile times the inward unit radial direction; the
    // field is taken to vanish at the center.
    s.g = r > 0.0 ? Vec3(-m.gravity.profile.eval(r) * x / r) : Vec3(0.0, 0.0, 0.0);
  }
  const double gn = s.g.norm();
  s.g_defined = gn > 0.0;
  s.ghat = s.g_defined ? Vec3(s.g / gn) : Vec3(0.0, 0.0, 0.0);

  if (s.nsq == 0.0) {
    s.stilde = Vec3(0.0, 0.0, 0.0);
  } else {
    if (!s.g_defined) {
      throw ModelError("eval_background: N^2 != 0 where |g| = 0, gravity direction undefined");
    }
    // N^2 = (stilde . g) / rho0 with stilde parallel to g.
    s.stilde = (s.rho0 * s.nsq / gn) * s.ghat;
  }
  return s;
}

BackgroundSample eval_background(const PlanetModel& m, const Vec3& x) {
  if (!m.domain.contains(x, 1e-9)) {
    throw ModelError("eval_background: point outside the closed domain");
  }
  return eval_background_unchecked(m, x);
}

ValidationReport validate_hydrostatic(const PlanetModel& m, int samples) {
  if (samples < 1) throw ModelError("validate_hydrostatic: samples must be >= 1");
  ValidationReport rep;

  const double h = 1e-5 * m.domain.max_radius();
  auto grad_rho = [&](const Vec3& x) {
    Vec3 g;
    for (int i = 0; i < 3; ++i) {
      Vec3 dx = Vec3::Zero();
      dx(i) = h;
      g(i) = (eval_background_unchecked(m, x + dx).rho0 -
              eval_background_unchecked(m, x - dx).rho0) /
             (2.0 * h);
    }
    return g;
  };
  auto angle = [](const Vec3& a, const Vec3& b) {
    const double na = a.norm(), nb = b.norm();
    if (na == 0.0 || nb == 0.0) return 0.0;  // zero vectors treated as parallel
    const double s = std::min(1.0, a.cross(b).norm() / (na * nb));
    return std::asin(s);
  };

  // Interior grid: product grid over the unit ball scaled into the domain
  // (shrunk slightly so finite-difference probes stay well defined).
  const auto interior = ball_product_grid(samples, m.omega);
  for (const auto& p : interior) {
    const Vec3 x = m.domain.ball ? Vec3(0.98 * p) : Vec3(0.98 * p.cwiseProduct(m.domain.semi_axes));
    const auto s = eval_background_unchecked(m, x);
    rep.max_interior_misalignment =
        std::max(rep.max_interior_misalignment, angle(s.g, grad_rho(x)));
    ++rep.interior_samples;
  }

  const auto sphere = sphere_product_grid(std::max(8, samples / 4), m.omega);
  bool first = true;
  for (const auto& p : sphere) {
    const Vec3 x = m.domain.ball ? p : Vec3(p.cwiseProduct(m.domain.semi_axes));
    const auto s = eval_background_unchecked(m, x);
    const Vec3 n_out = m.domain.level_gradient(x).normalized();
    rep.max_boundary_misalignment = std::max(rep.max_boundary_misalignment, angle(s.g, n_out));
    // Lemma-style sign check g . n < 0 with the outward normal.
    const double neg = -s.g.dot(n_out);
    rep.min_neg_g_dot_n = first ? neg : std::min(rep.min_neg_g_dot_n, neg);
    first = false;
    ++rep.boundary_samples;
  }

  rep.interior_pass = rep.max_interior_misalignment <= 1e-6;
  rep.boundary_pass = rep.max_boundary_misalignment <= 1e-6 && rep.min_neg_g_dot_n > 0.0;
  return rep;
}

Vec3 boundary_normal(const PlanetModel& m, const Vec3& x) {
  if (m.domain.boundary_distance(x) > 1e-8) {
    throw ModelError("boundary_normal: point is not on the boundary");
  }
  return -m.domain.level_gradient(x).normalized();
}

}  // namespace gispec::model
