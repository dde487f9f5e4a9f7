#include "gispec/model.hpp"

#include <cstring>

#include "doctest.h"
#include "gispec/rng.hpp"
#include "helpers.hpp"

using namespace gispec;

namespace {

const char* kPoincareJson = R"({
  "omega": [0, 0, 1],
  "domain": "unit_ball",
  "rho0": {"kind": "constant", "value": 1.0},
  "csq": {"kind": "constant", "value": 1.0},
  "nsq": {"kind": "constant", "value": 0.0},
  "gravity": {"mode": "radial", "profile": {"kind": "polynomial_r", "coeffs": [0.0, 1.0]}}
})";

}  // namespace

TEST_CASE("load_model parses the neutrally buoyant ball") {
  const auto m = model::load_model(kPoincareJson);
  CHECK(m.domain.ball);
  CHECK(m.omega.z() == 1.0);
  const auto s = model::eval_background(m, Vec3(0.5, 0, 0));
  CHECK(s.nsq == 0.0);
  CHECK(s.stilde.norm() == 0.0);
  CHECK(s.g_defined);
  CHECK((s.g - Vec3(-0.5, 0, 0)).norm() < 1e-15);
}

TEST_CASE("load_model accepts constant-direction gravity and negative N^2") {
  const char* text = R"({
    "omega": [0, 0, 0.5],
    "domain": "unit_ball",
    "rho0": {"kind": "constant", "value": 2.0},
    "csq": {"kind": "constant", "value": 1.5},
    "nsq": {"kind": "constant", "value": -4.0},
    "gravity": {"mode": "constant", "vector": [0, 0, -1]}
  })";
  const auto m = model::load_model(text);
  const auto s = model::eval_background(m, Vec3(0.1, 0.2, 0.3));
  CHECK(s.nsq == -4.0);
  CHECK(s.ghat.z() == -1.0);
}

TEST_CASE("load_model reports the offending field path") {
  CHECK_THROWS_WITH_AS(model::load_model(R"({"domain":"unit_ball"})"),
                       doctest::Contains("omega"), model::ModelError);
  CHECK_THROWS_WITH_AS(model::load_model(R"({
    "omega": [0,0,1], "domain": "unit_ball",
    "rho0": {"kind": "nope"},
    "csq": {"kind":"constant","value":1}, "nsq": {"kind":"constant","value":0},
    "gravity": {"mode":"constant","vector":[0,0,-1]}
  })"),
                       doctest::Contains("rho0"), model::ModelError);
}

TEST_CASE("load_model rejects non-positive csq") {
  const char* text = R"({
    "omega": [0, 0, 0],
    "domain": "unit_ball",
    "rho0": {"kind": "constant", "value": 1.0},
    "csq": {"kind": "polynomial_r", "coeffs": [1.0, -2.0]},
    "nsq": {"kind": "constant", "value": 0.0},
    "gravity": {"mode": "constant", "vector": [0, 0, -1]}
  })";
  CHECK_THROWS_AS(model::load_model(text), model::ModelError);
}

TEST_CASE("table profiles interpolate linearly and must cover the domain") {
  const char* text = R"({
    "omega": [0, 0, 0],
    "domain": "unit_ball",
    "rho0": {"kind": "table_r", "r": [0.0, 0.5, 1.0], "v": [2.0, 1.5, 1.0]},
    "csq": {"kind": "constant", "value": 1.0},
    "nsq": {"kind": "constant", "value": 0.0},
    "gravity": {"mode": "constant", "vector": [0, 0, -1]}
  })";
  const auto m = model::load_model(text);
  CHECK(m.rho0.eval(0.25) == doctest::Approx(1.75).epsilon(1e-14));
  CHECK(m.rho0.eval(0.5) == doctest::Approx(1.5).epsilon(1e-14));

  const char* short_table = R"({
    "omega": [0, 0, 0],
    "domain": "unit_ball",
    "rho0": {"kind": "table_r", "r": [0.0, 0.5], "v": [2.0, 1.5]},
    "csq": {"kind": "constant", "value": 1.0},
    "nsq": {"kind": "constant", "value": 0.0},
    "gravity": {"mode": "constant", "vector": [0, 0, -1]}
  })";
  CHECK_THROWS_AS(model::load_model(short_table), model::ModelError);
}

TEST_CASE("eval_background constant-ghat stilde matches the defining identity") {
  // ghat = (0,0,-1), N^2 = 1, rho0 = 1, |g| = 1 -> stilde = (0,0,-1).
  const auto m = testing::constant_g_model(1.0, Vec3(0, 0, -1));
  const auto s = model::eval_background(m, Vec3(0.2, -0.1, 0.4));
  CHECK((s.stilde - Vec3(0, 0, -1)).norm() < 1e-14);
}

TEST_CASE("eval_background at the center of a radial model") {
  const auto m = testing::poincare_model();
  const auto s = model::eval_background(m, Vec3(0, 0, 0));
  CHECK(s.g.norm() == 0.0);
  CHECK(!s.g_defined);
  CHECK(s.stilde.norm() == 0.0);
}

TEST_CASE("eval_background errors") {
  const auto m = testing::poincare_model();
  CHECK_THROWS_AS(model::eval_background(m, Vec3(1.5, 0, 0)), model::ModelError);

  // |g| = 0 with N^2 != 0 at the center.
  auto bad = testing::radial_model(4.0);
  CHECK_THROWS_AS(model::eval_background(bad, Vec3(0, 0, 0)), model::ModelError);
}

TEST_CASE("eval_background is deterministic") {
  const auto m = testing::radial_model(2.5, Vec3(0.3, 0.2, 0.9));
  const Vec3 x(0.31, -0.22, 0.17);
  const auto s1 = model::eval_background(m, x);
  const auto s2 = model::eval_background(m, x);
  CHECK(std::memcmp(&s1.rho0, &s2.rho0, sizeof(double)) == 0);
  CHECK(s1.g == s2.g);
  CHECK(s1.stilde == s2.stilde);
}

TEST_CASE("N^2 reconstruction identity over random samples") {
  Rng rng(17);
  model::PlanetModel m = testing::radial_model(0.0);
  m.nsq = model::ProfileSpec::polynomial({1.0, 0.5, -0.25});
  m.rho0 = model::ProfileSpec::polynomial({2.0, 0.0, -0.5});
  for (int i = 0; i < 200; ++i) {
    Vec3 x = rng.in_ball();
    while (x.norm() < 1e-3) x = rng.in_ball();
    const auto s = model::eval_background(m, x);
    const double recon = s.stilde.dot(s.g) / s.rho0;
    CHECK(std::abs(recon - s.nsq) <= 1e-10 * std::max(1.0, std::abs(s.nsq)));
  }
}

TEST_CASE("validate_hydrostatic co-radial fields pass") {
  model::PlanetModel m = testing::poincare_model();
  m.rho0 = model::ProfileSpec::polynomial({2.0, 0.0, -1.0});  // radial, decreasing
  const auto rep = model::validate_hydrostatic(m, 200);
  CHECK(rep.interior_pass);
  CHECK(rep.boundary_pass);
  CHECK(rep.max_interior_misalignment <= 1e-6);
  CHECK(rep.min_neg_g_dot_n > 0.0);
}

TEST_CASE("validate_hydrostatic constant-direction gravity fails at the boundary") {
  const auto m = testing::constant_g_model(0.0, Vec3(0, 0, -1));
  const auto rep = model::validate_hydrostatic(m, 200);
  CHECK(!rep.boundary_pass);
  CHECK(rep.max_boundary_misalignment > 1e-3);
}

TEST_CASE("validate_hydrostatic constant rho0 interior passes for any gravity") {
  const auto m = testing::constant_g_model(0.0, Vec3(0.3, -0.5, -0.8));
  const auto rep = model::validate_hydrostatic(m, 100);
  CHECK(rep.interior_pass);
}

TEST_CASE("boundary_normal ball and ellipsoid") {
  const auto ball = testing::poincare_model();
  CHECK((model::boundary_normal(ball, Vec3(1, 0, 0)) - Vec3(-1, 0, 0)).norm() < 1e-14);
  CHECK((model::boundary_normal(ball, Vec3(0, 0, -1)) - Vec3(0, 0, 1)).norm() < 1e-14);

  model::PlanetModel ell = ball;
  ell.domain.ball = false;
  ell.domain.semi_axes = Vec3(2, 1, 1);
  CHECK((model::boundary_normal(ell, Vec3(2, 0, 0)) - Vec3(-1, 0, 0)).norm() < 1e-14);

  CHECK_THROWS_AS(model::boundary_normal(ball, Vec3(0.5, 0, 0)), model::ModelError);
}

TEST_CASE("model JSON round trip") {
  const auto m = model::load_model(kPoincareJson);
  const auto m2 = model::load_model(model::model_to_json(m));
  CHECK(m2.omega == m.omega);
  CHECK(m2.gravity.mode == m.gravity.mode);
  CHECK(m2.gravity.profile.coeffs == m.gravity.profile.coeffs);
}
