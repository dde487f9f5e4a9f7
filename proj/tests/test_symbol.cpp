#include "gispec/symbol.hpp"

#include "doctest.h"
#include "gispec/linalg.hpp"
#include "gispec/rng.hpp"
#include "helpers.hpp"

using namespace gispec;

TEST_CASE("projector_perp closed forms and identities") {
  const Mat3 pz = symbol::projector_perp(Vec3(0, 0, 1));
  CHECK((pz - Vec3(1, 1, 0).asDiagonal().toDenseMatrix()).norm() < 1e-15);

  Mat3 expected;
  expected << 0.5, -0.5, 0, -0.5, 0.5, 0, 0, 0, 1;
  CHECK((symbol::projector_perp(Vec3(1, 1, 0) / std::sqrt(2.0)) - expected).norm() < 1e-14);

  Rng rng(2);
  for (int i = 0; i < 50; ++i) {
    const Vec3 xi = 3.0 * rng.unit_vector();
    const Mat3 p = symbol::projector_perp(xi);
    CHECK((p * p - p).norm() < 1e-14);
    CHECK((p - p.transpose()).norm() == 0.0);
    CHECK((p * xi).norm() < 1e-14 * xi.norm());
    CHECK(std::abs(p.trace() - 2.0) < 1e-14);
  }
  CHECK_THROWS_AS(symbol::projector_perp(Vec3::Zero()), std::invalid_argument);
}

TEST_CASE("symbol_matrix structure and rank oracle at the Poincare point") {
  const auto m = testing::poincare_model();  // Omega = z, N^2 = 0
  const Vec3 x(0.3, 0.1, -0.2);
  const Vec3 xi(0, 0, 1);

  // lambda = 0, N^2 = 0 gives the zero matrix.
  CHECK(symbol::symbol_matrix(m, x, xi, Complex(0, 0)).matrix.norm() < 1e-15);

  // sigma_pt = {0, +-2i}; lambda = i keeps rank two, lambda = 2i drops it.
  const auto at_i = symbol::symbol_matrix(m, x, xi, Complex(0, 1));
  CHECK(symbol::rank_deficiency_ratio(at_i.matrix) > 1e-3);
  const auto at_2i = symbol::symbol_matrix(m, x, xi, Complex(0, 2));
  CHECK(symbol::rank_deficiency_ratio(at_2i.matrix) < 1e-12);

  // The map factors through the perpendicular projector on both sides.
  Rng rng(4);
  for (int i = 0; i < 30; ++i) {
    const Vec3 xr = rng.in_ball(0.9);
    const Vec3 xir = rng.unit_vector() * rng.uniform(0.5, 2.0);
    const Complex lam = rng.complex_in_box(2.0);
    const auto ps = symbol::symbol_matrix(m, xr, xir, lam);
    const double scale = ps.matrix.norm() + 1e-300;
    CHECK((ps.matrix * xir.cast<Complex>()).norm() < 1e-12 * scale * xir.norm());
    CHECK((xir.cast<Complex>().transpose() * ps.matrix).norm() < 1e-12 * scale * xir.norm());
  }
}

TEST_CASE("sigma_pt closed forms") {
  const auto poincare = testing::poincare_model();
  const Vec3 x(0.2, 0.0, 0.1);

  auto s = symbol::sigma_pt(poincare, x, Vec3(0, 0, 1));
  CHECK(testing::multiset_distance(s.values, {Complex(0, 0), Complex(0, 2), Complex(0, -2)}) <
        1e-14);

  s = symbol::sigma_pt(poincare, x, Vec3(1, 0, 0));
  CHECK(s.values.size() == 1);
  CHECK(std::abs(s.values[0]) == 0.0);

  // Pure buoyancy, stable: imaginary pair at +-2i.
  const auto stable = testing::constant_g_model(4.0, Vec3(0, 0, 1));
  s = symbol::sigma_pt(stable, x, Vec3(1, 0, 0));
  CHECK(testing::multiset_distance(s.values, {Complex(0, 0), Complex(0, 2), Complex(0, -2)}) <
        1e-14);

  // Unstable: real pair.
  const auto unstable = testing::constant_g_model(-4.0, Vec3(0, 0, 1));
  s = symbol::sigma_pt(unstable, x, Vec3(1, 0, 0));
  CHECK(testing::multiset_distance(s.values, {Complex(0, 0), Complex(2, 0), Complex(-2, 0)}) <
        1e-14);
}

TEST_CASE("sigma_pt is scale invariant in xi") {
  Rng rng(6);
  const auto m = testing::constant_g_model(2.0, Vec3(0, 1, -1), Vec3(0.4, 0, 0.9));
  const Vec3 x(0.1, 0.3, -0.2);
  for (int i = 0; i < 40; ++i) {
    const Vec3 xi = rng.unit_vector();
    const double c = rng.uniform(-3.0, 3.0);
    if (std::abs(c) < 1e-3) continue;
    const auto a = symbol::sigma_pt(m, x, xi);
    const auto b = symbol::sigma_pt(m, x, c * xi);
    CHECK(testing::multiset_distance(a.values, b.values) < 1e-12);
  }
}

TEST_CASE("beta_pm closed forms") {
  // Omega perpendicular to ghat, |Omega| = 1, N^2 = 1 -> (0, 5).
  const auto perp = testing::constant_g_model(1.0, Vec3(1, 0, 0), Vec3(0, 0, 1));
  auto [bm, bp] = symbol::beta_pm(perp, Vec3(0.1, 0, 0));
  CHECK(bm == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(bp == doctest::Approx(5.0).epsilon(1e-14));

  // Omega parallel to ghat -> (min, max)(4|Omega|^2, N^2) = (1, 4).
  const auto par = testing::constant_g_model(1.0, Vec3(0, 0, 1), Vec3(0, 0, 1));
  std::tie(bm, bp) = symbol::beta_pm(par, Vec3(0.1, 0, 0));
  CHECK(bm == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(bp == doctest::Approx(4.0).epsilon(1e-13));

  // N^2 = 0 -> (0, 4 |Omega|^2).
  const auto neutral = testing::poincare_model();
  std::tie(bm, bp) = symbol::beta_pm(neutral, Vec3(0.1, 0, 0));
  CHECK(bm == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(bp == doctest::Approx(4.0).epsilon(1e-14));
}

TEST_CASE("beta_pm matches the eigenvalues of the quadratic-form matrix") {
  Rng rng(8);
  for (int trial = 0; trial < 300; ++trial) {
    const Vec3 omega = rng.uniform(0.0, 2.0) * rng.unit_vector();
    const Vec3 ghat = rng.unit_vector();
    const double nsq = rng.uniform(-5.0, 5.0);

    const auto [bm, bp] = symbol::beta_pm_fields(omega, nsq, ghat, true);

    const Mat3 q = 4.0 * omega * omega.transpose() +
                   nsq * (Mat3::Identity() - ghat * ghat.transpose());
    const auto eig = linalg::eig_complex(q.cast<Complex>());
    const double scale = std::max({1.0, std::abs(bm), std::abs(bp), std::abs(nsq)});
    CHECK(testing::multiset_distance(testing::to_vector(eig.eigenvalues),
                                     {Complex(nsq, 0), Complex(bm, 0), Complex(bp, 0)}) <
          1e-10 * scale);
    // The spectral band brackets N^2 when N^2 >= 0.
    if (nsq >= 0.0) {
      CHECK(bm <= nsq + 1e-12 * scale);
      CHECK(nsq <= bp + 1e-12 * scale);
    }
  }
}

TEST_CASE("scalar Poincare symbol") {
  const auto m = testing::poincare_model();
  const Vec3 x(0.1, -0.3, 0.2);
  CHECK(std::abs(symbol::scalar_poincare_symbol(m, x, Vec3(0.4, 1.0, -0.2), Complex(0, 0))) == 0.0);

  // Direct substitution: Omega = z, N^2 = 0, xi = z, lambda = i -> 3.
  CHECK(std::abs(symbol::scalar_poincare_symbol(m, x, Vec3(0, 0, 1), Complex(0, 1)) -
                 Complex(3.0, 0.0)) < 1e-14);

  // Zeros in lambda coincide with sigma_pt.
  Rng rng(9);
  const auto strat = testing::constant_g_model(3.0, Vec3(0, 1, 1), Vec3(0.5, 0.2, 0.8));
  for (int i = 0; i < 40; ++i) {
    const Vec3 xi = rng.unit_vector() * rng.uniform(0.5, 2.0);
    const auto spec = symbol::sigma_pt(strat, x, xi);
    for (const auto& v : spec.values) {
      CHECK(std::abs(symbol::scalar_poincare_symbol(strat, x, xi, v)) < 1e-10);
    }
    const Complex off = spec.values.back() + Complex(0.2, 0.1);
    CHECK(std::abs(symbol::scalar_poincare_symbol(strat, x, xi, off)) > 1e-6);
  }
}

TEST_CASE("rank oracle agrees with the closed-form spectrum (sampled)") {
  Rng rng(10);
  int checks = 0;
  while (checks < 1500) {
    const Vec3 omega = rng.uniform(0.0, 1.5) * rng.unit_vector();
    const Vec3 ghat = rng.unit_vector();
    const double nsq = rng.uniform(-4.0, 4.0);
    const Vec3 xi = rng.unit_vector();

    const auto spec = symbol::sigma_pt_fields(omega, nsq, ghat, true, xi);
    for (const auto& v : spec.values) {
      const auto sym = symbol::symbol_matrix_fields(omega, nsq, ghat, true, xi, v);
      CHECK(symbol::rank_deficiency_ratio(sym) <= 1e-9);
      ++checks;
    }
    // Perturbed candidates must keep rank two.
    const Complex probe =
        spec.values[checks % spec.values.size()] +
        std::polar(rng.uniform(0.05, 0.5), rng.uniform(0.0, 2.0 * M_PI));
    const auto sym = symbol::symbol_matrix_fields(omega, nsq, ghat, true, xi, probe);
    CHECK(symbol::rank_deficiency_ratio(sym) > 1e-9);
    ++checks;
  }
}

TEST_CASE("sigma_pt real values appear for unstable stratification") {
  // xi orthogonal to ghat with Omega_xi = 0: radicand = N^2 < 0.
  const Vec3 ghat(0, 0, 1);
  const double nsq = -2.25;
  const auto s = symbol::sigma_pt_fields(Vec3::Zero(), nsq, ghat, true, Vec3(1, 0, 0));
  CHECK(testing::multiset_distance(s.values, {Complex(0, 0), Complex(1.5, 0), Complex(-1.5, 0)}) <
        1e-14);
}
