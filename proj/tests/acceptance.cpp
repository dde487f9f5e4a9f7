// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. The CLI binary path is supplied with --cli for the determinism
// checks.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli/output.hpp"
#include "gispec/boundary.hpp"
#include "gispec/galerkin.hpp"
#include "gispec/linalg.hpp"
#include "gispec/model.hpp"
#include "gispec/poly.hpp"
#include "gispec/rng.hpp"
#include "gispec/sampling.hpp"
#include "gispec/specialmodes.hpp"
#include "gispec/specsets.hpp"
#include "gispec/symbol.hpp"

using namespace gispec;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

model::PlanetModel poincare_model(const Vec3& omega = Vec3(0, 0, 1)) {
  model::PlanetModel m;
  m.omega = omega;
  m.gravity.mode = model::Gravity::Mode::kRadial;
  m.gravity.profile = model::ProfileSpec::polynomial({0.0, 1.0});
  return m;
}

model::PlanetModel radial_model(double nsq, const Vec3& omega) {
  auto m = poincare_model(omega);
  m.nsq = model::ProfileSpec::constant(nsq);
  return m;
}

model::PlanetModel constant_g_model(double nsq, const Vec3& ghat, const Vec3& omega) {
  model::PlanetModel m;
  m.omega = omega;
  m.nsq = model::ProfileSpec::constant(nsq);
  m.gravity.mode = model::Gravity::Mode::kConstant;
  m.gravity.vector = ghat.normalized();
  return m;
}

std::string fmt(double v) { return cli::format_double(v); }

// ---------------------------------------------------------------------------
// 1. Closed-form sigma_pt vs the SVD rank oracle, >= 1e4 draws, < 10 s.
Outcome criterion_1() {
  const auto t0 = std::chrono::steady_clock::now();
  Rng rng(101);
  int checks = 0, mismatches = 0;
  while (checks < 10000) {
    const Vec3 omega = rng.uniform(0.0, 2.0) * rng.unit_vector();
    const double nsq = rng.uniform(-5.0, 5.0);
    const Vec3 ghat = rng.unit_vector();
    const Vec3 xi = rng.uniform(0.5, 2.0) * rng.unit_vector();

    const auto spec = symbol::sigma_pt_fields(omega, nsq, ghat, true, xi);
    for (const auto& v : spec.values) {
      const auto sym = symbol::symbol_matrix_fields(omega, nsq, ghat, true, xi, v);
      if (symbol::rank_deficiency_ratio(sym) > 1e-9) ++mismatches;
      ++checks;
    }
    // A perturbed candidate must stay rank two: agreement means the oracle
    // flags exactly the closed-form set.
    const Complex probe = spec.values[checks % spec.values.size()] +
                          std::polar(rng.uniform(0.05, 0.4), rng.uniform(0.0, 2.0 * M_PI));
    const auto sym = symbol::symbol_matrix_fields(omega, nsq, ghat, true, xi, probe);
    if (symbol::rank_deficiency_ratio(sym) <= 1e-9) ++mismatches;
    ++checks;
  }
  const double dt = seconds_since(t0);
  return {mismatches == 0 && dt < 10.0,
          std::to_string(checks) + " checks, " + std::to_string(mismatches) + " mismatches, " +
              fmt(dt) + " s"};
}

// 2. beta_pm vs the eigenvalues of 4 Omega Omega^T + N^2 (I - ghat ghat^T).
Outcome criterion_2() {
  Rng rng(103);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    Vec3 omega = rng.uniform(0.0, 2.0) * rng.unit_vector();
    Vec3 ghat = rng.unit_vector();
    double nsq = rng.uniform(-5.0, 5.0);
    if (i % 10 == 0) {  // the Omega perpendicular ghat special case
      ghat = rng.unit_perp(omega.norm() > 0 ? omega : Vec3(0, 0, 1));
    }
    const auto [bm, bp] = symbol::beta_pm_fields(omega, nsq, ghat, true);
    const Mat3 q =
        4.0 * omega * omega.transpose() + nsq * (Mat3::Identity() - ghat * ghat.transpose());
    const auto eig = linalg::eig_complex(q.cast<Complex>());
    // Match {N^2, beta-, beta+} against the numerical spectrum.
    std::vector<Complex> expect = {Complex(nsq, 0), Complex(bm, 0), Complex(bp, 0)};
    std::vector<Complex> got(eig.eigenvalues.data(), eig.eigenvalues.data() + 3);
    const double scale = std::max({1.0, std::abs(nsq), std::abs(bm), std::abs(bp)});
    for (const auto& e : expect) {
      double best = 1e300;
      for (const auto& g : got) best = std::min(best, std::abs(e - g));
      worst = std::max(worst, best / scale);
    }
    if (i % 10 == 0 && omega.norm() > 0) {
      const double a = 4.0 * omega.squaredNorm() + nsq;
      worst = std::max({worst, std::abs(bm - std::min(0.0, a)) / scale,
                        std::abs(bp - std::max(0.0, a)) / scale});
    }
  }
  return {worst <= 1e-10, "max relative deviation " + fmt(worst)};
}

// 3. Closed-form Vtilde_n^-1 and indicator vs direct 3x3 inversion, 1e3 draws.
Outcome criterion_3() {
  Rng rng(107);
  double worst_inv = 0.0, worst_ind = 0.0;
  int done = 0;
  while (done < 1000) {
    const Vec3 omega = rng.uniform(0.0, 1.5) * rng.unit_vector();
    const double nsq = rng.uniform(-4.0, 4.0);
    const auto m = constant_g_model(nsq, rng.unit_vector(), omega);
    const Vec3 x = rng.unit_vector();
    const Complex lam(rng.uniform(0.3, 1.8), rng.uniform(0.3, 1.8));
    CMat3 closed;
    try {
      closed = boundary::vtilde_inverse(m, x, lam);
    } catch (const std::exception&) {
      continue;  // inadmissible draw (degenerate denominator)
    }
    const auto bg = model::eval_background(m, x);
    const CMat3 v = boundary::v_matrix(m.omega, bg.nsq, bg.ghat, bg.g_defined, lam);
    const Vec3 n = model::boundary_normal(m, x);
    const CMat3 vt = boundary::vtilde(v, n);
    const CMat3 direct = vt.inverse();
    worst_inv = std::max(worst_inv, (closed - direct).norm() / direct.norm());

    const Vec3 xihat = rng.unit_perp(n);
    const Complex ind = boundary::lopatinskii_indicator(m, x, xihat, lam);
    const Complex quad = xihat.cast<Complex>().transpose() * closed * xihat.cast<Complex>();
    worst_ind = std::max(worst_ind, std::abs(ind - quad) / std::max(1.0, std::abs(quad)));
    ++done;
  }
  return {worst_inv <= 1e-10 && worst_ind <= 1e-10,
          "max inverse deviation " + fmt(worst_inv) + ", indicator deviation " + fmt(worst_ind)};
}

// 4. 16x16 inverse identity over 100 draws; ODE-matrix clustering 7/7 + alpha.
Outcome criterion_4() {
  Rng rng(109);
  double worst = 0.0;
  int products = 0, clustered = 0, generic_draws = 0;
  while (products < 100) {
    const Vec3 omega = rng.uniform(0.2, 1.5) * rng.unit_vector();
    const double nsq = rng.uniform(-3.0, 3.0);
    const auto m = constant_g_model(nsq, rng.unit_vector(), omega);
    const Vec3 x = rng.unit_vector();
    const auto frame = boundary::make_frame(m, x, rng.unit_vector());
    const Vec3 xi = rng.uniform(0.5, 2.0) * rng.unit_vector();
    const Complex lam(rng.uniform(0.4, 1.6), rng.uniform(0.4, 1.6));
    const auto sym = boundary::assemble_big_symbol(m, frame, xi, lam);
    if (!sym.inverse) continue;
    worst = std::max(worst,
                     (sym.forward * (*sym.inverse) - Eigen::MatrixXcd::Identity(16, 16)).norm());
    ++products;

    if (generic_draws < 40) {
      try {
        const auto eigs = boundary::ode_matrix_eigs(m, frame, lam);
        if (eigs.generic) {
          ++generic_draws;
          if (eigs.clustering_ok) ++clustered;
        }
      } catch (const std::exception&) {
      }
    }
  }
  return {worst <= 1e-9 && generic_draws > 0 && clustered == generic_draws,
          "max |F F^-1 - I| " + fmt(worst) + ", clustering " + std::to_string(clustered) + "/" +
              std::to_string(generic_draws)};
}

// 5. Rigid modes: residuals, eigenvalue pattern, negative control.
Outcome criterion_5() {
  Rng rng(113);
  using specialmodes::RigidKind;
  const std::vector<RigidKind> kinds = {
      RigidKind::kAxialTranslation,        RigidKind::kAxialSpin,
      RigidKind::kEquatorialTranslationPlus, RigidKind::kEquatorialTranslationMinus,
      RigidKind::kTiltoverPlus,            RigidKind::kTiltoverMinus};
  double worst = 0.0;
  std::vector<Complex> pattern;
  const Vec3 omega = Vec3(0.4, -0.2, 1.1);
  const Vec3 a = rng.unit_perp(omega);
  for (const auto kind : kinds) {
    const auto mode = specialmodes::rigid_mode(omega, kind, a);
    pattern.push_back(mode.lambda);
    for (int i = 0; i < 100; ++i) {
      const Vec3 x = rng.in_ball();
      const double scale =
          omega.squaredNorm() * (mode.t.norm() + mode.k.norm() * x.norm()) + 1e-300;
      worst = std::max(worst, specialmodes::rigid_residual(omega, mode, x).norm() / scale);
    }
  }
  const double om = omega.norm();
  std::vector<Complex> expected = {Complex(0, 0),   Complex(0, 0),  Complex(0, om),
                                   Complex(0, -om), Complex(0, om), Complex(0, -om)};
  double pattern_err = 0.0;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    double best = 1e300;
    for (const auto& p : pattern) best = std::min(best, std::abs(p - expected[i]));
    pattern_err = std::max(pattern_err, best);
  }

  auto bad = specialmodes::rigid_mode(omega, RigidKind::kTiltoverPlus, a);
  bad.lambda += 0.1;
  double control = 0.0;
  for (int i = 0; i < 32; ++i) {
    const Vec3 x = rng.in_ball();
    const double scale = omega.squaredNorm() * (bad.t.norm() + bad.k.norm() * x.norm()) + 1e-300;
    control = std::max(control, specialmodes::rigid_residual(omega, bad, x).norm() / scale);
  }
  return {worst <= 1e-12 && pattern_err <= 1e-14 && control >= 1e-2,
          "max residual " + fmt(worst) + ", negative control " + fmt(control)};
}

// 6. Geostrophic residuals for 10 polynomial potentials on radial models.
Outcome criterion_6() {
  Rng rng(127);
  std::vector<poly::Polynomial> potentials;
  potentials.push_back(poly::Polynomial::variable(2));
  potentials.push_back(poly::Polynomial::monomial(2, 0, 0, 1.0) +
                       poly::Polynomial::monomial(0, 2, 0, 1.0));
  while (potentials.size() < 10) {
    poly::Polynomial p;
    for (int a = 0; a <= 2; ++a) {
      for (int b = 0; a + b <= 2; ++b) {
        for (int c = (a + b == 0) ? 1 : 0; a + b + c <= 2; ++c) {
          p = p + poly::Polynomial::monomial(a, b, c, rng.uniform(-1.0, 1.0));
        }
      }
    }
    potentials.push_back(p);
  }

  const std::vector<model::PlanetModel> models = {radial_model(1.0, Vec3(0, 0, 1)),
                                                  radial_model(-2.0, Vec3(0.2, 0.1, 0.9)),
                                                  radial_model(3.5, Vec3::Zero())};
  double worst = 0.0;
  for (const auto& m : models) {
    for (const auto& phi : potentials) {
      for (int i = 0; i < 40; ++i) {
        Vec3 x = rng.in_ball(0.98);
        while (x.norm() < 0.05) x = rng.in_ball(0.98);
        const auto res = specialmodes::geostrophic_residual(m, phi, x);
        worst = std::max({worst, std::abs(res.stilde_dot_u), std::abs(res.divergence_rho_u)});
      }
      const auto res = specialmodes::geostrophic_residual(m, phi, rng.unit_vector());
      if (res.boundary_div_u) worst = std::max(worst, std::abs(*res.boundary_div_u));
    }
  }
  return {worst <= 1e-10, "max residual " + fmt(worst)};
}

// 7. Degree-1 Poincare spectrum, exact to 1e-10, < 1 s.
Outcome criterion_7() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto basis = galerkin::build_basis(1);
  const auto pencil =
      galerkin::assemble_pencil(basis, Vec3(0, 0, 1), 0.0, galerkin::GhatMode::kConstant);
  const auto modes = galerkin::solve_modes(pencil);
  double worst = 0.0;
  double top = 0.0, bottom = 0.0;
  for (Eigen::Index i = 0; i < modes.eigenvalues.size(); ++i) {
    const Complex lam = modes.eigenvalues(i);
    worst = std::max(worst, std::min({std::abs(lam), std::abs(lam - Complex(0, 1)),
                                      std::abs(lam + Complex(0, 1))}));
    top = std::max(top, lam.imag());
    bottom = std::min(bottom, lam.imag());
  }
  const double dt = seconds_since(t0);
  const bool exact = worst <= 1e-10 && std::abs(top - 1.0) <= 1e-10 &&
                     std::abs(bottom + 1.0) <= 1e-10;
  return {exact && dt < 1.0, "max deviation " + fmt(worst) + ", " + fmt(dt) + " s"};
}

// 8. Containment of Galerkin eigenvalues in the predicted sets, degrees 2-8.
Outcome criterion_8() {
  const auto t0 = std::chrono::steady_clock::now();
  struct Case {
    model::PlanetModel model;
    galerkin::GhatMode mode;
    double nsq;
    Vec3 omega;
  };
  std::vector<Case> cases;
  for (const Vec3& omega : {Vec3(0, 0, 1), Vec3(0, 0, 0)}) {
    for (const double nsq : {0.0, 4.0}) {
      cases.push_back({constant_g_model(nsq, Vec3(0, 0, 1), omega), galerkin::GhatMode::kConstant,
                       nsq, omega});
      cases.push_back({radial_model(nsq, omega), galerkin::GhatMode::kRadial, nsq, omega});
    }
  }

  int violations = 0;
  int checked = 0;
  for (int degree = 2; degree <= 8; ++degree) {
    const auto basis = galerkin::build_basis(degree);
    for (const auto& c : cases) {
      const auto ess = specsets::essential_spectrum(c.model, 4096, 1024);
      const auto pencil = galerkin::assemble_pencil(basis, c.omega, c.nsq, c.mode, Vec3(0, 0, 1));
      const auto modes = galerkin::solve_modes(pencil);
      const double om = c.omega.norm();
      for (Eigen::Index i = 0; i < modes.eigenvalues.size(); ++i) {
        const Complex lam = modes.eigenvalues(i);
        const bool in_ess = specsets::contains(ess, lam, 1e-6);
        const bool is_rigid = std::abs(lam) <= 1e-6 || std::abs(lam - Complex(0, om)) <= 1e-6 ||
                              std::abs(lam + Complex(0, om)) <= 1e-6;
        if (!in_ess && !is_rigid) ++violations;
        ++checked;
      }
    }
  }

  // Unstable case: nonzero eigenvalues real and inside [-2, 2].
  bool unstable_ok = true;
  for (int degree = 2; degree <= 8; ++degree) {
    const auto basis = galerkin::build_basis(degree);
    const auto pencil = galerkin::assemble_pencil(basis, Vec3::Zero(), -4.0,
                                                  galerkin::GhatMode::kConstant, Vec3(0, 0, 1));
    const auto modes = galerkin::solve_modes(pencil);
    for (Eigen::Index i = 0; i < modes.eigenvalues.size(); ++i) {
      const Complex lam = modes.eigenvalues(i);
      if (std::abs(lam) <= 1e-8) continue;
      unstable_ok = unstable_ok && std::abs(lam.imag()) <= 1e-6 &&
                    std::abs(lam.real()) <= 2.0 + 1e-6;
    }
  }
  const double dt = seconds_since(t0);
  return {violations == 0 && unstable_ok && dt < 60.0,
          std::to_string(checked) + " eigenvalues checked, " + std::to_string(violations) +
              " outside, " + fmt(dt) + " s"};
}

// 9. Imaginary-axis confinement (K PSD) and the off-axis DS bound (K indefinite).
Outcome criterion_9() {
  const auto basis = galerkin::build_basis(4);

  // K PSD cases.
  double worst_re = 0.0;
  for (const double nsq : {0.0, 4.0}) {
    const auto pencil = galerkin::assemble_pencil(basis, Vec3(0, 0, 1), nsq,
                                                  galerkin::GhatMode::kConstant, Vec3(0, 0, 1));
    const auto modes = galerkin::solve_modes(pencil);
    double scale = 0.0;
    for (Eigen::Index i = 0; i < modes.eigenvalues.size(); ++i) {
      scale = std::max(scale, std::abs(modes.eigenvalues(i)));
    }
    for (Eigen::Index i = 0; i < modes.eigenvalues.size(); ++i) {
      worst_re = std::max(worst_re, std::abs(modes.eigenvalues(i).real()) / (1.0 + scale));
    }
  }

  // K indefinite cases: |lambda|^2 <= -gamma_d + 1e-8 off the axis.
  bool ds_ok = true;
  double worst_excess = 0.0;
  for (const Vec3& omega : {Vec3(0, 0, 0), Vec3(0, 0, 0.7)}) {
    const auto pencil = galerkin::assemble_pencil(basis, omega, -4.0,
                                                  galerkin::GhatMode::kConstant, Vec3(0, 0, 1));
    const auto gen = linalg::eig_sym_generalized(pencil.buoyancy.cast<Complex>(),
                                                 pencil.mass.cast<Complex>());
    const double gamma_d = gen.eigenvalues(0).real();
    const auto modes = galerkin::solve_modes(pencil);
    for (Eigen::Index i = 0; i < modes.eigenvalues.size(); ++i) {
      const Complex lam = modes.eigenvalues(i);
      if (std::abs(lam.real()) <= 1e-8) continue;
      const double excess = std::norm(lam) - (-gamma_d + 1e-8);
      worst_excess = std::max(worst_excess, excess);
      ds_ok = ds_ok && excess <= 0.0;
    }
  }
  return {worst_re <= 1e-8 && ds_ok,
          "max |Re|/scale " + fmt(worst_re) + ", max DS excess " + fmt(worst_excess)};
}

// 10. Poincare interval filling: the max gap statistic is non-increasing.
Outcome criterion_10() {
  std::vector<double> gaps;
  for (const int degree : {2, 4, 6, 8}) {
    const auto basis = galerkin::build_basis(degree);
    const auto pencil =
        galerkin::assemble_pencil(basis, Vec3(0, 0, 1), 0.0, galerkin::GhatMode::kConstant);
    const auto modes = galerkin::solve_modes(pencil);
    std::vector<double> imag = {-2.0, 2.0};  // band endpoints as sentinels
    for (Eigen::Index i = 0; i < modes.eigenvalues.size(); ++i) {
      const Complex lam = modes.eigenvalues(i);
      if (std::abs(lam.real()) < 1e-8 && std::abs(lam.imag()) <= 2.0) imag.push_back(lam.imag());
    }
    std::sort(imag.begin(), imag.end());
    double gap = 0.0;
    for (std::size_t i = 1; i < imag.size(); ++i) gap = std::max(gap, imag[i] - imag[i - 1]);
    gaps.push_back(gap);
  }
  bool mono = true;
  std::string detail = "gaps";
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    detail += " " + fmt(gaps[i]);
    if (i > 0) mono = mono && gaps[i] <= gaps[i - 1] + 1e-12;
  }
  return {mono, detail};
}

// 11. Riesz projectors: idempotency, rank vs enclosed count, empty contour.
Outcome criterion_11() {
  const auto basis = galerkin::build_basis(2);
  const auto pencil = galerkin::assemble_pencil(basis, Vec3(0, 0, 1), 1.0,
                                                galerkin::GhatMode::kConstant, Vec3(0, 0, 1));
  const auto modes = galerkin::solve_modes(pencil);

  const auto empty = galerkin::riesz_projector(pencil, Complex(3.0, 3.0), 0.4, 64);
  if (empty.norm() > 1e-8) return {false, "empty contour norm " + fmt(empty.norm())};

  const std::vector<std::pair<Complex, double>> contours = {
      {Complex(0.0, 1.0), 0.37},  {Complex(0.0, -1.0), 0.37}, {Complex(0.0, 0.5), 0.21},
      {Complex(0.0, 1.5), 0.23}, {Complex(0.0, 0.0), 0.13}};
  double worst_idem = 0.0;
  int bad_rank = 0;
  int used = 0;
  for (const auto& [center, radius] : contours) {
    int enclosed = 0;
    bool safe = true;
    for (Eigen::Index i = 0; i < modes.eigenvalues.size(); ++i) {
      const double d = std::abs(modes.eigenvalues(i) - center);
      if (d < radius) ++enclosed;
      safe = safe && std::abs(d - radius) > 2e-3 * radius;
    }
    if (!safe) continue;
    ++used;
    const auto p = galerkin::riesz_projector(pencil, center, radius, 96);
    worst_idem = std::max(worst_idem, (p * p - p).norm());
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(p);
    int rank = 0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
      if (svd.singularValues()(i) > 0.5) ++rank;
    }
    if (rank != enclosed) ++bad_rank;
  }
  return {worst_idem <= 1e-8 && bad_rank == 0 && used >= 5,
          "idempotency " + fmt(worst_idem) + ", contours used " + std::to_string(used)};
}

// 12. essential_spectrum inside the cross bound; equality for radial models.
Outcome criterion_12() {
  Rng rng(131);
  auto imag_sup = [](const specsets::SpectrumSet& s) {
    double v = 0.0;
    for (const auto& [lo, hi] : s.imag_part.intervals) v = std::max({v, -lo, hi});
    return v;
  };
  auto real_sup = [](const specsets::SpectrumSet& s) {
    double v = 0.0;
    for (const auto& [lo, hi] : s.real_part.intervals) v = std::max({v, -lo, hi});
    return v;
  };

  bool inclusion = true;
  double worst_eq = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    model::PlanetModel m;
    const bool radial = trial % 2 == 0;
    const Vec3 omega = rng.uniform(0.0, 1.5) * rng.unit_vector();
    const double nsq = rng.uniform(-4.0, 4.0);
    if (radial) {
      m = radial_model(nsq, omega);
    } else {
      m = constant_g_model(nsq, rng.unit_vector(), omega);
      if (rng.uniform() < 0.5) {
        m.nsq = model::ProfileSpec::polynomial({nsq, 0.0, rng.uniform(-1.0, 1.0)});
      }
    }
    const auto ess = specsets::essential_spectrum(m, 2048, 512);
    const auto s1 = specsets::s1_bound(m);
    inclusion = inclusion && imag_sup(ess) <= imag_sup(s1) + 1e-9 &&
                real_sup(ess) <= real_sup(s1) + 1e-9;
    if (radial) {
      worst_eq = std::max(worst_eq, std::abs(imag_sup(ess) - imag_sup(s1)));
    }
  }
  return {inclusion && worst_eq <= 1e-3,
          "inclusion " + std::string(inclusion ? "ok" : "violated") + ", radial equality gap " +
              fmt(worst_eq)};
}

// 13. Export/parse losslessness and byte-identical fixed-seed CLI reruns.
Outcome criterion_13(const std::string& cli_path) {
  // Lossless round trip on randomized sets.
  Rng rng(137);
  for (int i = 0; i < 50; ++i) {
    specsets::SpectrumSet s;
    const double a = rng.uniform(0.0, 3.0), b = a + rng.uniform(0.0, 2.0);
    s.imag_part = specsets::AxisIntervalUnion{specsets::Axis::kImaginary, {{-b, -a}, {a, b}}};
    const double r = rng.uniform(0.0, 1.0);
    s.real_part = specsets::AxisIntervalUnion{specsets::Axis::kReal, {{-r, r}}};
    if (i % 3 == 0) s.ds_region = specsets::DsRegion{rng.uniform(), rng.uniform()};
    if (!(specsets::parse_set(specsets::export_set(s)) == s)) {
      return {false, "export/parse round trip diverged"};
    }
  }
  if (cli_path.empty()) return {false, "no --cli path supplied"};

  // Byte-identical reruns of seeded commands.
  const std::string model_path = "/tmp/gispec_acceptance_model.json";
  {
    model::PlanetModel m = radial_model(2.0, Vec3(0, 0, 1));
    cli::write_text_file(model_path, model::model_to_json(m));
  }
  auto slurp = [](const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  auto run_cli = [&](const std::string& args) {
    const std::string cmd = cli_path + " " + args + " > /dev/null 2>&1";
    return std::system(cmd.c_str());
  };

  const std::string scan = "/tmp/gispec_acceptance_scan.csv";
  const std::string set = "/tmp/gispec_acceptance_set.json";
  if (run_cli("symbol-scan --model " + model_path + " --out " + scan + " --points 200 --seed 11") != 0)
    return {false, "symbol-scan run failed"};
  const std::string scan1 = slurp(scan);
  if (run_cli("spectrum --model " + model_path + " --out " + set +
              " --interior 512 --boundary 128") != 0)
    return {false, "spectrum run failed"};
  const std::string set1 = slurp(set);

  if (run_cli("symbol-scan --model " + model_path + " --out " + scan + " --points 200 --seed 11") != 0)
    return {false, "symbol-scan rerun failed"};
  if (run_cli("spectrum --model " + model_path + " --out " + set +
              " --interior 512 --boundary 128") != 0)
    return {false, "spectrum rerun failed"};

  const bool identical = slurp(scan) == scan1 && slurp(set) == set1;
  const auto parsed = specsets::parse_set(set1);
  return {identical && !parsed.imag_part.empty(),
          identical ? "outputs byte-identical" : "reruns differ"};
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli_path;
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--cli") cli_path = argv[i + 1];
  }

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"01 symbol rank-oracle equivalence", criterion_1},
      {"02 beta_pm envelope vs eigen-oracle", criterion_2},
      {"03 Vtilde_n inverse and indicator closed forms", criterion_3},
      {"04 16x16 symbol inverse and ODE clustering", criterion_4},
      {"05 quasi-rigid modes", criterion_5},
      {"06 geostrophic residuals", criterion_6},
      {"07 degree-1 Poincare exactness", criterion_7},
      {"08 Galerkin spectral containment", criterion_8},
      {"09 imaginary-axis and DS bounds", criterion_9},
      {"10 Poincare interval filling", criterion_10},
      {"11 Riesz projectors", criterion_11},
      {"12 set inclusion and radial equality", criterion_12},
      {"13 CLI determinism and round trip", [&] { return criterion_13(cli_path); }},
  };

  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome out;
    try {
      out = fn();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    std::cout << (out.pass ? "[PASS] " : "[FAIL] ") << name << ": " << out.detail << "\n";
    if (!out.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
