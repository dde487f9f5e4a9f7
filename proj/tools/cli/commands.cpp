#include "cli/commands.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "cli/output.hpp"
#include "cli/svg.hpp"
#include "gispec/boundary.hpp"
#include "gispec/galerkin.hpp"
#include "gispec/model.hpp"
#include "gispec/poly.hpp"
#include "gispec/rng.hpp"
#include "gispec/sampling.hpp"
#include "gispec/specialmodes.hpp"
#include "gispec/specsets.hpp"
#include "gispec/symbol.hpp"
#include "json.hpp"

namespace gispec::cli {

namespace {

Vec3 draw_in_domain(Rng& rng, const model::PlanetModel& m) {
  const Vec3 b = rng.in_ball();
  return m.domain.ball ? b : Vec3(b.cwiseProduct(m.domain.semi_axes));
}

Vec3 boundary_point(const model::PlanetModel& m, const Vec3& unit_sphere_point) {
  return m.domain.ball ? unit_sphere_point
                       : Vec3(unit_sphere_point.cwiseProduct(m.domain.semi_axes));
}

double pair_residual(const galerkin::GalerkinPencil& p, Complex lam,
                     const Eigen::VectorXcd& v) {
  const double denom = (p.mass.norm() * std::norm(lam) + 2.0 * p.coriolis.norm() * std::abs(lam) +
                        p.buoyancy.norm()) *
                       v.norm();
  if (denom == 0.0) return 0.0;
  const Eigen::VectorXcd r = (lam * lam) * (p.mass.cast<Complex>() * v) +
                             (2.0 * lam) * (p.coriolis.cast<Complex>() * v) +
                             p.buoyancy.cast<Complex>() * v;
  return r.norm() / denom;
}

// Requires constant nsq/rho0 and maps the gravity mode; the projected pencil
// is only defined for that reduction.
galerkin::GalerkinPencil pencil_from_model(const model::PlanetModel& m, int degree) {
  if (m.nsq.kind != model::ProfileSpec::Kind::kConstant) {
    throw model::ModelError("galerkin: requires a constant N^2 profile");
  }
  if (m.rho0.kind != model::ProfileSpec::Kind::kConstant) {
    throw model::ModelError("galerkin: requires a constant rho0 profile");
  }
  if (!m.domain.ball) {
    throw model::ModelError("galerkin: requires the unit-ball domain");
  }
  const auto basis = galerkin::build_basis(degree);
  if (m.gravity.mode == model::Gravity::Mode::kRadial) {
    return galerkin::assemble_pencil(basis, m.omega, m.nsq.value, galerkin::GhatMode::kRadial);
  }
  const Vec3 g = m.gravity.vector;
  if (m.nsq.value != 0.0 && g.norm() == 0.0) {
    throw model::ModelError("galerkin: N^2 != 0 needs a nonzero gravity vector");
  }
  const Vec3 ghat = g.norm() > 0.0 ? Vec3(g.normalized()) : Vec3(0, 0, 1);
  return galerkin::assemble_pencil(basis, m.omega, m.nsq.value, galerkin::GhatMode::kConstant,
                                   ghat);
}

struct SpectrumArgs {
  std::string model_path, out_path, svg_path, eigs_path;
  int interior = 2048;
  int boundary = 512;
  std::optional<double> gamma;
};

int cmd_spectrum(const SpectrumArgs& a) {
  const auto m = model::load_model_file(a.model_path);
  auto ess = specsets::essential_spectrum(m, a.interior, a.boundary);
  const auto s1 = specsets::s1_bound(m);
  if (a.gamma) ess.ds_region = specsets::ds_region(m, *a.gamma).ds_region;

  nlohmann::json doc = nlohmann::json::parse(specsets::export_set(ess));
  doc["schema"] = "gi-spec/spectrum-set/v1";
  write_text_file(a.out_path, doc.dump(2) + "\n");

  std::vector<Complex> eigs;
  if (!a.eigs_path.empty()) {
    std::ifstream in(a.eigs_path);
    if (!in) throw std::runtime_error("cannot open eigenvalue CSV: " + a.eigs_path);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#' || line.rfind("degree", 0) == 0) continue;
      double deg = 0, re = 0, im = 0;
      if (std::sscanf(line.c_str(), "%lf,%lf,%lf", &deg, &re, &im) == 3) eigs.emplace_back(re, im);
    }
  }
  Manifest man{"spectrum", 0, {
      {"model", a.model_path},
      {"interior", std::to_string(a.interior)},
      {"boundary", std::to_string(a.boundary)},
      {"gamma", a.gamma ? format_double(*a.gamma) : "none"}},
      {a.out_path}};
  if (!a.svg_path.empty()) {
    render_spectrum_svg({ess, s1}, eigs, a.svg_path);
    man.outputs.push_back(a.svg_path);
  }
  write_manifest(man, a.out_path);
  return 0;
}

struct ScanArgs {
  std::string model_path, out_path;
  int points = 256;
  std::uint64_t seed = 0;
};

int cmd_symbol_scan(const ScanArgs& a) {
  const auto m = model::load_model_file(a.model_path);
  Rng rng(a.seed);
  CsvWriter csv("gi-spec/symbol-scan/v1",
                {"x", "y", "z", "xi1", "xi2", "xi3", "beta_minus", "beta_plus", "lambda_re",
                 "lambda_im"});
  for (int i = 0; i < a.points; ++i) {
    const Vec3 x = draw_in_domain(rng, m);
    const Vec3 xi = rng.unit_vector();
    const auto spec = symbol::sigma_pt(m, x, xi);
    for (const auto& v : spec.values) {
      csv.row({x.x(), x.y(), x.z(), xi.x(), xi.y(), xi.z(), spec.beta_minus, spec.beta_plus,
               v.real(), v.imag()});
    }
  }
  csv.write(a.out_path);
  write_manifest(Manifest{"symbol-scan", a.seed, {
      {"model", a.model_path}, {"points", std::to_string(a.points)}},
      {a.out_path}}, a.out_path);
  return 0;
}

int cmd_lopatinskii_scan(const ScanArgs& a) {
  const auto m = model::load_model_file(a.model_path);
  CsvWriter csv("gi-spec/lopatinskii-scan/v1",
                {"x", "y", "z", "nsq", "pn_perp_ghat", "failure_halfwidth"});
  for (const auto& p : fibonacci_sphere(a.points)) {
    const Vec3 x = boundary_point(m, p);
    const auto bg = model::eval_background(m, x);
    const Vec3 n = model::boundary_normal(m, x);
    const double b = bg.g_defined ? (bg.ghat - bg.ghat.dot(n) * n).norm() : 0.0;
    const double hw = boundary::boundary_failure_interval(m, x).second;
    csv.row({x.x(), x.y(), x.z(), bg.nsq, b, hw});
  }
  csv.write(a.out_path);
  write_manifest(Manifest{"lopatinskii-scan", a.seed, {
      {"model", a.model_path}, {"points", std::to_string(a.points)}},
      {a.out_path}}, a.out_path);
  return 0;
}

struct GalerkinArgs {
  std::string model_path, out_path, svg_path;
  int degree = 4;
};

int cmd_galerkin(const GalerkinArgs& a) {
  const auto m = model::load_model_file(a.model_path);
  const auto pencil = pencil_from_model(m, a.degree);
  const auto modes = galerkin::solve_modes(pencil);

  CsvWriter csv("gi-spec/galerkin-eigs/v1", {"degree", "re_lambda", "im_lambda", "residual"});
  std::vector<Complex> eigs;
  for (Eigen::Index j = 0; j < modes.eigenvalues.size(); ++j) {
    const Complex lam = modes.eigenvalues(j);
    const double res = modes.eigenvectors ? pair_residual(pencil, lam, modes.eigenvectors->col(j))
                                          : modes.residual_bound;
    csv.row({static_cast<double>(a.degree), lam.real(), lam.imag(), res});
    eigs.push_back(lam);
  }
  csv.write(a.out_path);

  Manifest man{"galerkin", 0, {
      {"model", a.model_path}, {"degree", std::to_string(a.degree)}},
      {a.out_path}};
  if (!a.svg_path.empty()) {
    const auto ess = specsets::essential_spectrum(m, 2048, 512);
    const auto s1 = specsets::s1_bound(m);
    render_spectrum_svg({ess, s1}, eigs, a.svg_path);
    man.outputs.push_back(a.svg_path);
  }
  write_manifest(man, a.out_path);
  return 0;
}

struct RigidArgs {
  std::string model_path, out_path;
  int samples = 100;
  std::uint64_t seed = 0;
};

int cmd_rigid_modes(const RigidArgs& a) {
  const auto m = model::load_model_file(a.model_path);
  Rng rng(a.seed);
  CsvWriter csv("gi-spec/rigid-modes/v1",
                {"kind", "lambda_re", "lambda_im", "max_residual", "scale"});
  using specialmodes::RigidKind;
  const std::vector<std::pair<RigidKind, std::string>> kinds = {
      {RigidKind::kAxialTranslation, "axial_translation"},
      {RigidKind::kAxialSpin, "axial_spin"},
      {RigidKind::kEquatorialTranslationPlus, "equatorial_translation_plus"},
      {RigidKind::kEquatorialTranslationMinus, "equatorial_translation_minus"},
      {RigidKind::kTiltoverPlus, "tiltover_plus"},
      {RigidKind::kTiltoverMinus, "tiltover_minus"}};
  const bool rotating = m.omega.norm() > 0.0;
  const Vec3 a_dir = rotating ? Rng(a.seed + 1).unit_perp(m.omega) : Vec3(1, 0, 0);
  for (const auto& [kind, name] : kinds) {
    const bool axial =
        kind == RigidKind::kAxialTranslation || kind == RigidKind::kAxialSpin;
    if (!rotating && !axial) continue;
    const auto mode = specialmodes::rigid_mode(m.omega, kind, a_dir);
    double worst = 0.0, scale = 0.0;
    for (int i = 0; i < a.samples; ++i) {
      const Vec3 x = rng.in_ball();
      worst = std::max(worst, specialmodes::rigid_residual(m.omega, mode, x).norm());
      scale = std::max(scale, m.omega.squaredNorm() *
                                  (mode.t.norm() + mode.k.norm() * x.norm()));
    }
    csv.row_mixed({name, format_double(mode.lambda.real()), format_double(mode.lambda.imag()),
                   format_double(worst), format_double(scale)});
  }
  csv.write(a.out_path);
  write_manifest(Manifest{"rigid-modes", a.seed, {
      {"model", a.model_path}, {"samples", std::to_string(a.samples)}},
      {a.out_path}}, a.out_path);
  return 0;
}

struct GeoArgs {
  std::string model_path, out_path;
  int potentials = 10;
  int samples = 50;
  std::uint64_t seed = 0;
};

std::vector<poly::Polynomial> geostrophic_potentials(int count, Rng& rng) {
  using poly::Polynomial;
  std::vector<Polynomial> out;
  out.push_back(Polynomial::variable(2));                                        // z
  out.push_back(Polynomial::monomial(2, 0, 0, 1.0) + Polynomial::monomial(0, 2, 0, 1.0));
  out.push_back(Polynomial::monomial(1, 1, 0, 1.0));                             // xy
  while (static_cast<int>(out.size()) < count) {
    Polynomial p;
    for (int a = 0; a <= 3; ++a) {
      for (int b = 0; a + b <= 3; ++b) {
        for (int c = 0; a + b + c <= 3; ++c) {
          if (a + b + c == 0) continue;
          p = p + Polynomial::monomial(a, b, c, rng.uniform(-1.0, 1.0));
        }
      }
    }
    out.push_back(p);
  }
  out.resize(count);
  return out;
}

int cmd_geostrophic(const GeoArgs& a) {
  const auto m = model::load_model_file(a.model_path);
  Rng rng(a.seed);
  const auto pots = geostrophic_potentials(a.potentials, rng);
  CsvWriter csv("gi-spec/geostrophic/v1",
                {"potential", "degree", "max_stilde_dot_u", "max_div_rho_u", "max_boundary_div_u"});
  for (std::size_t pi = 0; pi < pots.size(); ++pi) {
    double r1 = 0.0, r2 = 0.0, r3 = 0.0;
    for (int i = 0; i < a.samples; ++i) {
      const Vec3 x = rng.in_ball(0.99);
      const auto res = specialmodes::geostrophic_residual(m, pots[pi], x);
      r1 = std::max(r1, std::abs(res.stilde_dot_u));
      r2 = std::max(r2, std::abs(res.divergence_rho_u));
    }
    for (int i = 0; i < a.samples / 5 + 1; ++i) {
      const Vec3 x = rng.unit_vector();
      const auto res = specialmodes::geostrophic_residual(m, pots[pi], x);
      if (res.boundary_div_u) r3 = std::max(r3, std::abs(*res.boundary_div_u));
    }
    csv.row({static_cast<double>(pi), static_cast<double>(pots[pi].degree()), r1, r2, r3});
  }
  csv.write(a.out_path);
  write_manifest(Manifest{"geostrophic", a.seed, {
      {"model", a.model_path},
      {"potentials", std::to_string(a.potentials)},
      {"samples", std::to_string(a.samples)}},
      {a.out_path}}, a.out_path);
  return 0;
}

struct PseudoArgs {
  std::string model_path, out_path;
  int degree = 4;
  double re_min = -1.0, re_max = 1.0, im_min = -3.0, im_max = 3.0;
  int n_re = 41, n_im = 41;
};

int cmd_pseudospectrum(const PseudoArgs& a) {
  const auto m = model::load_model_file(a.model_path);
  const auto pencil = pencil_from_model(m, a.degree);
  const galerkin::PseudospectrumGrid grid{a.re_min, a.re_max, a.im_min, a.im_max, a.n_re, a.n_im};
  const auto values = galerkin::pseudospectrum_scan(pencil, grid);

  CsvWriter csv("gi-spec/pseudospectrum/v1", {"re", "im", "sigma_min"});
  for (int i = 0; i < a.n_im; ++i) {
    for (int j = 0; j < a.n_re; ++j) {
      const double im = a.n_im == 1 ? a.im_min : a.im_min + (a.im_max - a.im_min) * i / (a.n_im - 1.0);
      const double re = a.n_re == 1 ? a.re_min : a.re_min + (a.re_max - a.re_min) * j / (a.n_re - 1.0);
      csv.row({re, im, values(i, j)});
    }
  }
  csv.write(a.out_path);
  write_manifest(Manifest{"pseudospectrum", 0, {
      {"model", a.model_path}, {"degree", std::to_string(a.degree)},
      {"grid", std::to_string(a.n_re) + "x" + std::to_string(a.n_im)}},
      {a.out_path}}, a.out_path);
  return 0;
}

struct VerifyArgs {
  std::string model_path;
  int points = 10000;
  std::uint64_t seed = 0;
};

int cmd_verify(const VerifyArgs& a) {
  const auto m = model::load_model_file(a.model_path);
  Rng rng(a.seed);
  int failures = 0;
  auto report = [&](bool ok, const std::string& what) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << what << "\n";
    if (!ok) ++failures;
  };

  // Rank oracle vs closed-form sigma_pt.
  {
    int mismatches = 0;
    int n = 0;
    while (n < a.points) {
      const Vec3 x = draw_in_domain(rng, m);
      const Vec3 xi = rng.unit_vector();
      const auto spec = symbol::sigma_pt(m, x, xi);
      for (const auto& v : spec.values) {
        const auto bg = model::eval_background(m, x);
        const auto sym = symbol::symbol_matrix_fields(m.omega, bg.nsq, bg.ghat, bg.g_defined, xi, v);
        if (symbol::rank_deficiency_ratio(sym) > 1e-9) ++mismatches;
        ++n;
      }
      const Complex probe = spec.values[rng.uniform() < 0.5 ? 0 : spec.values.size() - 1] +
                            Complex(rng.uniform(0.05, 0.5), rng.uniform(0.05, 0.5));
      const auto bg = model::eval_background(m, x);
      const auto sym = symbol::symbol_matrix_fields(m.omega, bg.nsq, bg.ghat, bg.g_defined, xi, probe);
      if (symbol::rank_deficiency_ratio(sym) <= 1e-9) ++mismatches;
      ++n;
    }
    report(mismatches == 0, "symbol rank oracle (" + std::to_string(n) + " draws, " +
                                std::to_string(mismatches) + " mismatches)");
  }

  // Closed-form Vtilde_n^-1 vs direct inversion.
  {
    double worst = 0.0;
    int tried = 0;
    const auto sphere = fibonacci_sphere(std::max(64, a.points / 32));
    for (const auto& p : sphere) {
      const Vec3 x = boundary_point(m, p);
      const Complex lam(rng.uniform(0.3, 2.0), rng.uniform(0.3, 2.0));
      const auto bg = model::eval_background(m, x);
      const auto v = boundary::v_matrix(m.omega, bg.nsq, bg.ghat, bg.g_defined, lam);
      const Vec3 n = model::boundary_normal(m, x);
      const CMat3 vt = boundary::vtilde(v, n);
      CMat3 closed;
      try {
        closed = boundary::vtilde_inverse(m, x, lam);
      } catch (const std::exception&) {
        continue;  // non-elliptic draw
      }
      worst = std::max(worst, ((vt * closed) - CMat3::Identity()).norm() / CMat3::Identity().norm());
      ++tried;
    }
    report(tried > 0 && worst <= 1e-10,
           "Vtilde_n inverse closed form (max deviation " + format_double(worst) + ")");
  }

  // Rigid modes.
  {
    double worst_rel = 0.0;
    const bool rotating = m.omega.norm() > 0.0;
    using specialmodes::RigidKind;
    for (const auto kind : {RigidKind::kAxialTranslation, RigidKind::kAxialSpin,
                            RigidKind::kEquatorialTranslationPlus,
                            RigidKind::kEquatorialTranslationMinus, RigidKind::kTiltoverPlus,
                            RigidKind::kTiltoverMinus}) {
      const bool axial = kind == RigidKind::kAxialTranslation || kind == RigidKind::kAxialSpin;
      if (!rotating && !axial) continue;
      const Vec3 dir = rotating ? rng.unit_perp(m.omega) : Vec3(1, 0, 0);
      const auto mode = specialmodes::rigid_mode(m.omega, kind, dir);
      for (int i = 0; i < 100; ++i) {
        const Vec3 x = rng.in_ball();
        const double scale =
            m.omega.squaredNorm() * (mode.t.norm() + mode.k.norm() * x.norm()) + 1e-300;
        worst_rel = std::max(worst_rel,
                             specialmodes::rigid_residual(m.omega, mode, x).norm() / scale);
      }
    }
    report(!rotating || worst_rel <= 1e-12,
           "rigid-mode residuals (max relative " + format_double(worst_rel) + ")");
  }

  // Geostrophic construction (radial-gravity models only).
  if (m.gravity.mode == model::Gravity::Mode::kRadial) {
    double worst = 0.0;
    Rng prng(a.seed + 2);
    for (const auto& phi : geostrophic_potentials(10, prng)) {
      for (int i = 0; i < 25; ++i) {
        const auto res = specialmodes::geostrophic_residual(m, phi, prng.in_ball(0.99));
        worst = std::max({worst, std::abs(res.stilde_dot_u), std::abs(res.divergence_rho_u)});
      }
    }
    report(worst <= 1e-10, "geostrophic residuals (max " + format_double(worst) + ")");
  } else {
    std::cout << "[SKIP] geostrophic residuals (requires a radial-gravity model)\n";
  }

  // Set inclusion.
  {
    const auto ess = specsets::essential_spectrum(m, 2048, 512);
    const auto s1 = specsets::s1_bound(m);
    bool ok = true;
    for (const auto& [lo, hi] : ess.imag_part.intervals) {
      ok = ok && specsets::contains(s1, Complex(0.0, lo), 1e-9) &&
           specsets::contains(s1, Complex(0.0, hi), 1e-9);
    }
    for (const auto& [lo, hi] : ess.real_part.intervals) {
      ok = ok && specsets::contains(s1, Complex(lo, 0.0), 1e-9) &&
           specsets::contains(s1, Complex(hi, 0.0), 1e-9);
    }
    report(ok, "essential spectrum contained in the S1 cross bound");
  }

  return failures == 0 ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"gi-spec: spectral sets, boundary ellipticity indicators and polynomial Galerkin "
               "modes for rotating planet background models"};
  app.require_subcommand(1);

  SpectrumArgs spec_args;
  auto* spectrum = app.add_subcommand("spectrum", "Essential-spectrum set, cross bound and figure");
  spectrum->add_option("--model", spec_args.model_path, "Model JSON file")->required();
  spectrum->add_option("--out", spec_args.out_path, "Output set JSON")->required();
  spectrum->add_option("--svg", spec_args.svg_path, "Optional SVG figure path");
  spectrum->add_option("--eigs", spec_args.eigs_path, "Optional eigenvalue CSV to overlay");
  spectrum->add_option("--interior", spec_args.interior, "Interior sample target");
  spectrum->add_option("--boundary", spec_args.boundary, "Boundary sample target");
  double gamma_val = 0.0;
  auto* gopt = spectrum->add_option("--gamma", gamma_val, "Coercivity bound for the DS region");

  ScanArgs sym_args;
  auto* sscan = app.add_subcommand("symbol-scan", "Pointwise symbol spectra over random (x, xi)");
  sscan->add_option("--model", sym_args.model_path, "Model JSON file")->required();
  sscan->add_option("--out", sym_args.out_path, "Output CSV")->required();
  sscan->add_option("--points", sym_args.points, "Number of (x, xi) draws");
  sscan->add_option("--seed", sym_args.seed, "RNG seed");

  ScanArgs lop_args;
  auto* lscan = app.add_subcommand("lopatinskii-scan", "Boundary failure intervals over the surface");
  lscan->add_option("--model", lop_args.model_path, "Model JSON file")->required();
  lscan->add_option("--out", lop_args.out_path, "Output CSV")->required();
  lscan->add_option("--points", lop_args.points, "Number of boundary points");

  GalerkinArgs gal_args;
  auto* gal = app.add_subcommand("galerkin", "Polynomial Galerkin pencil eigenvalues");
  gal->add_option("--model", gal_args.model_path, "Model JSON file")->required();
  gal->add_option("--out", gal_args.out_path, "Output CSV")->required();
  gal->add_option("--degree", gal_args.degree, "Polynomial degree (1..10)")->required();
  gal->add_option("--svg", gal_args.svg_path, "Optional SVG overlay figure");

  RigidArgs rig_args;
  auto* rig = app.add_subcommand("rigid-modes", "Quasi-rigid modes and residuals");
  rig->add_option("--model", rig_args.model_path, "Model JSON file")->required();
  rig->add_option("--out", rig_args.out_path, "Output CSV")->required();
  rig->add_option("--samples", rig_args.samples, "Residual sample count");
  rig->add_option("--seed", rig_args.seed, "RNG seed");

  GeoArgs geo_args;
  auto* geo = app.add_subcommand("geostrophic", "Geostrophic-mode residuals");
  geo->add_option("--model", geo_args.model_path, "Model JSON file")->required();
  geo->add_option("--out", geo_args.out_path, "Output CSV")->required();
  geo->add_option("--potentials", geo_args.potentials, "Number of polynomial potentials");
  geo->add_option("--samples", geo_args.samples, "Samples per potential");
  geo->add_option("--seed", geo_args.seed, "RNG seed");

  PseudoArgs ps_args;
  auto* ps = app.add_subcommand("pseudospectrum", "sigma_min scan of the Galerkin pencil");
  ps->add_option("--model", ps_args.model_path, "Model JSON file")->required();
  ps->add_option("--out", ps_args.out_path, "Output CSV")->required();
  ps->add_option("--degree", ps_args.degree, "Polynomial degree (1..10)")->required();
  ps->add_option("--re-min", ps_args.re_min, "Grid minimum real part");
  ps->add_option("--re-max", ps_args.re_max, "Grid maximum real part");
  ps->add_option("--im-min", ps_args.im_min, "Grid minimum imaginary part");
  ps->add_option("--im-max", ps_args.im_max, "Grid maximum imaginary part");
  ps->add_option("--nre", ps_args.n_re, "Grid points along the real axis");
  ps->add_option("--nim", ps_args.n_im, "Grid points along the imaginary axis");

  VerifyArgs ver_args;
  auto* ver = app.add_subcommand("verify", "Closed-form vs oracle verification suites");
  ver->add_option("--model", ver_args.model_path, "Model JSON file")->required();
  ver->add_option("--points", ver_args.points, "Rank-oracle draw count");
  ver->add_option("--seed", ver_args.seed, "RNG seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (*spectrum) {
      if (*gopt) spec_args.gamma = gamma_val;
      return cmd_spectrum(spec_args);
    }
    if (*sscan) return cmd_symbol_scan(sym_args);
    if (*lscan) return cmd_lopatinskii_scan(lop_args);
    if (*gal) return cmd_galerkin(gal_args);
    if (*rig) return cmd_rigid_modes(rig_args);
    if (*geo) return cmd_geostrophic(geo_args);
    if (*ps) return cmd_pseudospectrum(ps_args);
    if (*ver) return cmd_verify(ver_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args);
}

}  // namespace gispec::cli
