#include "rsvd/campaign.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "rsvd/algebra.hpp"
#include "rsvd/dynamics.hpp"
#include "rsvd/random.hpp"
#include "rsvd/reduction.hpp"
#include "rsvd/rmatrix.hpp"
#include "rsvd/tensor.hpp"

namespace rsvd {

const std::vector<std::string> kAllSuites = {
    "algebra", "lax",      "consistency", "commutation",
    "functional", "theorem", "momentum",  "laxeq"};

namespace {

constexpr double kTolAlgebra = 1e-13;
constexpr double kTolLaxMembership = 1e-9;
constexpr double kTolTrace = 1e-11;
constexpr double kTolConsistency = 1e-10;
constexpr double kTolScalar = 1e-12;
constexpr double kTolTheorem = 5e-6;
constexpr double kTolMomentum = 1e-8;
constexpr double kTolReducedEnergy = 1e-11;
constexpr double kTolLaxEq = 1e-5;
constexpr double kTolDrift = 1e-8;

std::string family_name(Family f) {
  switch (f) {
    case Family::Plain:
      return "plain";
    case Family::Tilde:
      return "tilde";
    case Family::Hat:
      return "hat";
  }
  return "?";
}

/// Per-suite seed streams stay stable regardless of which suites run.
Rng suite_rng(const RunConfig& cfg, std::uint64_t stream) {
  return Rng(cfg.seed * 0x9e3779b97f4a7c15ull + stream);
}

double tol_or(const RunConfig& cfg, double fallback) {
  return cfg.tol > 0.0 ? cfg.tol : fallback;
}

void add_check(Report& rep, const std::string& id, const std::string& family, int n,
               int samples, double residual, double tolerance) {
  CheckRecord rec;
  rec.check = id;
  rec.family = family;
  rec.n = n;
  rec.samples = samples;
  rec.residual = residual;
  rec.tolerance = tolerance;
  rec.pass = residual < tolerance;
  rep.checks.push_back(rec);
}

// -- Suite implementations ------------------------------------------------

void run_algebra_suite(const RunConfig& cfg, Report& rep) {
  const double tol = tol_or(cfg, kTolAlgebra);
  const Dimension dim(cfg.n);
  const Basis basis(dim);
  Rng rng = suite_rng(cfg, 11);

  double membership = 0.0;
  for (const BasisElement& e : basis.elements())
    membership = std::max(membership, algebra_residual(e.matrix));
  add_check(rep, "basis/algebra-membership", "", cfg.n, basis.size(), membership, tol);

  double gram = 0.0;
  for (int i = 0; i < basis.size(); ++i)
    for (int j = 0; j < basis.size(); ++j) {
      const double expected = i == j ? basis[i].signature : 0.0;
      gram = std::max(gram, std::abs(bilinear(basis[i].matrix, basis[j].matrix) - expected));
    }
  add_check(rep, "basis/orthogonality", "", cfg.n, basis.size() * basis.size(), gram, tol);

  const PhasePoint p = random_point(dim, rng);
  double ad_res = 0.0;
  for (int c = 0; c < cfg.n; ++c) {
    ad_res = std::max(ad_res, ad_lambda(p.lambda, basis.d_plus(c)).cwiseAbs().maxCoeff());
    ad_res = std::max(ad_res, ad_lambda(p.lambda, basis.d_minus(c)).cwiseAbs().maxCoeff());
  }
  for (const Basis::XPair& pr : basis.x_pairs()) {
    const Matrix& xp = basis.elements()[static_cast<size_t>(pr.plus_index)].matrix;
    const Matrix& xm = basis.elements()[static_cast<size_t>(pr.minus_index)].matrix;
    const double alpha = pr.root.value(p.lambda);
    ad_res = std::max(ad_res, (ad_lambda(p.lambda, xp) - alpha * xm).cwiseAbs().maxCoeff());
    ad_res = std::max(ad_res, (ad_lambda(p.lambda, xm) - alpha * xp).cwiseAbs().maxCoeff());
  }
  add_check(rep, "basis/ad-diagonal-action", "", cfg.n, basis.size(), ad_res, tol);

  // Round trip of the restricted inverse on a random off-diagonal element.
  Matrix Z = Matrix::Zero(dim.N(), dim.N());
  for (const Basis::XPair& pr : basis.x_pairs()) {
    Z += rng.uniform(-1.0, 1.0) * basis.elements()[static_cast<size_t>(pr.plus_index)].matrix;
    Z += rng.uniform(-1.0, 1.0) * basis.elements()[static_cast<size_t>(pr.minus_index)].matrix;
  }
  const Matrix W = ad_lambda_inverse(basis, p.lambda, Z);
  const double inv_res = (ad_lambda(p.lambda, W) - Z).norm() / (1.0 + Z.norm());
  add_check(rep, "basis/ad-inverse-roundtrip", "", cfg.n, 1, inv_res, tol_or(cfg, 1e-12));
}

void run_lax_suite(const RunConfig& cfg, Report& rep) {
  const Dimension dim(cfg.n);
  Rng rng = suite_rng(cfg, 22);
  double herm = 0.0, posdef = 0.0, group = 0.0, sphere_lin = 0.0, sphere_quad = 0.0;
  double trace_tilde = 0.0, trace_hat = 0.0, spectra = 0.0;
  for (int s = 0; s < cfg.points; ++s) {
    const PhasePoint p = random_point(dim, rng);
    const Couplings c = random_couplings(rng);
    const Matrix A = lax_a(p, c);
    const Matrix C = build_c(dim);
    herm = std::max(herm, (A - A.adjoint()).norm() / (1.0 + A.norm()));
    Eigen::SelfAdjointEigenSolver<Matrix> eig(A);
    posdef = std::max(posdef, std::max(0.0, -eig.eigenvalues().minCoeff()) /
                                  eig.eigenvalues().maxCoeff());
    group = std::max(group, (A * C * A - C).norm() / (A.norm() * A.norm()));
    const CVector V = v_vector(p, c);
    auto [lin, quad] = sphere_residuals(V);
    sphere_lin = std::max(sphere_lin, lin);
    sphere_quad = std::max(sphere_quad, quad);
    const double H = hamiltonian(p, c);
    const double tr_tilde = 0.5 * lax_variant(p, c, LaxVariant::Tilde).trace().real();
    const double tr_hat = 0.5 * lax_variant(p, c, LaxVariant::Hat).trace().real();
    trace_tilde = std::max(trace_tilde, std::abs(tr_tilde - H) / (1.0 + std::abs(H)));
    trace_hat = std::max(trace_hat, std::abs(tr_hat - H) / (1.0 + std::abs(H)));
    const RVector sp_tilde = lax_spectrum(p, c, LaxVariant::Tilde);
    const RVector sp_hat = lax_spectrum(p, c, LaxVariant::Hat);
    const RVector sp_chk = lax_spectrum(p, c, LaxVariant::Check);
    const double scale = 1.0 + sp_tilde.cwiseAbs().maxCoeff();
    spectra = std::max(spectra, (sp_hat - sp_tilde).cwiseAbs().maxCoeff() / scale);
    spectra = std::max(spectra, (sp_chk - sp_tilde).cwiseAbs().maxCoeff() / scale);
  }
  add_check(rep, "lax/hermitian", "", cfg.n, cfg.points, herm, tol_or(cfg, 1e-12));
  add_check(rep, "lax/positive-definite", "", cfg.n, cfg.points, posdef, tol_or(cfg, 1e-12));
  add_check(rep, "lax/group-membership", "", cfg.n, cfg.points, group,
            tol_or(cfg, kTolLaxMembership));
  add_check(rep, "lax/sphere-linear", "", cfg.n, cfg.points, sphere_lin,
            tol_or(cfg, kTolLaxMembership));
  add_check(rep, "lax/sphere-quadratic", "", cfg.n, cfg.points, sphere_quad,
            tol_or(cfg, kTolLaxMembership));
  add_check(rep, "lax/trace-energy-tilde", "", cfg.n, cfg.points, trace_tilde,
            tol_or(cfg, kTolTrace));
  add_check(rep, "lax/trace-energy-hat", "", cfg.n, cfg.points, trace_hat,
            tol_or(cfg, kTolTrace));
  add_check(rep, "lax/variant-isospectrality", "", cfg.n, cfg.points, spectra,
            tol_or(cfg, 1e-10));
}

void run_consistency_suite(const RunConfig& cfg, Report& rep) {
  const Dimension dim(cfg.n);
  const double tol = tol_or(cfg, kTolConsistency);
  for (Family fam : cfg.selected_families()) {
    Rng rng = suite_rng(cfg, 33);
    std::array<double, 4> worst{0.0, 0.0, 0.0, 0.0};
    for (int s = 0; s < cfg.points; ++s) {
      const PhasePoint p = random_point(dim, rng);
      Couplings c = random_couplings(rng);
      if (fam == Family::Plain) c.kappa = 0.0;
      QuadCoefficients q;
      switch (fam) {
        case Family::Plain:
          q = quad_plain(p, c);
          break;
        case Family::Tilde:
          q = quad_tilde(p, c);
          break;
        case Family::Hat:
          q = quad_hat(p, c);
          break;
      }
      const std::array<double, 4> res = consistency_residuals(q);
      for (int i = 0; i < 4; ++i) worst[static_cast<size_t>(i)] =
          std::max(worst[static_cast<size_t>(i)], res[static_cast<size_t>(i)]);
    }
    const std::string fname = family_name(fam);
    add_check(rep, "consistency/antisymmetry-a", fname, cfg.n, cfg.points, worst[0], tol);
    add_check(rep, "consistency/antisymmetry-d", fname, cfg.n, cfg.points, worst[1], tol);
    add_check(rep, "consistency/b-c-swap", fname, cfg.n, cfg.points, worst[2], tol);
    add_check(rep, "consistency/abcd-sum", fname, cfg.n, cfg.points, worst[3], tol);
  }
}

void run_commutation_suite(const RunConfig& cfg, Report& rep) {
  const Dimension dim(cfg.n);
  Rng rng = suite_rng(cfg, 44);
  double worst = 0.0;
  for (int s = 0; s < cfg.points; ++s) {
    const PhasePoint p = random_point(dim, rng);
    const double kappa = rng.uniform(0.0, 2.0);
    worst = std::max(worst, commutation_residuals(p.lambda, kappa).max_residual);
  }
  add_check(rep, "gauge/conjugation-rules", "", cfg.n, cfg.points, worst,
            tol_or(cfg, kTolScalar));
}

void run_functional_suite(const RunConfig& cfg, Report& rep) {
  Rng rng = suite_rng(cfg, 55);
  std::array<double, 3> worst{0.0, 0.0, 0.0};
  for (int s = 0; s < cfg.points; ++s) {
    const double x = rng.uniform(0.3, 4.0);
    double y = rng.uniform(0.3, 4.0);
    if (std::abs(x - y) < 0.05) y += 0.1;
    const double kappa = rng.uniform(0.0, 2.0);
    const std::array<double, 3> res = functional_equation_residuals(x, y, kappa);
    for (int i = 0; i < 3; ++i) worst[static_cast<size_t>(i)] =
        std::max(worst[static_cast<size_t>(i)], res[static_cast<size_t>(i)]);
  }
  const double tol = tol_or(cfg, kTolScalar);
  add_check(rep, "gauge/pq-difference-law", "", cfg.n, cfg.points, worst[0], tol);
  add_check(rep, "gauge/pq-addition-law-1", "", cfg.n, cfg.points, worst[1], tol);
  add_check(rep, "gauge/pq-addition-law-2", "", cfg.n, cfg.points, worst[2], tol);
}

void run_theorem_suite(const RunConfig& cfg, Report& rep) {
  const Dimension dim(cfg.n);
  const double tol = tol_or(cfg, kTolTheorem);
  const int points = std::min(cfg.points, 10);
  BracketConfig bc = cfg.bracket_config();
  for (Family fam : cfg.selected_families()) {
    Rng rng = suite_rng(cfg, 66);
    double worst = 0.0;
    for (int s = 0; s < points; ++s) {
      const PhasePoint p = random_point(dim, rng);
      const Couplings c = random_couplings(rng);
      worst = std::max(worst, verify_theorem(p, c, fam, bc, tol).residual);
    }
    add_check(rep, "quadratic-bracket", family_name(fam), cfg.n, points, worst, tol);
  }
}

void run_momentum_suite(const RunConfig& cfg, Report& rep) {
  const Dimension dim(cfg.n);
  Rng rng = suite_rng(cfg, 77);
  double zero_level = 0.0, compact_comp = 0.0, equivariance = 0.0, orbit = 0.0;
  double reduced_energy = 0.0;
  for (int s = 0; s < cfg.points; ++s) {
    const PhasePoint p = random_point(dim, rng);
    const Couplings c = random_couplings(rng);
    const Matrix etaL = random_compact(dim, rng);
    const Matrix etaR = random_compact(dim, rng);
    const ExtendedPoint e = upsilon(p, c, etaL, etaR);
    const auto [J1, J2] = momentum_map(e);
    const double scale = 1.0 + lax_a(p, c).norm();
    zero_level = std::max(zero_level, J1.norm() / scale);
    compact_comp = std::max(compact_comp, J2.norm() / scale);

    // Equivariance under a fresh compact pair.
    const Matrix kL = random_compact(dim, rng);
    const Matrix kR = random_compact(dim, rng);
    ExtendedPoint moved;
    moved.y = kL * e.y * kR.adjoint();
    moved.Y = kR * e.Y * kR.adjoint();
    moved.rho = kL * e.rho * kL.adjoint();
    const auto [M1, M2] = momentum_map(moved);
    equivariance = std::max(
        equivariance, (M1 - kL * J1 * kL.adjoint()).norm() / (1.0 + J1.norm() + scale));
    equivariance = std::max(
        equivariance, (M2 - kR * J2 * kR.adjoint()).norm() / (1.0 + J2.norm() + scale));

    // The compact-moment value of V stays on the orbit of the reference point;
    // i * xi is Hermitian, so sorted spectra can be compared directly.
    Eigen::SelfAdjointEigenSolver<Matrix> orb(Matrix(kI * xi(v_vector(p, c), c)));
    Eigen::SelfAdjointEigenSolver<Matrix> ref(Matrix(kI * xi(e_vector(dim), c)));
    orbit = std::max(orbit,
                     (orb.eigenvalues() - ref.eigenvalues()).cwiseAbs().maxCoeff() /
                         (1.0 + ref.eigenvalues().cwiseAbs().maxCoeff()));

    // Reduced invariant: f1 at the reference representative vs the energy at
    // vanishing kappa.
    Couplings c0 = c;
    c0.kappa = 0.0;
    const ExtendedPoint plain = upsilon(p, c0);
    reduced_energy =
        std::max(reduced_energy, std::abs(f1(plain) - hamiltonian(p, c0)) /
                                     (1.0 + std::abs(hamiltonian(p, c0))));
  }
  add_check(rep, "momentum-map/zero-level", "", cfg.n, cfg.points, zero_level,
            tol_or(cfg, kTolMomentum));
  add_check(rep, "momentum-map/compact-component", "", cfg.n, cfg.points, compact_comp,
            tol_or(cfg, kTolMomentum));
  add_check(rep, "momentum-map/equivariance", "", cfg.n, cfg.points, equivariance,
            tol_or(cfg, kTolMomentum));
  add_check(rep, "momentum-map/orbit-spectrum", "", cfg.n, cfg.points, orbit,
            tol_or(cfg, kTolMomentum));
  add_check(rep, "momentum-map/reduced-energy", "", cfg.n, cfg.points, reduced_energy,
            tol_or(cfg, kTolReducedEnergy));
}

void run_laxeq_suite(const RunConfig& cfg, Report& rep) {
  const Dimension dim(cfg.n);
  Rng rng = suite_rng(cfg, 88);
  const int points = std::min(cfg.points, 5);
  double worst = 0.0;
  for (int s = 0; s < points; ++s) {
    const PhasePoint p = random_point(dim, rng);
    const Couplings c = random_couplings(rng);
    worst = std::max(worst, verify_lax_equation(p, c, cfg.flow_step).residual);
  }
  add_check(rep, "lax-equation/commutator-form", "hat", cfg.n, points, worst,
            tol_or(cfg, kTolLaxEq));
}

}  // namespace

// -- RunConfig ------------------------------------------------------------

BracketConfig RunConfig::bracket_config() const {
  BracketConfig bc;
  bc.fd_scale = fd_scale;
  bc.richardson = richardson;
  bc.min_gap = min_gap;
  bc.sign = bracket_sign();
  return bc;
}

std::vector<Family> RunConfig::selected_families() const {
  if (family == "all") return {Family::Plain, Family::Tilde, Family::Hat};
  if (family == "plain") return {Family::Plain};
  if (family == "tilde") return {Family::Tilde};
  if (family == "hat") return {Family::Hat};
  throw ConfigError("unknown family '" + family + "' (plain|tilde|hat|all)");
}

PhasePoint RunConfig::initial_point() const {
  if (lambda.has_value()) {
    PhasePoint p;
    p.lambda = Eigen::Map<const RVector>(lambda->data(), static_cast<long>(lambda->size()));
    if (theta.has_value()) {
      if (theta->size() != lambda->size())
        throw ConfigError("lambda and theta must have the same length");
      p.theta = Eigen::Map<const RVector>(theta->data(), static_cast<long>(theta->size()));
    } else {
      p.theta = RVector::Zero(static_cast<long>(lambda->size()));
    }
    try {
      p.validate(min_gap);
    } catch (const ChamberError& err) {
      throw ConfigError(std::string("invalid initial point: ") + err.what());
    }
    return p;
  }
  Rng rng(seed);
  return scattering_point(Dimension(n), rng);
}

void RunConfig::validate() const {
  if (n < 1) throw ConfigError("n must be >= 1");
  if (points < 1) throw ConfigError("points must be >= 1");
  if (!(mu < 0.0) || !(nu > 0.0) || nu * kappa < 0.0)
    throw ConfigError("couplings must satisfy mu < 0 < nu and nu*kappa >= 0");
  if (!(dt > 0.0) || !(t_end >= 0.0)) throw ConfigError("need dt > 0 and t_end >= 0");
  if (!(fd_scale > 0.0)) throw ConfigError("fd_scale must be positive");
  for (const std::string& s : suites) {
    if (std::find(kAllSuites.begin(), kAllSuites.end(), s) == kAllSuites.end())
      throw ConfigError("unknown suite '" + s + "'");
  }
  selected_families();
  if (theta.has_value() && !lambda.has_value())
    throw ConfigError("theta given without lambda");
}

namespace {

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> items;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    if (first != std::string::npos) items.push_back(item.substr(first, last - first + 1));
  }
  return items;
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("cannot parse number for '" + key + "': " + value);
  }
}

std::int64_t parse_int(const std::string& key, const std::string& value) {
  try {
    size_t pos = 0;
    const std::int64_t v = std::stoll(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("cannot parse integer for '" + key + "': " + value);
  }
}

std::vector<double> parse_double_list(const std::string& key, const std::string& value) {
  std::vector<double> out;
  for (const std::string& item : split_list(value)) out.push_back(parse_double(key, item));
  if (out.empty()) throw ConfigError("empty list for '" + key + "'");
  return out;
}

}  // namespace

void apply_override(RunConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "n")
    cfg.n = static_cast<int>(parse_int(key, value));
  else if (key == "seed")
    cfg.seed = static_cast<std::uint64_t>(parse_int(key, value));
  else if (key == "points")
    cfg.points = static_cast<int>(parse_int(key, value));
  else if (key == "mu")
    cfg.mu = parse_double(key, value);
  else if (key == "nu")
    cfg.nu = parse_double(key, value);
  else if (key == "kappa")
    cfg.kappa = parse_double(key, value);
  else if (key == "suites")
    cfg.suites = split_list(value);
  else if (key == "family")
    cfg.family = value;
  else if (key == "tol")
    cfg.tol = parse_double(key, value);
  else if (key == "out")
    cfg.out = value;
  else if (key == "fd_scale")
    cfg.fd_scale = parse_double(key, value);
  else if (key == "richardson")
    cfg.richardson = parse_int(key, value) != 0;
  else if (key == "min_gap")
    cfg.min_gap = parse_double(key, value);
  else if (key == "dt")
    cfg.dt = parse_double(key, value);
  else if (key == "t_end")
    cfg.t_end = parse_double(key, value);
  else if (key == "flow_step")
    cfg.flow_step = parse_double(key, value);
  else if (key == "lambda")
    cfg.lambda = parse_double_list(key, value);
  else if (key == "theta")
    cfg.theta = parse_double_list(key, value);
  else
    throw ConfigError("unknown configuration key '" + key + "'");
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  RunConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    const auto first = line.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r\n");
      const auto b = s.find_last_not_of(" \t\r\n");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw ConfigError("config line " + std::to_string(lineno) + ": empty key or value");
    apply_override(cfg, key, value);
  }
  return cfg;
}

// -- Drivers --------------------------------------------------------------

Report run_verify(const RunConfig& cfg) {
  cfg.validate();
  Report rep;
  rep.command = "verify";
  rep.seed = cfg.seed;
  rep.bracket_sign = bracket_sign();
  for (const std::string& suite : cfg.suites) {
    if (suite == "algebra")
      run_algebra_suite(cfg, rep);
    else if (suite == "lax")
      run_lax_suite(cfg, rep);
    else if (suite == "consistency")
      run_consistency_suite(cfg, rep);
    else if (suite == "commutation")
      run_commutation_suite(cfg, rep);
    else if (suite == "functional")
      run_functional_suite(cfg, rep);
    else if (suite == "theorem")
      run_theorem_suite(cfg, rep);
    else if (suite == "momentum")
      run_momentum_suite(cfg, rep);
    else if (suite == "laxeq")
      run_laxeq_suite(cfg, rep);
  }
  return rep;
}

namespace {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

Report run_simulate(const RunConfig& cfg) {
  cfg.validate();
  const PhasePoint p0 = cfg.initial_point();
  const Couplings coup{cfg.mu, cfg.nu, cfg.kappa};
  const Trajectory traj = integrate(p0, coup, cfg.t_end, cfg.dt);

  // Trajectory table with the per-time spectral drift of the Hat dressing.
  const std::filesystem::path out_dir(cfg.out);
  std::filesystem::create_directories(out_dir);
  std::ofstream csv(out_dir / "trajectory.csv");
  if (!csv) throw Error("run_simulate: cannot write trajectory.csv");
  const int n = p0.n();
  csv << "t";
  for (int c = 1; c <= n; ++c) csv << ",lambda_" << c;
  for (int c = 1; c <= n; ++c) csv << ",theta_" << c;
  csv << ",H,drift\n";
  const RVector ref = lax_spectrum(traj.states.front(), coup, LaxVariant::Hat);
  const double scale = std::max(1.0, ref.cwiseAbs().maxCoeff());
  double max_drift = 0.0;
  for (size_t i = 0; i < traj.states.size(); ++i) {
    const PhasePoint& p = traj.states[i];
    const RVector ev = lax_spectrum(p, coup, LaxVariant::Hat);
    const double drift = (ev - ref).cwiseAbs().maxCoeff() / scale;
    max_drift = std::max(max_drift, drift);
    csv << format_double(traj.times[i]);
    for (int c = 0; c < n; ++c) csv << ',' << format_double(p.lambda(c));
    for (int c = 0; c < n; ++c) csv << ',' << format_double(p.theta(c));
    csv << ',' << format_double(hamiltonian(p, coup)) << ',' << format_double(drift) << '\n';
  }

  const double e_drift = energy_drift(traj);
  Report rep;
  rep.command = "simulate";
  rep.seed = cfg.seed;
  rep.bracket_sign = bracket_sign();
  add_check(rep, "flow/energy-conservation", "", n, static_cast<int>(traj.states.size()),
            e_drift, tol_or(cfg, kTolDrift));
  add_check(rep, "flow/isospectrality", "hat", n, static_cast<int>(traj.states.size()),
            max_drift, tol_or(cfg, kTolDrift));

  nlohmann::json extra;
  extra["t_end"] = cfg.t_end;
  extra["dt"] = cfg.dt;
  extra["steps"] = traj.states.size() - 1;
  extra["energy_drift"] = e_drift;
  extra["spectral_drift"] = max_drift;
  extra["hamiltonian_initial"] = hamiltonian(traj.states.front(), coup);
  extra["hamiltonian_final"] = hamiltonian(traj.states.back(), coup);
  extra["final_lambda"] = std::vector<double>(traj.states.back().lambda.begin(),
                                              traj.states.back().lambda.end());
  extra["final_theta"] = std::vector<double>(traj.states.back().theta.begin(),
                                             traj.states.back().theta.end());
  rep.extra_json = extra.dump();
  return rep;
}

Report run_calibrate(const RunConfig& cfg) {
  cfg.validate();
  Report rep;
  rep.command = "calibrate";
  rep.seed = cfg.seed;
  rep.bracket_sign = bracket_sign();
  const CalibrationResult result = calibrate_sign();
  const double winner =
      result.sign > 0 ? result.residual_plus : result.residual_minus;
  add_check(rep, "bracket-sign/decisive", "plain", 1, 2, winner, 1e-5);
  add_check(rep, "bracket-sign/matches-default", "plain", 1, 1,
            result.sign == bracket_sign() ? 0.0 : 1.0, 0.5);
  nlohmann::json extra;
  extra["sign"] = result.sign;
  extra["residual_plus"] = result.residual_plus;
  extra["residual_minus"] = result.residual_minus;
  rep.extra_json = extra.dump();
  return rep;
}

int exit_code(const Report& report) { return report.all_pass() ? 0 : 1; }

}  // namespace rsvd
