#include "rsvd/poisson.hpp"

#include <cmath>

namespace rsvd {

namespace {

/// Coordinates are indexed 0..2n-1: first the positions, then the rapidities.
PhasePoint displaced(const PhasePoint& p, int coord, double delta) {
  PhasePoint q = p;
  const int n = p.n();
  if (coord < n)
    q.lambda(coord) += delta;
  else
    q.theta(coord - n) += delta;
  return q;
}

bool stencil_ok(const PhasePoint& p, int coord, double h, double min_gap) {
  const int n = p.n();
  if (coord >= n) return true;  // rapidity displacements cannot leave the chamber
  for (double d : {h, -h, 0.5 * h, -0.5 * h}) {
    try {
      displaced(p, coord, d).validate(min_gap);
    } catch (const ChamberError&) {
      return false;
    }
  }
  return true;
}

/// Step for the given coordinate, shrunk (a few times at most) to keep the
/// whole stencil inside the chamber.
double coord_step(const PhasePoint& p, int coord, const BracketConfig& cfg) {
  const int n = p.n();
  const double x = coord < n ? p.lambda(coord) : p.theta(coord - n);
  double h = cfg.fd_scale * (1.0 + std::abs(x));
  for (int shrink = 0; shrink < 4; ++shrink) {
    if (stencil_ok(p, coord, h, cfg.min_gap)) return h;
    h *= 0.5;
  }
  throw ChamberError("finite differences: stencil cannot be kept inside the chamber");
}

/// Central difference with optional one-level Richardson extrapolation.
template <typename Value, typename Eval>
Value central_derivative(const Eval& eval, const PhasePoint& p, int coord, double h,
                         bool richardson) {
  const Value coarse = (eval(displaced(p, coord, h)) - eval(displaced(p, coord, -h))) / (2.0 * h);
  if (!richardson) return coarse;
  const Value fine =
      (eval(displaced(p, coord, 0.5 * h)) - eval(displaced(p, coord, -0.5 * h))) / h;
  return (4.0 * fine - coarse) / 3.0;
}

}  // namespace

int bracket_sign() { return -1; }

Complex bracket(const ScalarField& f, const ScalarField& g, const PhasePoint& p,
                const BracketConfig& cfg) {
  p.validate(cfg.min_gap);
  const int n = p.n();
  Complex acc(0.0, 0.0);
  for (int c = 0; c < n; ++c) {
    const double hl = coord_step(p, c, cfg);
    const double ht = coord_step(p, n + c, cfg);
    const Complex df_dl = central_derivative<Complex>(f, p, c, hl, cfg.richardson);
    const Complex dg_dl = central_derivative<Complex>(g, p, c, hl, cfg.richardson);
    const Complex df_dt = central_derivative<Complex>(f, p, n + c, ht, cfg.richardson);
    const Complex dg_dt = central_derivative<Complex>(g, p, n + c, ht, cfg.richardson);
    acc += df_dl * dg_dt - df_dt * dg_dl;
  }
  return 0.5 * static_cast<double>(cfg.sign) * acc;
}

LaxDerivatives lax_derivatives(const PhasePoint& p, const Couplings& c, LaxVariant v,
                               const BracketConfig& cfg) {
  p.validate(cfg.min_gap);
  const int n = p.n();
  const auto eval = [&](const PhasePoint& q) { return lax_variant(q, c, v); };
  LaxDerivatives d;
  d.dlambda.reserve(static_cast<size_t>(n));
  d.dtheta.reserve(static_cast<size_t>(n));
  for (int cc = 0; cc < n; ++cc) {
    const double h = coord_step(p, cc, cfg);
    d.dlambda.push_back(central_derivative<Matrix>(eval, p, cc, h, cfg.richardson));
  }
  for (int cc = 0; cc < n; ++cc) {
    const double h = coord_step(p, n + cc, cfg);
    d.dtheta.push_back(central_derivative<Matrix>(eval, p, n + cc, h, cfg.richardson));
  }
  return d;
}

Matrix tensor_bracket_lax(const PhasePoint& p, const Couplings& c, LaxVariant v,
                          const BracketConfig& cfg) {
  const int n = p.n();
  const int NN = 4 * n * n;
  const LaxDerivatives d = lax_derivatives(p, c, v, cfg);
  Matrix T = Matrix::Zero(NN, NN);
  for (int cc = 0; cc < n; ++cc) {
    const auto c_idx = static_cast<size_t>(cc);
    T += kron(d.dlambda[c_idx], d.dtheta[c_idx]) - kron(d.dtheta[c_idx], d.dlambda[c_idx]);
  }
  return 0.5 * static_cast<double>(cfg.sign) * T;
}

TheoremCheck verify_theorem(const PhasePoint& p, const Couplings& c, Family family,
                            const BracketConfig& cfg, double tolerance) {
  Couplings cc = c;
  LaxVariant variant = LaxVariant::Plain;
  QuadCoefficients q;
  switch (family) {
    case Family::Plain:
      cc.kappa = 0.0;  // the undressed structure is the kappa = 0 bracket
      q = quad_plain(p, cc);
      variant = LaxVariant::Plain;
      break;
    case Family::Tilde:
      q = quad_tilde(p, cc);
      variant = LaxVariant::Tilde;
      break;
    case Family::Hat:
      q = quad_hat(p, cc);
      variant = LaxVariant::Hat;
      break;
  }
  const Matrix lhs = tensor_bracket_lax(p, cc, variant, cfg);
  const Matrix rhs = quadratic_rhs(q, lax_variant(p, cc, variant));

  TheoremCheck check;
  check.family = family;
  check.n = p.n();
  check.residual = (lhs - rhs).norm() / (1.0 + rhs.norm());
  check.tolerance = tolerance;
  check.pass = check.residual < tolerance;
  return check;
}

CalibrationResult calibrate_sign(double tolerance) {
  PhasePoint p;
  p.lambda = RVector::Constant(1, 1.0);
  p.theta = RVector::Constant(1, 0.7);
  const Couplings c{-0.8, 1.1, 0.0};

  BracketConfig cfg;
  CalibrationResult result;
  cfg.sign = +1;
  result.residual_plus = verify_theorem(p, c, Family::Plain, cfg).residual;
  cfg.sign = -1;
  result.residual_minus = verify_theorem(p, c, Family::Plain, cfg).residual;

  const double lo = std::min(result.residual_plus, result.residual_minus);
  const double hi = std::max(result.residual_plus, result.residual_minus);
  if (!(lo < tolerance && hi > 1e-2))
    throw CalibrationError("calibrate_sign: no decisive orientation (residuals " +
                           std::to_string(result.residual_plus) + " / " +
                           std::to_string(result.residual_minus) + ")");
  result.sign = result.residual_plus < result.residual_minus ? +1 : -1;
  return result;
}

}  // namespace rsvd
