#include <doctest.h>

#include <cmath>

#include "rsvd/dynamics.hpp"
#include "rsvd/poisson.hpp"
#include "rsvd/random.hpp"

using namespace rsvd;

TEST_CASE("coordinate brackets") {
  Rng rng(101);
  const PhasePoint p = random_point(Dimension(2), rng);
  const double half = 0.5 * bracket_sign();
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      ScalarField la = [a](const PhasePoint& q) { return Complex(q.lambda(a), 0.0); };
      ScalarField lb = [b](const PhasePoint& q) { return Complex(q.lambda(b), 0.0); };
      ScalarField ta = [a](const PhasePoint& q) { return Complex(q.theta(a), 0.0); };
      ScalarField tb = [b](const PhasePoint& q) { return Complex(q.theta(b), 0.0); };
      const double delta = a == b ? 1.0 : 0.0;
      CHECK(std::abs(bracket(la, tb, p) - half * delta) < 1e-9);
      CHECK(std::abs(bracket(ta, lb, p) + half * delta) < 1e-9);
      CHECK(std::abs(bracket(la, lb, p)) < 1e-9);
      CHECK(std::abs(bracket(ta, tb, p)) < 1e-9);
    }
  }
}

TEST_CASE("bracket of a function with itself vanishes") {
  Rng rng(103);
  const PhasePoint p = random_point(Dimension(2), rng);
  const Couplings c = random_couplings(rng, true);
  ScalarField H = [&c](const PhasePoint& q) { return Complex(hamiltonian(q, c), 0.0); };
  CHECK(std::abs(bracket(H, H, p)) < 1e-9);
}

TEST_CASE("derivative stencil reproduces the analytic energy gradients") {
  Rng rng(107);
  const PhasePoint p = random_point(Dimension(3), rng);
  const Couplings c = random_couplings(rng, true);
  const LaxDerivatives d = lax_derivatives(p, c, LaxVariant::Tilde);
  const HamiltonianGradients g = hamiltonian_gradients(p, c);
  for (int a = 0; a < 3; ++a) {
    CHECK(std::abs(0.5 * d.dlambda[a].trace().real() - g.dlambda(a)) <
          1e-7 * (1.0 + std::abs(g.dlambda(a))));
    CHECK(std::abs(0.5 * d.dtheta[a].trace().real() - g.dtheta(a)) <
          1e-7 * (1.0 + std::abs(g.dtheta(a))));
  }
}

TEST_CASE("quadratic bracket holds for every dressing") {
  Rng rng(109);
  for (int n : {1, 2}) {
    const PhasePoint p = random_point(Dimension(n), rng);
    Couplings c = random_couplings(rng, true);
    for (Family family : {Family::Plain, Family::Tilde, Family::Hat}) {
      if (family == Family::Plain) c.kappa = 0.0;
      const TheoremCheck check = verify_theorem(p, c, family);
      CAPTURE(static_cast<int>(family));
      CAPTURE(n);
      CAPTURE(check.residual);
      CHECK(check.pass);
      CHECK(check.residual < 5e-6);
    }
  }
}

TEST_CASE("negative control: a flipped mixing coefficient breaks the bracket") {
  Rng rng(113);
  const PhasePoint p = random_point(Dimension(2), rng);
  Couplings c = random_couplings(rng, true);
  c.kappa = 0.0;
  const Matrix lhs = tensor_bracket_lax(p, c, LaxVariant::Plain);
  QuadCoefficients q = quad_plain(p, c);
  q.b = -q.b;  // sabotage
  const Matrix rhs = quadratic_rhs(q, lax_a(p, c));
  CHECK((lhs - rhs).norm() / (1.0 + rhs.norm()) > 1e-2);
}

TEST_CASE("richardson extrapolation tightens the residual") {
  Rng rng(127);
  const PhasePoint p = random_point(Dimension(1), rng);
  Couplings c = random_couplings(rng, true);
  c.kappa = 0.0;
  BracketConfig plain_cfg;
  plain_cfg.richardson = false;
  BracketConfig rich_cfg;
  rich_cfg.richardson = true;
  const double res_plain = verify_theorem(p, c, Family::Plain, plain_cfg, 1.0).residual;
  const double res_rich = verify_theorem(p, c, Family::Plain, rich_cfg, 1.0).residual;
  CHECK(res_rich < res_plain);
  CHECK(res_rich * 10.0 < res_plain);  // at least one order from the h^4 term
}

TEST_CASE("stencil points must stay inside the chamber") {
  RVector lambda(2), theta(2);
  lambda << 1.05, 1.0;
  theta << 0.0, 0.0;
  const PhasePoint p{lambda, theta};
  BracketConfig cfg;
  cfg.fd_scale = 0.5;  // absurdly wide stencil; cannot shrink enough
  ScalarField f = [](const PhasePoint& q) { return Complex(q.lambda(0), 0.0); };
  ScalarField g = [](const PhasePoint& q) { return Complex(q.theta(0), 0.0); };
  CHECK_THROWS_AS(bracket(f, g, p, cfg), ChamberError);
}

TEST_CASE("sign calibration is decisive and matches the compiled default") {
  const CalibrationResult result = calibrate_sign();
  CHECK(result.sign == bracket_sign());
  const double winner = result.sign > 0 ? result.residual_plus : result.residual_minus;
  const double loser = result.sign > 0 ? result.residual_minus : result.residual_plus;
  CHECK(winner < 1e-5);
  CHECK(loser > 1e-2);
}
