#include <doctest.h>

#include <cmath>

#include "rsvd/dynamics.hpp"
#include "rsvd/random.hpp"

using namespace rsvd;

TEST_CASE("analytic energy gradients match central differences") {
  Rng rng(131);
  for (int n : {1, 2, 3}) {
    const PhasePoint p = random_point(Dimension(n), rng);
    const Couplings c = random_couplings(rng, true);
    const HamiltonianGradients g = hamiltonian_gradients(p, c);
    const double h = 1e-6;
    for (int a = 0; a < n; ++a) {
      PhasePoint pp = p, pm = p;
      pp.lambda(a) += h;
      pm.lambda(a) -= h;
      const double dl = (hamiltonian(pp, c) - hamiltonian(pm, c)) / (2.0 * h);
      CHECK(std::abs(g.dlambda(a) - dl) < 1e-6 * (1.0 + std::abs(dl)));
      pp = p;
      pm = p;
      pp.theta(a) += h;
      pm.theta(a) -= h;
      const double dt = (hamiltonian(pp, c) - hamiltonian(pm, c)) / (2.0 * h);
      CHECK(std::abs(g.dtheta(a) - dt) < 1e-6 * (1.0 + std::abs(dt)));
    }
  }
}

TEST_CASE("flow right-hand side uses the calibrated orientation") {
  Rng rng(137);
  const PhasePoint p = random_point(Dimension(2), rng);
  const Couplings c = random_couplings(rng, true);
  const HamiltonianGradients g = hamiltonian_gradients(p, c);
  const FlowRhs rhs = flow_rhs(p, c);
  const double half = 0.5 * bracket_sign();
  CHECK((rhs.dlambda - half * g.dtheta).cwiseAbs().maxCoeff() < 1e-13);
  CHECK((rhs.dtheta + half * g.dlambda).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("energy and spectrum are conserved along the flow") {
  RVector lambda(2), theta(2);
  lambda << 3.0, 1.2;
  theta << 0.25, -0.35;
  const PhasePoint p0{lambda, theta};
  const Couplings c{-1.0, 1.0, 0.5};
  const Trajectory traj = integrate(p0, c, 2.0, 1e-3);
  CHECK(traj.states.size() == 2001);
  CHECK(energy_drift(traj) < 1e-10);
  CHECK(spectral_drift(traj, LaxVariant::Hat) < 1e-9);
  // Power traces of the dressed Lax matrix are conserved too.
  const Matrix A0 = lax_variant(traj.states.front(), c, LaxVariant::Hat);
  const Matrix A1 = lax_variant(traj.states.back(), c, LaxVariant::Hat);
  for (int k : {2, 3}) {
    Matrix P0 = Matrix::Identity(4, 4), P1 = P0;
    for (int i = 0; i < k; ++i) {
      P0 = P0 * A0;
      P1 = P1 * A1;
    }
    const double t0 = P0.trace().real();
    CHECK(std::abs(P1.trace().real() - t0) < 1e-8 * (1.0 + std::abs(t0)));
  }
}

TEST_CASE("integrator converges at fourth order") {
  RVector lambda(2), theta(2);
  lambda << 2.6, 0.9;
  theta << -0.3, 0.2;
  const PhasePoint p0{lambda, theta};
  const Couplings c{-0.9, 1.1, 0.4};
  const double t_end = 1.0;
  auto endpoint = [&](double dt) {
    const Trajectory traj = integrate(p0, c, t_end, dt);
    return traj.states.back();
  };
  const PhasePoint ref = endpoint(1.0 / 512.0);
  auto error = [&](const PhasePoint& q) {
    return std::max((q.lambda - ref.lambda).cwiseAbs().maxCoeff(),
                    (q.theta - ref.theta).cwiseAbs().maxCoeff());
  };
  const double e1 = error(endpoint(1.0 / 32.0));
  const double e2 = error(endpoint(1.0 / 64.0));
  const double order = std::log2(e1 / e2);
  CHECK(order > 3.5);
  CHECK(order < 4.5);
}

TEST_CASE("dressed spectrum is real and positive") {
  Rng rng(151);
  const PhasePoint p = random_point(Dimension(3), rng);
  const Couplings c = random_couplings(rng, true);
  for (LaxVariant v : {LaxVariant::Plain, LaxVariant::Tilde, LaxVariant::Hat}) {
    const RVector spec = lax_spectrum(p, c, v);
    CHECK(spec.minCoeff() > 0.0);
    for (int i = 1; i < spec.size(); ++i) CHECK(spec(i) >= spec(i - 1));
  }
}

TEST_CASE("lax form of the equations of motion") {
  Rng rng(157);
  for (int n : {1, 2}) {
    for (double kappa : {0.0, 1.0}) {
      const PhasePoint p = random_point(Dimension(n), rng);
      Couplings c = random_couplings(rng, true);
      c.kappa = kappa;
      const LaxEquationCheck check = verify_lax_equation(p, c);
      CAPTURE(n);
      CAPTURE(kappa);
      CHECK(check.residual < 1e-5);
    }
  }
}

TEST_CASE("negative control: reversing the flow breaks the lax equation") {
  Rng rng(163);
  const PhasePoint p = random_point(Dimension(2), rng);
  Couplings c = random_couplings(rng, true);
  c.kappa = 1.0;
  const LaxEquationCheck check = verify_lax_equation(p, c, 1e-4, -bracket_sign());
  CHECK(check.residual > 1e-2);
}

TEST_CASE("integration rejects a chamber exit") {
  // A single fast particle next to the wall with an absurd step size: whichever
  // rapidity sign points inward overshoots straight through the wall.
  RVector lambda(1), theta(1);
  lambda << 0.05;
  const Couplings c{-1.5, 2.0, 0.0};
  bool threw = false;
  for (double th : {-3.0, 3.0}) {
    theta << th;
    try {
      integrate(PhasePoint{lambda, theta}, c, 50.0, 0.5);
    } catch (const Error&) {
      threw = true;
    }
  }
  CHECK(threw);
}
