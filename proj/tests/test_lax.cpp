#include <doctest.h>

#include <cmath>

#include "rsvd/algebra.hpp"
#include "rsvd/lax.hpp"
#include "rsvd/random.hpp"
#include "rsvd/reduction.hpp"

using namespace rsvd;

namespace {

PhasePoint small_point() {
  RVector lambda(2), theta(2);
  lambda << 2.0, 0.8;
  theta << 0.4, -0.3;
  return PhasePoint{lambda, theta};
}

}  // namespace

TEST_CASE("phase-space validation") {
  RVector lambda(2), theta(2);
  lambda << 1.0, 2.0;  // wrong order
  theta << 0.0, 0.0;
  CHECK_THROWS_AS((PhasePoint{lambda, theta}.validate()), ChamberError);
  lambda << 2.0, -0.5;  // below the wall
  CHECK_THROWS_AS((PhasePoint{lambda, theta}.validate()), ChamberError);
  lambda << 2.0, 1.0;
  CHECK_NOTHROW((PhasePoint{lambda, theta}.validate()));
}

TEST_CASE("coupling validation") {
  CHECK_THROWS_AS((Couplings{0.0, 1.0, 0.0}.validate()), CouplingError);
  CHECK_NOTHROW((Couplings{-1.0, 1.0, 0.5}.validate()));
}

TEST_CASE("single-particle dressing factor") {
  RVector lambda(1), theta(1);
  lambda << 2.0;
  theta << 0.3;
  const PhasePoint p{lambda, theta};
  const Couplings c{-1.0, 1.0, 0.0};
  const CVector z = z_values(p, c);
  // No interaction product for n = 1: z_1 = -(1 + i nu / lambda_1).
  CHECK(std::abs(z(0) - Complex(-1.0, -0.5)) < 1e-15);

  const CVector f = f_vector(p, c);
  const double mod = std::abs(z(0));
  CHECK(std::abs(f(0)) == doctest::Approx(std::exp(0.3) * std::sqrt(mod)));
  // f_a * f_{n+a} recovers the conjugate dressing factor.
  CHECK(std::abs(f(0) * f(1) - std::conj(z(0))) < 1e-14);
}

TEST_CASE("dressing factors for several particles") {
  const PhasePoint p = small_point();
  const Couplings c{-0.7, 1.2, 0.0};
  const CVector z = z_values(p, c);
  const Complex i2mu(0.0, 2.0 * c.mu);
  const Complex expected0 = -(1.0 + kI * c.nu / p.lambda(0)) *
                            (1.0 + i2mu / (p.lambda(0) - p.lambda(1))) *
                            (1.0 + i2mu / (p.lambda(0) + p.lambda(1)));
  CHECK(std::abs(z(0) - expected0) < 1e-14);
  const CVector f = f_vector(p, c);
  for (int a = 0; a < 2; ++a) {
    CHECK(std::abs(f(a) * f(2 + a) - std::conj(z(a))) < 1e-13);
  }
}

TEST_CASE("lax matrix is positive definite and lies on the group") {
  Rng rng(31);
  for (int n : {1, 2, 3}) {
    for (int trial = 0; trial < 8; ++trial) {
      const PhasePoint p = random_point(Dimension(n), rng);
      const Couplings c = random_couplings(rng, true);
      const Matrix A = lax_a(p, c);
      CHECK((A - A.adjoint()).norm() < 1e-11 * (1.0 + A.norm()));
      Eigen::SelfAdjointEigenSolver<Matrix> es(A);
      CHECK(es.eigenvalues().minCoeff() > 0.0);
      CHECK(group_residual(A) < 1e-9 * A.norm() * A.norm());
    }
  }
}

TEST_CASE("trace of the gauged matrices reproduces the hamiltonian") {
  Rng rng(37);
  for (int n : {1, 2, 3}) {
    const PhasePoint p = random_point(Dimension(n), rng);
    const Couplings c = random_couplings(rng, true);
    const double H = hamiltonian(p, c);
    const double half_tilde = 0.5 * lax_variant(p, c, LaxVariant::Tilde).trace().real();
    const double half_hat = 0.5 * lax_variant(p, c, LaxVariant::Hat).trace().real();
    CHECK(std::abs(half_tilde - H) < 1e-11 * (1.0 + std::abs(H)));
    CHECK(std::abs(half_hat - H) < 1e-11 * (1.0 + std::abs(H)));
  }
}

TEST_CASE("hamiltonian closed form at one particle") {
  RVector lambda(1), theta(1);
  lambda << 1.5;
  theta << 0.2;
  const PhasePoint p{lambda, theta};
  const Couplings c{-0.9, 0.8, 0.6};
  const double x = lambda(0);
  const double expected =
      std::cosh(0.4) * std::sqrt(1.0 + 0.64 / (x * x)) * std::sqrt(1.0 + 0.36 / (x * x)) +
      (0.8 * 0.6) / (4.0 * 0.81) * ((1.0 + 4.0 * 0.81 / (x * x)) - 1.0);
  CHECK(hamiltonian(p, c) == doctest::Approx(expected).epsilon(1e-13));
}

TEST_CASE("square root of the lax matrix") {
  Rng rng(41);
  const PhasePoint p = random_point(Dimension(2), rng);
  const Couplings c = random_couplings(rng, true);
  const Matrix A = lax_a(p, c);
  const Matrix R = hermitian_sqrt(A);
  CHECK((R * R - A).norm() < 1e-10 * (1.0 + A.norm()));
  CHECK((R - R.adjoint()).norm() < 1e-11 * (1.0 + R.norm()));
  const Matrix Ri = hermitian_inv_sqrt(A);
  CHECK((R * Ri - Matrix::Identity(4, 4)).norm() < 1e-10);
}

TEST_CASE("square root rejects indefinite input") {
  Matrix M = Matrix::Identity(2, 2);
  M(1, 1) = -1.0;
  CHECK_THROWS_AS(hermitian_sqrt(M), DomainError);
}

TEST_CASE("sphere vector") {
  Rng rng(43);
  for (int n : {1, 2, 3}) {
    const PhasePoint p = random_point(Dimension(n), rng);
    const Couplings c = random_couplings(rng, true);
    const CVector v = v_vector(p, c);
    const auto [chi, norm] = sphere_residuals(v);
    CHECK(chi < 1e-10 * (1.0 + v.norm()));
    CHECK(norm < 1e-10 * (1.0 + v.norm()));
  }
}

TEST_CASE("gauge profile identities") {
  const double kappa = 1.3;
  for (double x : {0.4, 1.0, 2.7}) {
    const double al = gauge_alpha(x, kappa);
    const Complex be = gauge_beta(x, kappa);
    CHECK(std::abs(al * al + be * be - 1.0) < 1e-14);
    const Complex P = gauge_p(x, kappa);
    const Complex Q = gauge_q(x, kappa);
    CHECK(std::abs(P - (al * al - be * be)) < 1e-14);
    CHECK(std::abs(Q - 2.0 * al * be) < 1e-14);
    CHECK(std::abs(P * P + Q * Q - 1.0) < 1e-14);
  }
}

TEST_CASE("gauge derivative profiles match finite differences") {
  const double kappa = 0.9;
  const double h = 1e-6;
  for (double x : {0.5, 1.4, 3.2}) {
    const double da = (gauge_alpha(x + h, kappa) - gauge_alpha(x - h, kappa)) / (2.0 * h);
    const Complex db = (gauge_beta(x + h, kappa) - gauge_beta(x - h, kappa)) / (2.0 * h);
    CHECK(std::abs(gauge_alpha_deriv(x, kappa) - da) < 1e-8);
    CHECK(std::abs(gauge_beta_deriv(x, kappa) - db) < 1e-8);
  }
}

TEST_CASE("gauge matrices invert as stated") {
  Rng rng(47);
  const PhasePoint p = random_point(Dimension(3), rng);
  const double kappa = 0.8;
  const Matrix h = h_matrix(p.lambda, kappa);
  const Matrix hi = h_inverse(p.lambda, kappa);
  CHECK((h * hi - Matrix::Identity(6, 6)).norm() < 1e-13);
  CHECK((h - h.adjoint()).norm() < 1e-13);
  const Matrix H = big_h(p.lambda, kappa);
  const Matrix Hi = big_h_inverse(p.lambda, kappa);
  CHECK((H * Hi - Matrix::Identity(6, 6)).norm() < 1e-13);
  CHECK((h * h - H).norm() < 1e-13);
}

TEST_CASE("logarithmic derivative of the two-step gauge") {
  const Basis basis{Dimension(2)};
  RVector lambda(2);
  lambda << 1.7, 0.6;
  const double kappa = 1.1;
  const double h = 1e-6;
  for (int c = 0; c < 2; ++c) {
    RVector lp = lambda, lm = lambda;
    lp(c) += h;
    lm(c) -= h;
    const Matrix fd = big_h_inverse(lambda, kappa) *
                      ((big_h(lp, kappa) - big_h(lm, kappa)) / (2.0 * h));
    const Matrix W = big_h_log_deriv(lambda, kappa, c);
    CHECK((W - fd).norm() < 1e-8);
    // Closed form: a multiple of the long-root generator at site c.
    const double x = lambda(c);
    const double s = std::hypot(x, kappa);
    const Matrix expected = (std::sqrt(2.0) * kappa / (x * s)) *
                            basis.x_minus(Root{RootKind::Long, c, c}, Flavor::Imag);
    CHECK((W - expected).norm() < 1e-13);
  }
}

TEST_CASE("all gauge variants coincide at vanishing third coupling") {
  Rng rng(53);
  const PhasePoint p = random_point(Dimension(2), rng);
  const Couplings c{-1.1, 0.9, 0.0};
  const Matrix A = lax_a(p, c);
  for (LaxVariant v : {LaxVariant::Tilde, LaxVariant::Hat, LaxVariant::Check}) {
    CHECK((lax_variant(p, c, v) - A).norm() < 1e-12 * (1.0 + A.norm()));
  }
}

TEST_CASE("gauge variants are conjugates, hence isospectral") {
  Rng rng(59);
  const PhasePoint p = random_point(Dimension(2), rng);
  Couplings c = random_couplings(rng, true);
  c.kappa = 0.9;
  auto spectrum = [](const Matrix& M) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (M + M.adjoint()));
    return es.eigenvalues();
  };
  const RVector base = spectrum(lax_variant(p, c, LaxVariant::Tilde));
  // Hat and Check are similar to Tilde but not Hermitian in general; compare
  // against the full eigenvalue list instead.
  for (LaxVariant v : {LaxVariant::Hat, LaxVariant::Check}) {
    const Matrix M = lax_variant(p, c, v);
    Eigen::ComplexEigenSolver<Matrix> es(M);
    RVector re = es.eigenvalues().real();
    std::sort(re.data(), re.data() + re.size());
    CHECK((re - base).cwiseAbs().maxCoeff() < 1e-9 * (1.0 + base.cwiseAbs().maxCoeff()));
    CHECK(es.eigenvalues().imag().cwiseAbs().maxCoeff() < 1e-9 * (1.0 + base.cwiseAbs().maxCoeff()));
  }
}
