#include <doctest.h>

#include <cmath>

#include "rsvd/algebra.hpp"
#include "rsvd/random.hpp"
#include "rsvd/rmatrix.hpp"
#include "rsvd/tensor.hpp"

using namespace rsvd;

TEST_CASE("structure vectors live in the off-diagonal slots") {
  Rng rng(61);
  const PhasePoint p = random_point(Dimension(3), rng);
  const Couplings c = random_couplings(rng, true);
  const auto S = s_vectors(p, c);
  const auto T = t_vectors(p, c);
  REQUIRE(S.size() == 3);
  REQUIRE(T.size() == 3);
  for (int a = 0; a < 3; ++a) {
    const RefinedParts sp = refined_split(S[a]);
    CHECK(sp.m.norm() + sp.a.norm() < 1e-13);
    CHECK(sp.m_perp.norm() < 1e-13);  // S is built from Hermitian root vectors only
    const RefinedParts tp = refined_split(T[a]);
    CHECK(tp.m.norm() + tp.a.norm() < 1e-13);
    CHECK(tp.a_perp.norm() < 1e-13);  // T is built from compact root vectors only
  }
}

TEST_CASE("interaction kernel is antisymmetric") {
  RVector lambda(3), theta(3);
  lambda << 2.5, 1.4, 0.5;
  theta << 0.1, -0.2, 0.3;
  const PhasePoint p{lambda, theta};
  const Couplings c{-0.8, 1.0, 0.0};
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      if (a == b) continue;
      CHECK(psi(p, c, a, b) == doctest::Approx(-psi(p, c, b, a)).epsilon(1e-14));
    }
  }
  CHECK_THROWS_AS(psi(p, c, 0, 0), IndexError);
}

TEST_CASE("plain coefficients obey the exchange laws") {
  Rng rng(67);
  for (int n : {1, 2, 3}) {
    for (int trial = 0; trial < 4; ++trial) {
      const PhasePoint p = random_point(Dimension(n), rng);
      const Couplings c = random_couplings(rng, true);
      const QuadCoefficients q = quad_plain(p, c);
      const auto res = consistency_residuals(q);
      for (double r : res) CHECK(r < 1e-11);
    }
  }
}

TEST_CASE("gauged coefficients obey the exchange laws") {
  Rng rng(71);
  for (int n : {1, 2}) {
    for (double kappa : {0.0, 0.7, 1.5}) {
      const PhasePoint p = random_point(Dimension(n), rng);
      Couplings c = random_couplings(rng, true);
      c.kappa = kappa;
      for (Family family : {Family::Tilde, Family::Hat}) {
        const QuadCoefficients q =
            family == Family::Tilde ? quad_tilde(p, c) : quad_hat(p, c);
        const auto res = consistency_residuals(q);
        for (double r : res) CHECK(r < 1e-10);
      }
    }
  }
}

TEST_CASE("hat family keeps the antisymmetric part untouched") {
  Rng rng(73);
  const PhasePoint p = random_point(Dimension(2), rng);
  Couplings c = random_couplings(rng, true);
  c.kappa = 1.1;
  const QuadCoefficients plain = quad_plain(p, c);
  const QuadCoefficients hat = quad_hat(p, c);
  CHECK((hat.a - plain.a).norm() < 1e-13);
}

TEST_CASE("gamma correction matches the gauge derivative") {
  RVector lambda(2);
  lambda << 1.9, 0.7;
  const double kappa = 1.2;
  const Basis basis{Dimension(2)};
  const Matrix G = gamma12(lambda, kappa);
  const double h = 1e-6;
  Matrix fd = Matrix::Zero(16, 16);
  for (int c = 0; c < 2; ++c) {
    RVector lp = lambda, lm = lambda;
    lp(c) += h;
    lm(c) -= h;
    const Matrix dhi = (h_inverse(lp, kappa) - h_inverse(lm, kappa)) / (2.0 * h);
    fd += kron(basis.d_minus(c) / std::sqrt(2.0), dhi);
  }
  CHECK((G - fd).norm() < 1e-8);
}

TEST_CASE("closed form of the one-sided correction") {
  RVector lambda(2);
  lambda << 2.2, 0.9;
  const double kappa = 0.8;
  const Matrix omega = detail::omega12(lambda, kappa);
  const Matrix G = gamma12(lambda, kappa);
  const Matrix H2 = slot2(big_h(lambda, kappa));
  const Matrix h2i = slot2(h_inverse(lambda, kappa));
  CHECK((omega + (h2i * G + G * h2i) * H2).norm() < 1e-12);
}

TEST_CASE("functional identities of the gauge profiles") {
  for (double kappa : {0.0, 0.85, 1.6}) {
    const auto res = functional_equation_residuals(1.6, 0.9, kappa);
    for (double r : res) CHECK(r < 1e-13);
  }
}

TEST_CASE("conjugation rules for the two-step gauge") {
  Rng rng(79);
  for (int n : {1, 2, 3}) {
    const PhasePoint p = random_point(Dimension(n), rng);
    const double kappa = 0.3 + 0.5 * n;
    const CommutationReport report = commutation_residuals(p.lambda, kappa);
    for (double r : report.residuals) CHECK(r < 1e-13);
    CHECK(report.max_residual < 1e-13);
  }
}

TEST_CASE("quadratic bracket coefficients resum into a linear form") {
  Rng rng(83);
  const PhasePoint p = random_point(Dimension(2), rng);
  for (Family family : {Family::Plain, Family::Tilde, Family::Hat}) {
    Couplings c = random_couplings(rng, true);
    if (family == Family::Plain) c.kappa = 0.0;
    const LaxVariant variant = family == Family::Plain   ? LaxVariant::Plain
                               : family == Family::Tilde ? LaxVariant::Tilde
                                                         : LaxVariant::Hat;
    const QuadCoefficients q = family == Family::Plain   ? quad_plain(p, c)
                               : family == Family::Tilde ? quad_tilde(p, c)
                                                         : quad_hat(p, c);
    const Matrix L = lax_variant(p, c, variant);
    const Matrix quad = quadratic_rhs(q, L);

    // Symmetric gauge freedom: u = 0 and a random swap-symmetric u give the
    // same linear combination [r12, L1] - [r21, L2].
    RMatrixParts parts = r_from_quad(q, L);
    CHECK((linear_rhs(parts.r12, L) - quad).norm() < 1e-10 * (1.0 + quad.norm()));

    Matrix raw(16, 16);
    Rng local(97);
    for (int i = 0; i < 16; ++i)
      for (int j = 0; j < 16; ++j)
        raw(i, j) = Complex(local.uniform(-1.0, 1.0), local.uniform(-1.0, 1.0));
    const Matrix u = 0.5 * (raw + swap_slots(raw));
    parts = r_from_quad(q, L, u);
    CHECK((linear_rhs(parts.r12, L) - quad).norm() < 1e-10 * (1.0 + quad.norm()));
  }
}

TEST_CASE("asymmetric gauge input is rejected") {
  Rng rng(89);
  const PhasePoint p = random_point(Dimension(1), rng);
  const Couplings c = random_couplings(rng, true);
  const QuadCoefficients q = quad_plain(p, c);
  const Matrix L = lax_a(p, c);
  Matrix u = Matrix::Zero(4, 4);
  u(0, 1) = 1.0;  // swap-asymmetric for n = 1
  CHECK_THROWS_AS(r_from_quad(q, L, u), SymmetryError);
}

TEST_CASE("tensor helpers") {
  Matrix A(2, 2), B(2, 2);
  A << 1.0, 2.0, 3.0, 4.0;
  B << 0.0, 1.0, -1.0, 0.0;
  const Matrix K = kron(A, B);
  CHECK(K.rows() == 4);
  CHECK(K(0, 1) == Complex(1.0, 0.0));   // A(0,0) * B(0,1)
  CHECK(K(1, 0) == Complex(-1.0, 0.0));  // A(0,0) * B(1,0)
  CHECK((swap_slots(K) - kron(B, A)).norm() < 1e-15);
  CHECK((wedge(A, B) - (kron(A, B) - kron(B, A))).norm() < 1e-15);
  CHECK((vee(A, B) - (kron(A, B) + kron(B, A))).norm() < 1e-15);
  CHECK((slot1(A) - kron(A, Matrix::Identity(2, 2))).norm() < 1e-15);
  CHECK((slot2(A) - kron(Matrix::Identity(2, 2), A)).norm() < 1e-15);
}
