#include <doctest.h>

#include <cmath>

#include "rsvd/algebra.hpp"
#include "rsvd/random.hpp"

using namespace rsvd;

namespace {
const double kSqrt2 = std::sqrt(2.0);
}

TEST_CASE("defining form and diagonal embedding") {
  const Matrix C1 = build_c(Dimension(1));
  CHECK(C1.rows() == 2);
  CHECK(C1(0, 0) == Complex(0.0, 0.0));
  CHECK(C1(0, 1) == Complex(1.0, 0.0));
  CHECK(C1(1, 0) == Complex(1.0, 0.0));
  CHECK(C1(1, 1) == Complex(0.0, 0.0));

  RVector lambda(2);
  lambda << 2.0, 1.0;
  const Matrix L = lambda_matrix(lambda);
  CHECK(L(0, 0).real() == doctest::Approx(2.0));
  CHECK(L(1, 1).real() == doctest::Approx(1.0));
  CHECK(L(2, 2).real() == doctest::Approx(-2.0));
  CHECK(L(3, 3).real() == doctest::Approx(-1.0));
  CHECK(algebra_residual(L) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("basis enumeration, size and membership") {
  for (int n : {1, 2, 3, 4}) {
    const Basis basis{Dimension(n)};
    CHECK(basis.size() == 4 * n * n);
    for (const BasisElement& e : basis.elements()) {
      CHECK(algebra_residual(e.matrix) < 1e-14);
    }
    // Leading elements are the D's in the documented order.
    CHECK(basis[0].kind == BasisElement::Kind::DPlus);
    CHECK(basis[n].kind == BasisElement::Kind::DMinus);
  }
}

TEST_CASE("explicit form of the diagonal basis elements") {
  const Basis basis{Dimension(2)};
  const Matrix& dp = basis.d_plus(0);
  const Matrix& dm = basis.d_minus(1);
  CHECK(dp(0, 0) == Complex(0.0, 1.0 / kSqrt2));
  CHECK(dp(2, 2) == Complex(0.0, 1.0 / kSqrt2));
  CHECK(dp(1, 1) == Complex(0.0, 0.0));
  CHECK(dm(1, 1) == Complex(1.0 / kSqrt2, 0.0));
  CHECK(dm(3, 3) == Complex(-1.0 / kSqrt2, 0.0));
  CHECK(dm(0, 0) == Complex(0.0, 0.0));
}

TEST_CASE("orthogonality table with signature") {
  for (int n : {1, 2, 3}) {
    const Basis basis{Dimension(n)};
    for (int i = 0; i < basis.size(); ++i) {
      for (int j = 0; j < basis.size(); ++j) {
        const double expected = i == j ? basis[i].signature : 0.0;
        CHECK(std::abs(bilinear(basis[i].matrix, basis[j].matrix) - expected) < 1e-13);
      }
    }
  }
}

TEST_CASE("signature pattern per element kind") {
  const Basis basis{Dimension(2)};
  for (const BasisElement& e : basis.elements()) {
    switch (e.kind) {
      case BasisElement::Kind::DPlus:
      case BasisElement::Kind::XPlus:
        CHECK(e.signature == -1.0);
        break;
      case BasisElement::Kind::DMinus:
      case BasisElement::Kind::XMinus:
        CHECK(e.signature == +1.0);
        break;
    }
  }
}

TEST_CASE("compact and Hermitian halves of the basis") {
  const Basis basis{Dimension(3)};
  for (const BasisElement& e : basis.elements()) {
    const bool anti = e.kind == BasisElement::Kind::DPlus || e.kind == BasisElement::Kind::XPlus;
    if (anti)
      CHECK((e.matrix + e.matrix.adjoint()).norm() < 1e-14);
    else
      CHECK((e.matrix - e.matrix.adjoint()).norm() < 1e-14);
  }
}

TEST_CASE("cartan split") {
  const Basis basis{Dimension(1)};
  const Matrix Y = basis.d_plus(0) + basis.d_minus(0);
  auto [plus, minus] = cartan_split(Y);
  CHECK((plus - basis.d_plus(0)).norm() < 1e-15);
  CHECK((minus - basis.d_minus(0)).norm() < 1e-15);
}

TEST_CASE("refined split sorts each basis element into one slot") {
  const Basis basis{Dimension(2)};
  for (const BasisElement& e : basis.elements()) {
    const RefinedParts parts = refined_split(e.matrix);
    const double m = parts.m.norm();
    const double mp = parts.m_perp.norm();
    const double a = parts.a.norm();
    const double ap = parts.a_perp.norm();
    switch (e.kind) {
      case BasisElement::Kind::DPlus:
        CHECK(m > 0.9);
        CHECK(mp + a + ap < 1e-14);
        break;
      case BasisElement::Kind::DMinus:
        CHECK(a > 0.9);
        CHECK(m + mp + ap < 1e-14);
        break;
      case BasisElement::Kind::XPlus:
        CHECK(mp > 0.9);
        CHECK(m + a + ap < 1e-14);
        break;
      case BasisElement::Kind::XMinus:
        CHECK(ap > 0.9);
        CHECK(m + mp + a < 1e-14);
        break;
    }
  }
}

TEST_CASE("refined split agrees with the basis expansion") {
  Rng rng(7);
  const Basis basis{Dimension(2)};
  Matrix Y = Matrix::Zero(4, 4);
  for (const BasisElement& e : basis.elements()) Y += rng.uniform(-1.0, 1.0) * e.matrix;
  const RefinedParts parts = refined_split(Y);
  CHECK((parts.m + parts.m_perp + parts.a + parts.a_perp - Y).norm() < 1e-13);
  // Re-assemble the slots from the expansion coefficients.
  const RVector coeff = basis.expand(Y);
  Matrix m = Matrix::Zero(4, 4), mp = m, a = m, ap = m;
  for (int i = 0; i < basis.size(); ++i) {
    const BasisElement& e = basis[i];
    Matrix& target = e.kind == BasisElement::Kind::DPlus    ? m
                     : e.kind == BasisElement::Kind::DMinus ? a
                     : e.kind == BasisElement::Kind::XPlus  ? mp
                                                            : ap;
    target += coeff(i) * e.matrix;
  }
  CHECK((parts.m - m).norm() < 1e-13);
  CHECK((parts.m_perp - mp).norm() < 1e-13);
  CHECK((parts.a - a).norm() < 1e-13);
  CHECK((parts.a_perp - ap).norm() < 1e-13);
}

TEST_CASE("expansion is a left inverse of synthesis") {
  Rng rng(13);
  const Basis basis{Dimension(3)};
  RVector coeff(basis.size());
  for (int i = 0; i < basis.size(); ++i) coeff(i) = rng.uniform(-2.0, 2.0);
  Matrix Y = Matrix::Zero(6, 6);
  for (int i = 0; i < basis.size(); ++i) Y += coeff(i) * basis[i].matrix;
  CHECK((basis.expand(Y) - coeff).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("diagonal adjoint action on the basis") {
  for (int n : {1, 2, 3}) {
    const Basis basis{Dimension(n)};
    Rng rng(17);
    const PhasePoint p = random_point(Dimension(n), rng);
    for (int c = 0; c < n; ++c) {
      CHECK(ad_lambda(p.lambda, basis.d_plus(c)).cwiseAbs().maxCoeff() < 1e-13);
      CHECK(ad_lambda(p.lambda, basis.d_minus(c)).cwiseAbs().maxCoeff() < 1e-13);
    }
    for (const Basis::XPair& pr : basis.x_pairs()) {
      const Matrix& xp = basis.elements()[pr.plus_index].matrix;
      const Matrix& xm = basis.elements()[pr.minus_index].matrix;
      const double alpha = pr.root.value(p.lambda);
      CHECK((ad_lambda(p.lambda, xp) - alpha * xm).cwiseAbs().maxCoeff() < 1e-13);
      CHECK((ad_lambda(p.lambda, xm) - alpha * xp).cwiseAbs().maxCoeff() < 1e-13);
    }
  }
}

TEST_CASE("root functionals") {
  RVector lambda(3);
  lambda << 3.0, 2.0, 0.5;
  CHECK(Root{RootKind::Difference, 0, 2}.value(lambda) == doctest::Approx(2.5));
  CHECK(Root{RootKind::Sum, 1, 2}.value(lambda) == doctest::Approx(2.5));
  CHECK(Root{RootKind::Long, 1, 1}.value(lambda) == doctest::Approx(4.0));
  const Basis basis{Dimension(3)};
  CHECK(basis.roots().size() == 3 + 3 + 3);
}

TEST_CASE("restricted inverse of the adjoint action") {
  const Basis basis{Dimension(2)};
  Rng rng(23);
  const PhasePoint p = random_point(Dimension(2), rng);
  Matrix Z = Matrix::Zero(4, 4);
  for (const Basis::XPair& pr : basis.x_pairs()) {
    Z += rng.uniform(-1.0, 1.0) * basis.elements()[pr.plus_index].matrix;
    Z += rng.uniform(-1.0, 1.0) * basis.elements()[pr.minus_index].matrix;
  }
  const Matrix W = ad_lambda_inverse(basis, p.lambda, Z);
  CHECK((ad_lambda(p.lambda, W) - Z).norm() < 1e-12 * (1.0 + Z.norm()));
  CHECK((ad_lambda_inverse(basis, p.lambda, ad_lambda(p.lambda, W)) - W).norm() <
        1e-12 * (1.0 + W.norm()));
}

TEST_CASE("restricted inverse rejects bad input") {
  const Basis basis{Dimension(2)};
  RVector degenerate(2);
  degenerate << 1.0, 1.0;  // difference root vanishes
  const Matrix X = basis.x_plus(Root{RootKind::Sum, 0, 1}, Flavor::Real);
  CHECK_THROWS_AS(ad_lambda_inverse(basis, degenerate, X), RegularityError);

  RVector fine(2);
  fine << 2.0, 1.0;
  CHECK_THROWS_AS(ad_lambda_inverse(basis, fine, basis.d_plus(0)), DomainError);
}

TEST_CASE("long roots carry no real flavor") {
  const Basis basis{Dimension(2)};
  CHECK_THROWS_AS(basis.x_plus(Root{RootKind::Long, 0, 0}, Flavor::Real), IndexError);
}

TEST_CASE("membership guard") {
  Matrix bad = Matrix::Identity(4, 4);
  CHECK_FALSE(in_algebra(bad));
  CHECK_THROWS_AS(require_algebra(bad), MembershipError);
}
