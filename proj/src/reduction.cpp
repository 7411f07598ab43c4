#include "rsvd/reduction.hpp"

#include "rsvd/algebra.hpp"

#include <cmath>
#include <sstream>

namespace rsvd {

CVector e_vector(Dimension dim) {
  const int n = dim.n;
  CVector E(2 * n);
  for (int a = 0; a < n; ++a) {
    E(a) = 1.0;
    E(n + a) = -1.0;
  }
  return E;
}

std::pair<double, double> sphere_residuals(const CVector& V) {
  const int N = static_cast<int>(V.size());
  const Matrix C = build_c(Dimension(N / 2));
  const double lin = (C * V + V).norm();
  const double quad = std::abs((V.adjoint() * V).value() - Complex(N, 0.0));
  return {lin, quad};
}

void require_sphere(const CVector& V, double tol) {
  auto [lin, quad] = sphere_residuals(V);
  if (lin > tol || quad > tol) {
    std::ostringstream msg;
    msg << "vector is not on the constraint sphere (residuals " << lin << ", " << quad << ")";
    throw SphereError(msg.str());
  }
}

Matrix xi(const CVector& V, const Couplings& c) {
  c.validate();
  require_sphere(V);
  const int N = static_cast<int>(V.size());
  const Matrix C = build_c(Dimension(N / 2));
  return kI * c.mu * (V * V.adjoint() - Matrix::Identity(N, N)) + kI * (c.mu - c.nu) * C;
}

double compact_residual(const Matrix& k) {
  const Matrix C = build_c(Dimension(static_cast<int>(k.rows()) / 2));
  const double unitary = (k.adjoint() * k - Matrix::Identity(k.rows(), k.cols())).norm();
  const double comm = (k.adjoint() * C * k - C).norm();
  return std::max(unitary, comm);
}

Matrix random_compact(Dimension dim, Rng& rng) {
  const int n = dim.n;
  const Matrix U1 = random_unitary(n, rng);
  const Matrix U2 = random_unitary(n, rng);
  // Change of basis Q diagonalizing C: columns (e_a +/- e_{n+a})/sqrt2.
  Matrix k(2 * n, 2 * n);
  // k = Q diag(U1, U2) Q* expands to the block form below.
  k.block(0, 0, n, n) = 0.5 * (U1 + U2);
  k.block(0, n, n, n) = 0.5 * (U1 - U2);
  k.block(n, 0, n, n) = 0.5 * (U1 - U2);
  k.block(n, n, n, n) = 0.5 * (U1 + U2);
  return k;
}

ExtendedPoint upsilon(const PhasePoint& p, const Couplings& c, const Matrix& etaL,
                      const Matrix& etaR) {
  const double tol = 1e-10 * (1.0 + etaL.norm() + etaR.norm());
  if (compact_residual(etaL) > tol || compact_residual(etaR) > tol)
    throw MembershipError("upsilon: gauge parameters must lie in the compact subgroup");
  ExtendedPoint e;
  const Matrix sqrtA = hermitian_sqrt(lax_a(p, c));
  e.y = etaL * sqrtA * etaR.adjoint();
  e.Y = etaR * lambda_matrix(p.lambda) * etaR.adjoint();
  e.rho = etaL * xi(v_vector(p, c), c) * etaL.adjoint();
  return e;
}

ExtendedPoint upsilon(const PhasePoint& p, const Couplings& c) {
  const Matrix id = Matrix::Identity(2 * p.n(), 2 * p.n());
  return upsilon(p, c, id, id);
}

std::pair<Matrix, Matrix> momentum_map(const ExtendedPoint& e) {
  const Matrix ad = e.y * e.Y * e.y.inverse();
  const Matrix first = cartan_split(ad).first + e.rho;
  const Matrix second = -cartan_split(e.Y).first;
  return {first, second};
}

double f1(const ExtendedPoint& e) { return 0.5 * (e.y * e.y.adjoint()).trace().real(); }

}  // namespace rsvd
