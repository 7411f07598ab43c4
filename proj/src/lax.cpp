#include "rsvd/lax.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <sstream>

namespace rsvd {

namespace {
constexpr double kSqrt2 = 1.4142135623730950488;
}

void Couplings::validate() const {
  if (!(mu < 0.0)) throw CouplingError("Couplings: mu must be negative");
  if (!(nu > 0.0)) throw CouplingError("Couplings: nu must be positive");
  if (nu * kappa < 0.0) throw CouplingError("Couplings: nu * kappa must be non-negative");
}

void PhasePoint::validate(double min_gap) const {
  const int size_n = n();
  if (size_n < 1) throw ChamberError("PhasePoint: empty coordinate vectors");
  if (theta.size() != size_n)
    throw ChamberError("PhasePoint: lambda and theta sizes disagree");
  for (int c = 0; c < size_n; ++c) {
    const double next = (c + 1 < size_n) ? lambda(c + 1) : 0.0;
    if (!(lambda(c) - next >= min_gap)) {
      std::ostringstream msg;
      msg << "PhasePoint: chamber violation at position " << c + 1 << " (gap "
          << lambda(c) - next << " < " << min_gap << ")";
      throw ChamberError(msg.str());
    }
  }
}

CVector z_values(const PhasePoint& p, const Couplings& c) {
  const int n = p.n();
  CVector z(n);
  for (int a = 0; a < n; ++a) {
    Complex v = -(1.0 + kI * c.nu / p.lambda(a));
    for (int d = 0; d < n; ++d) {
      if (d == a) continue;
      v *= 1.0 + 2.0 * kI * c.mu / (p.lambda(a) - p.lambda(d));
      v *= 1.0 + 2.0 * kI * c.mu / (p.lambda(a) + p.lambda(d));
    }
    z(a) = v;
  }
  return z;
}

CVector f_vector(const PhasePoint& p, const Couplings& c) {
  const int n = p.n();
  const CVector z = z_values(p, c);
  CVector F(2 * n);
  for (int a = 0; a < n; ++a) {
    const double r = std::sqrt(std::abs(z(a)));
    F(a) = std::exp(p.theta(a)) * r;
    F(n + a) = std::exp(-p.theta(a)) * std::conj(z(a)) / r;
  }
  return F;
}

Matrix lax_a(const PhasePoint& p, const Couplings& c) {
  p.validate();
  c.validate();
  if (c.mu == 0.0) throw CouplingError("lax_a: mu must be nonzero");
  const int n = p.n();
  const CVector F = f_vector(p, c);
  const Complex two_i_mu = 2.0 * kI * c.mu;
  Matrix A(2 * n, 2 * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      A(a, b) = two_i_mu * F(a) * std::conj(F(b)) / (two_i_mu + p.lambda(a) - p.lambda(b));
      A(n + a, n + b) =
          two_i_mu * F(n + a) * std::conj(F(n + b)) / (two_i_mu - p.lambda(a) + p.lambda(b));
      Complex off = two_i_mu * F(a) * std::conj(F(n + b)) / (two_i_mu + p.lambda(a) + p.lambda(b));
      if (a == b) off += kI * (c.mu - c.nu) / (kI * c.mu + p.lambda(a));
      A(a, n + b) = off;
      A(n + b, a) = std::conj(off);
    }
  }
  return A;
}

namespace {

/// Shared worker: spectral decomposition with the positivity floor, returning
/// U f(diag) U* for f = sqrt or 1/sqrt.
Matrix hermitian_power(const Matrix& A, bool inverse) {
  Eigen::SelfAdjointEigenSolver<Matrix> eig(0.5 * (A + A.adjoint()));
  if (eig.info() != Eigen::Success)
    throw DomainError("hermitian_sqrt: eigendecomposition failed");
  const RVector ev = eig.eigenvalues();
  const double floor = 1e-12 * ev.maxCoeff();
  if (ev.minCoeff() < floor)
    throw DomainError("hermitian_sqrt: matrix is not safely positive definite");
  RVector f(ev.size());
  for (int i = 0; i < ev.size(); ++i)
    f(i) = inverse ? 1.0 / std::sqrt(ev(i)) : std::sqrt(ev(i));
  return eig.eigenvectors() * f.asDiagonal() * eig.eigenvectors().adjoint();
}

}  // namespace

Matrix hermitian_sqrt(const Matrix& A) { return hermitian_power(A, false); }

Matrix hermitian_inv_sqrt(const Matrix& A) { return hermitian_power(A, true); }

namespace {

using LongComplex = std::complex<long double>;
using LongMatrix = Eigen::Matrix<LongComplex, Eigen::Dynamic, Eigen::Dynamic>;
using LongVector = Eigen::Matrix<LongComplex, Eigen::Dynamic, 1>;

}  // namespace

CVector v_vector(const PhasePoint& p, const Couplings& c) {
  // The sphere residuals of V are roundoff amplified by the condition number
  // of A (which grows with the rapidities), so the whole chain z -> F -> A ->
  // A^{-1/2} F runs in extended precision before rounding the result once.
  p.validate();
  c.validate();
  if (c.mu == 0.0) throw CouplingError("v_vector: mu must be nonzero");
  const int n = p.n();
  const LongComplex li(0.0L, 1.0L);
  LongVector z(n);
  for (int a = 0; a < n; ++a) {
    const long double la = p.lambda(a);
    LongComplex v = -(1.0L + li * static_cast<long double>(c.nu) / la);
    for (int d = 0; d < n; ++d) {
      if (d == a) continue;
      const long double ld = p.lambda(d);
      v *= 1.0L + 2.0L * li * static_cast<long double>(c.mu) / (la - ld);
      v *= 1.0L + 2.0L * li * static_cast<long double>(c.mu) / (la + ld);
    }
    z(a) = v;
  }
  LongVector F(2 * n);
  for (int a = 0; a < n; ++a) {
    const long double r = std::sqrt(std::abs(z(a)));
    F(a) = std::exp(static_cast<long double>(p.theta(a))) * r;
    F(n + a) = std::exp(-static_cast<long double>(p.theta(a))) * std::conj(z(a)) / r;
  }
  const LongComplex two_i_mu = 2.0L * li * static_cast<long double>(c.mu);
  LongMatrix A(2 * n, 2 * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const long double la = p.lambda(a), lb = p.lambda(b);
      A(a, b) = two_i_mu * F(a) * std::conj(F(b)) / (two_i_mu + la - lb);
      A(n + a, n + b) = two_i_mu * F(n + a) * std::conj(F(n + b)) / (two_i_mu - la + lb);
      LongComplex off = two_i_mu * F(a) * std::conj(F(n + b)) / (two_i_mu + la + lb);
      if (a == b)
        off += li * static_cast<long double>(c.mu - c.nu) /
               (li * static_cast<long double>(c.mu) + la);
      A(a, n + b) = off;
      A(n + b, a) = std::conj(off);
    }
  }
  Eigen::SelfAdjointEigenSolver<LongMatrix> eig(LongMatrix(0.5L * (A + A.adjoint())));
  if (eig.info() != Eigen::Success)
    throw DomainError("v_vector: eigendecomposition failed");
  const auto& ev = eig.eigenvalues();
  if (ev.minCoeff() < 1e-14L * ev.maxCoeff())
    throw DomainError("v_vector: Lax matrix is not safely positive definite");
  LongVector coeff = eig.eigenvectors().adjoint() * F;
  for (int i = 0; i < coeff.size(); ++i) coeff(i) /= std::sqrt(ev(i));
  const LongVector V = eig.eigenvectors() * coeff;
  CVector out(2 * n);
  for (int i = 0; i < out.size(); ++i)
    out(i) = Complex(static_cast<double>(V(i).real()), static_cast<double>(V(i).imag()));
  return out;
}

double gauge_alpha(double x, double kappa) {
  const double s = std::hypot(x, kappa);
  return std::sqrt(x + s) / std::sqrt(2.0 * x);
}

Complex gauge_beta(double x, double kappa) {
  const double s = std::hypot(x, kappa);
  return kI * kappa / (std::sqrt(2.0 * x) * std::sqrt(x + s));
}

double gauge_alpha_deriv(double x, double kappa) {
  if (kappa == 0.0) return 0.0;
  const double s = std::hypot(x, kappa);
  return -kappa * kappa / (4.0 * x * x * s * gauge_alpha(x, kappa));
}

Complex gauge_beta_deriv(double x, double kappa) {
  if (kappa == 0.0) return Complex(0.0, 0.0);
  const double s = std::hypot(x, kappa);
  const double u = 2.0 * x * (x + s);
  const double du = 4.0 * x + 2.0 * s + 2.0 * x * x / s;
  return -0.5 * kI * kappa * du / (u * std::sqrt(u));
}

double gauge_p(double x, double kappa) { return std::hypot(x, kappa) / x; }

Complex gauge_q(double x, double kappa) { return kI * kappa / x; }

Matrix h_matrix(const RVector& lambda, double kappa) {
  const int n = static_cast<int>(lambda.size());
  Matrix h = Matrix::Zero(2 * n, 2 * n);
  for (int c = 0; c < n; ++c) {
    const double a = gauge_alpha(lambda(c), kappa);
    const Complex b = gauge_beta(lambda(c), kappa);
    h(c, c) = a;
    h(n + c, n + c) = a;
    h(c, n + c) = b;
    h(n + c, c) = -b;
  }
  return h;
}

Matrix h_inverse(const RVector& lambda, double kappa) {
  const int n = static_cast<int>(lambda.size());
  Matrix hi = h_matrix(lambda, kappa);
  for (int c = 0; c < n; ++c) {
    hi(c, n + c) = -hi(c, n + c);
    hi(n + c, c) = -hi(n + c, c);
  }
  return hi;
}

Matrix big_h(const RVector& lambda, double kappa) {
  const int n = static_cast<int>(lambda.size());
  Matrix H = Matrix::Zero(2 * n, 2 * n);
  for (int c = 0; c < n; ++c) {
    const double P = gauge_p(lambda(c), kappa);
    const Complex Q = gauge_q(lambda(c), kappa);
    H(c, c) = P;
    H(n + c, n + c) = P;
    H(c, n + c) = Q;
    H(n + c, c) = -Q;
  }
  return H;
}

Matrix big_h_inverse(const RVector& lambda, double kappa) {
  // P^2 + Q^2 = 1 reduces the blockwise 2x2 inverse to negating the
  // off-diagonal blocks, exactly as for h itself.
  const int n = static_cast<int>(lambda.size());
  Matrix Hi = big_h(lambda, kappa);
  for (int c = 0; c < n; ++c) {
    Hi(c, n + c) = -Hi(c, n + c);
    Hi(n + c, c) = -Hi(n + c, c);
  }
  return Hi;
}

Matrix big_h_log_deriv(const RVector& lambda, double kappa, int c) {
  const int n = static_cast<int>(lambda.size());
  if (c < 0 || c >= n) throw IndexError("big_h_log_deriv: particle index out of range");
  Matrix W = Matrix::Zero(2 * n, 2 * n);
  const double x = lambda(c);
  const Complex w = -kI * kappa / (x * std::hypot(x, kappa));
  // sqrt2 kappa/(x s) * X_{2e_c}^{-,i} with X^{-,i} = -(i/sqrt2)(e_{c,n+c} - e_{n+c,c}).
  W(c, n + c) = w;
  W(n + c, c) = -w;
  return W;
}

Matrix lax_variant(const PhasePoint& p, const Couplings& c, LaxVariant v) {
  const Matrix A = lax_a(p, c);
  switch (v) {
    case LaxVariant::Plain:
      return A;
    case LaxVariant::Tilde: {
      const Matrix hi = h_inverse(p.lambda, c.kappa);
      return hi * A * hi;
    }
    case LaxVariant::Hat:
      return A * big_h_inverse(p.lambda, c.kappa);
    case LaxVariant::Check:
      return big_h_inverse(p.lambda, c.kappa) * A;
  }
  throw DomainError("lax_variant: unknown variant");
}

double hamiltonian(const PhasePoint& p, const Couplings& c) {
  p.validate();
  c.validate();
  if (c.mu == 0.0) throw CouplingError("hamiltonian: mu must be nonzero");
  const int n = p.n();
  double H = 0.0;
  for (int cc = 0; cc < n; ++cc) {
    double V = (1.0 + c.nu * c.nu / (p.lambda(cc) * p.lambda(cc))) *
               (1.0 + c.kappa * c.kappa / (p.lambda(cc) * p.lambda(cc)));
    for (int d = 0; d < n; ++d) {
      if (d == cc) continue;
      const double dm = p.lambda(cc) - p.lambda(d);
      const double dp = p.lambda(cc) + p.lambda(d);
      V *= (1.0 + 4.0 * c.mu * c.mu / (dm * dm)) * (1.0 + 4.0 * c.mu * c.mu / (dp * dp));
    }
    H += std::cosh(2.0 * p.theta(cc)) * std::sqrt(V);
  }
  double prod = 1.0;
  for (int cc = 0; cc < n; ++cc)
    prod *= 1.0 + 4.0 * c.mu * c.mu / (p.lambda(cc) * p.lambda(cc));
  H += c.nu * c.kappa / (4.0 * c.mu * c.mu) * (prod - 1.0);
  return H;
}

}  // namespace rsvd
