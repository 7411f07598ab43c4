#include "rsvd/random.hpp"

#include <cmath>

namespace rsvd {

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double phi = 2.0 * M_PI * u2;
  spare_ = r * std::sin(phi);
  have_spare_ = true;
  return r * std::cos(phi);
}

PhasePoint random_point(Dimension dim, Rng& rng) {
  const int n = dim.n;
  PhasePoint p;
  p.lambda.resize(n);
  p.theta.resize(n);
  // Build positions from the bottom up: lambda_n first, then add gaps.
  RVector gaps(n);
  gaps(n - 1) = rng.uniform(0.3, 1.5);  // lambda_n itself
  for (int c = n - 2; c >= 0; --c) gaps(c) = rng.uniform(0.2, 2.0);
  double acc = 0.0;
  for (int c = n - 1; c >= 0; --c) {
    acc += gaps(c);
    p.lambda(c) = acc;
  }
  for (int c = 0; c < n; ++c) p.theta(c) = rng.uniform(-2.0, 2.0);
  return p;
}

PhasePoint scattering_point(Dimension dim, Rng& rng) {
  const int n = dim.n;
  PhasePoint p;
  p.lambda.resize(n);
  p.theta.resize(n);
  RVector gaps(n);
  gaps(n - 1) = rng.uniform(0.8, 1.5);  // lambda_n itself
  for (int c = n - 2; c >= 0; --c) gaps(c) = rng.uniform(1.0, 2.5);
  double acc = 0.0;
  for (int c = n - 1; c >= 0; --c) {
    acc += gaps(c);
    p.lambda(c) = acc;
  }
  for (int c = 0; c < n; ++c) p.theta(c) = rng.uniform(-0.4, 0.4);
  return p;
}

Couplings random_couplings(Rng& rng, bool with_kappa) {
  Couplings c;
  c.mu = rng.uniform(-2.0, -0.3);
  c.nu = rng.uniform(0.3, 2.0);
  c.kappa = with_kappa ? rng.uniform(0.0, 2.0) : 0.0;
  return c;
}

Matrix random_unitary(int n, Rng& rng) {
  Matrix G(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) G(i, j) = Complex(rng.normal(), rng.normal());
  Eigen::HouseholderQR<Matrix> qr(G);
  Matrix Q = qr.householderQ();
  Matrix R = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phases so the distribution is Haar.
  for (int j = 0; j < n; ++j) {
    const Complex d = R(j, j);
    Q.col(j) *= d / std::abs(d);
  }
  return Q;
}

}  // namespace rsvd
