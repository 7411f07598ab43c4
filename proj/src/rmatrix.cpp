#include "rsvd/rmatrix.hpp"

#include <cmath>

namespace rsvd {

namespace {

constexpr double kSqrt2 = 1.4142135623730950488;

Root diff_root(int a, int b) { return Root{RootKind::Difference, a, b}; }
Root sum_root(int a, int b) { return Root{RootKind::Sum, a, b}; }
Root long_root(int c) { return Root{RootKind::Long, c, c}; }

}  // namespace

std::vector<Matrix> s_vectors(const PhasePoint& p, const Couplings& c) {
  p.validate();
  const int n = p.n();
  const int N = 2 * n;
  const Basis basis{Dimension(n)};
  const CVector F = f_vector(p, c);
  const RVector& lam = p.lambda;

  std::vector<Matrix> S;
  S.reserve(static_cast<size_t>(n));
  for (int a = 0; a < n; ++a) {
    Matrix acc = Matrix::Zero(N, N);
    acc += -kSqrt2 * F(n + a).real() / (2.0 * lam(a)) *
           basis.x_minus(long_root(a), Flavor::Imag);
    for (int cc = 0; cc < a; ++cc) {
      acc += F(cc).real() / (lam(cc) - lam(a)) * basis.x_minus(diff_root(cc, a), Flavor::Imag);
      acc += -F(n + cc).real() / (lam(cc) + lam(a)) * basis.x_minus(sum_root(cc, a), Flavor::Imag);
      acc += F(n + cc).imag() / (lam(cc) + lam(a)) * basis.x_minus(sum_root(cc, a), Flavor::Real);
    }
    for (int cc = a + 1; cc < n; ++cc) {
      acc += F(cc).real() / (lam(a) - lam(cc)) * basis.x_minus(diff_root(a, cc), Flavor::Imag);
      acc += -F(n + cc).real() / (lam(a) + lam(cc)) * basis.x_minus(sum_root(a, cc), Flavor::Imag);
      acc += -F(n + cc).imag() / (lam(a) + lam(cc)) * basis.x_minus(sum_root(a, cc), Flavor::Real);
    }
    S.push_back(acc / (kSqrt2 * F(a).real()));
  }
  return S;
}

std::vector<Matrix> t_vectors(const PhasePoint& p, const Couplings& c) {
  p.validate();
  const int n = p.n();
  const int N = 2 * n;
  const Basis basis{Dimension(n)};
  const CVector F = f_vector(p, c);
  const RVector& lam = p.lambda;

  std::vector<Matrix> T;
  T.reserve(static_cast<size_t>(n));
  for (int a = 0; a < n; ++a) {
    Matrix acc = Matrix::Zero(N, N);
    acc += kSqrt2 * F(n + a).real() / (2.0 * lam(a)) * basis.x_plus(long_root(a), Flavor::Imag);
    for (int cc = 0; cc < a; ++cc) {
      acc += F(cc).real() / (lam(cc) - lam(a)) * basis.x_plus(diff_root(cc, a), Flavor::Imag);
      acc += F(n + cc).real() / (lam(cc) + lam(a)) * basis.x_plus(sum_root(cc, a), Flavor::Imag);
      acc += -F(n + cc).imag() / (lam(cc) + lam(a)) * basis.x_plus(sum_root(cc, a), Flavor::Real);
    }
    for (int cc = a + 1; cc < n; ++cc) {
      acc += -F(cc).real() / (lam(a) - lam(cc)) * basis.x_plus(diff_root(a, cc), Flavor::Imag);
      acc += F(n + cc).real() / (lam(a) + lam(cc)) * basis.x_plus(sum_root(a, cc), Flavor::Imag);
      acc += F(n + cc).imag() / (lam(a) + lam(cc)) * basis.x_plus(sum_root(a, cc), Flavor::Real);
    }
    T.push_back(acc / (kSqrt2 * F(a).real()));
  }
  return T;
}

double psi(const PhasePoint& p, const Couplings& c, int a, int b) {
  if (a < 0 || b < 0 || a >= p.n() || b >= p.n() || a == b)
    throw IndexError("psi: indices must be distinct particle labels");
  const double d = p.lambda(a) - p.lambda(b);
  return 1.0 / d + d / (d * d + 4.0 * c.mu * c.mu);
}

QuadCoefficients quad_plain(const PhasePoint& p, const Couplings& c) {
  p.validate();
  c.validate();
  const int n = p.n();
  const int N = 2 * n;
  const int NN = N * N;
  const Basis basis{Dimension(n)};
  const std::vector<Matrix> S = s_vectors(p, c);
  const std::vector<Matrix> T = t_vectors(p, c);

  Matrix roots_wedge = Matrix::Zero(NN, NN);
  Matrix roots_vee = Matrix::Zero(NN, NN);
  for (const Basis::XPair& pr : basis.x_pairs()) {
    const Matrix& xp = basis.elements()[static_cast<size_t>(pr.plus_index)].matrix;
    const Matrix& xm = basis.elements()[static_cast<size_t>(pr.minus_index)].matrix;
    const double alpha = pr.root.value(p.lambda);
    roots_wedge += wedge(xm, xp) / alpha;
    roots_vee += vee(xm, xp) / alpha;
  }

  Matrix ds_vee = Matrix::Zero(NN, NN);
  Matrix ds_wedge = Matrix::Zero(NN, NN);
  Matrix dt_wedge = Matrix::Zero(NN, NN);
  for (int a = 0; a < n; ++a) {
    ds_vee += vee(basis.d_plus(a), S[static_cast<size_t>(a)]);
    ds_wedge += wedge(basis.d_plus(a), S[static_cast<size_t>(a)]);
    dt_wedge += wedge(basis.d_plus(a), T[static_cast<size_t>(a)]);
  }

  Matrix psi_sum = Matrix::Zero(NN, NN);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      psi_sum += psi(p, c, a, b) * wedge(basis.d_plus(a), basis.d_plus(b));

  QuadCoefficients q;
  q.family = Family::Plain;
  q.a = roots_wedge + ds_wedge + dt_wedge + psi_sum;
  q.b = roots_vee - ds_vee - dt_wedge - psi_sum;
  q.c = roots_vee - ds_vee + dt_wedge + psi_sum;
  q.d = roots_wedge + ds_wedge - dt_wedge - psi_sum;
  return q;
}

Matrix gamma12(const RVector& lambda, double kappa) {
  const int n = static_cast<int>(lambda.size());
  const int N = 2 * n;
  const Basis basis{Dimension(n)};
  Matrix G = Matrix::Zero(N * N, N * N);
  for (int c = 0; c < n; ++c) {
    Matrix dh_inv = Matrix::Zero(N, N);
    const double da = gauge_alpha_deriv(lambda(c), kappa);
    const Complex db = gauge_beta_deriv(lambda(c), kappa);
    dh_inv(c, c) = da;
    dh_inv(n + c, n + c) = da;
    dh_inv(c, n + c) = -db;
    dh_inv(n + c, c) = db;
    G += kron(basis.d_minus(c), dh_inv);
  }
  return G / kSqrt2;
}

QuadCoefficients quad_tilde(const PhasePoint& p, const Couplings& c) {
  const QuadCoefficients plain = quad_plain(p, c);
  const Matrix h = h_matrix(p.lambda, c.kappa);
  const Matrix hi = h_inverse(p.lambda, c.kappa);
  const Matrix h1 = slot1(h), h2 = slot2(h);
  const Matrix h1i = slot1(hi), h2i = slot2(hi);
  const Matrix G12 = gamma12(p.lambda, c.kappa);
  const Matrix G21 = swap_slots(G12);

  QuadCoefficients q;
  q.family = Family::Tilde;
  q.a = h1i * h2i * plain.a * h1 * h2 + h1i * G12 * h1 * h2 - h2i * G21 * h1 * h2;
  q.b = h1 * h2i * plain.b * h1i * h2 + h1 * G12 * h1i * h2 - h1 * h2i * G21 * h2;
  q.c = h1i * h2 * plain.c * h1 * h2i - h1i * h2 * G12 * h1 + h2 * G21 * h1 * h2i;
  q.d = h1 * h2 * plain.d * h1i * h2i - h1 * h2 * G12 * h1i + h1 * h2 * G21 * h2i;
  return q;
}

QuadCoefficients quad_hat(const PhasePoint& p, const Couplings& c) {
  const QuadCoefficients plain = quad_plain(p, c);
  const int n = p.n();
  const int N = 2 * n;
  const Basis basis{Dimension(n)};
  const Matrix H = big_h(p.lambda, c.kappa);
  const Matrix Hi = big_h_inverse(p.lambda, c.kappa);
  const Matrix H1 = slot1(H), H2 = slot2(H);
  const Matrix H1i = slot1(Hi), H2i = slot2(Hi);

  Matrix corr_b = Matrix::Zero(N * N, N * N);  // sum_c W_c (x) D_c^-
  Matrix corr_c = Matrix::Zero(N * N, N * N);  // sum_c D_c^- (x) W_c
  Matrix corr_d = Matrix::Zero(N * N, N * N);  // sum_c D_c^- /\ W_c
  for (int cc = 0; cc < n; ++cc) {
    const Matrix W = big_h_log_deriv(p.lambda, c.kappa, cc);
    corr_b += kron(W, basis.d_minus(cc));
    corr_c += kron(basis.d_minus(cc), W);
    corr_d += wedge(basis.d_minus(cc), W);
  }

  QuadCoefficients q;
  q.family = Family::Hat;
  q.a = plain.a;
  q.b = H1 * (plain.b + corr_b / kSqrt2) * H1i;
  q.c = H2 * (plain.c + corr_c / kSqrt2) * H2i;
  q.d = H1 * H2 * (plain.d + corr_d / kSqrt2) * H1i * H2i;
  return q;
}

std::array<double, 4> consistency_residuals(const QuadCoefficients& q) {
  const double scale =
      1.0 + std::max(std::max(q.a.norm(), q.b.norm()), std::max(q.c.norm(), q.d.norm()));
  std::array<double, 4> res;
  res[0] = (swap_slots(q.a) + q.a).norm() / scale;
  res[1] = (swap_slots(q.d) + q.d).norm() / scale;
  res[2] = (swap_slots(q.b) - q.c).norm() / scale;
  res[3] = (q.a + q.b - q.c - q.d).norm() / scale;
  return res;
}

Matrix quadratic_rhs(const QuadCoefficients& q, const Matrix& L) {
  const Matrix L1 = slot1(L);
  const Matrix L2 = slot2(L);
  return q.a * L1 * L2 + L1 * q.b * L2 - L2 * q.c * L1 - L1 * L2 * q.d;
}

RMatrixParts r_from_quad(const QuadCoefficients& q, const Matrix& L, const Matrix& u12) {
  if ((u12 - swap_slots(u12)).norm() > 1e-12 * (1.0 + u12.norm()))
    throw SymmetryError("r_from_quad: the free term u12 must be swap-symmetric");
  RMatrixParts parts;
  parts.p_plus = 0.5 * (q.a + u12);
  parts.p_minus = 0.5 * (q.d - q.b - q.c - u12);
  const Matrix L2 = slot2(L);
  parts.r12 = parts.p_plus * L2 + L2 * parts.p_minus;
  return parts;
}

RMatrixParts r_from_quad(const QuadCoefficients& q, const Matrix& L) {
  return r_from_quad(q, L, Matrix::Zero(q.a.rows(), q.a.cols()));
}

Matrix linear_rhs(const Matrix& r12, const Matrix& L) {
  const Matrix L1 = slot1(L);
  const Matrix L2 = slot2(L);
  const Matrix r21 = swap_slots(r12);
  return r12 * L1 - L1 * r12 - (r21 * L2 - L2 * r21);
}

Matrix lax_pair_b(const PhasePoint& p, const Couplings& c) {
  p.validate();
  c.validate();
  const int n = p.n();
  const int N = 2 * n;
  const Basis basis{Dimension(n)};
  const Matrix Ahat = lax_variant(p, c, LaxVariant::Hat);
  const Matrix Achk = lax_variant(p, c, LaxVariant::Check);
  const Matrix diff = Ahat - Achk;
  const Matrix sum = Ahat + Achk;
  const std::vector<Matrix> S = s_vectors(p, c);
  const std::vector<Matrix> T = t_vectors(p, c);

  Matrix B = Matrix::Zero(N, N);
  for (const Basis::XPair& pr : basis.x_pairs()) {
    const Matrix& xp = basis.elements()[static_cast<size_t>(pr.plus_index)].matrix;
    const Matrix& xm = basis.elements()[static_cast<size_t>(pr.minus_index)].matrix;
    const double alpha = pr.root.value(p.lambda);
    const double tp = (xp * diff).trace().real();
    const double tm = (xm * sum).trace().real();
    B += 0.5 * (tp * xm - tm * xp) / alpha;
  }
  for (int cc = 0; cc < n; ++cc) {
    const double t =
        (S[static_cast<size_t>(cc)] * sum + T[static_cast<size_t>(cc)] * diff).trace().real();
    B += 0.5 * t * basis.d_plus(cc);
  }
  if (c.kappa != 0.0) {
    for (int cc = 0; cc < n; ++cc) {
      const double x = p.lambda(cc);
      const double t =
          (basis.x_minus(long_root(cc), Flavor::Imag) * Achk).trace().real();
      B -= 0.5 * c.kappa * t / (x * std::hypot(x, c.kappa)) * basis.d_minus(cc);
    }
  }
  return B;
}

std::array<double, 3> functional_equation_residuals(double x, double y, double kappa) {
  const double Px = gauge_p(x, kappa), Py = gauge_p(y, kappa);
  const Complex Qx = gauge_q(x, kappa), Qy = gauge_q(y, kappa);
  const double Px2 = Px * Px, Py2 = Py * Py;
  const Complex Qx2 = Qx * Qx, Qy2 = Qy * Qy;

  std::array<double, 3> res;
  res[0] = std::abs(Px2 - Qx2 - (1.0 + 2.0 * kappa * kappa / (x * x)));
  const Complex cross = Px2 * Qy2 - Py2 * Qx2;
  res[1] = std::abs((Px2 * Py2 - (Qx * Qy - 1.0) * (Qx * Qy - 1.0)) / (x - y) +
                    cross / (x + y));
  res[2] = std::abs(cross / (x - y) +
                    (Px2 * Py2 - (Qx * Qy + 1.0) * (Qx * Qy + 1.0)) / (x + y));
  return res;
}

CommutationReport commutation_residuals(const RVector& lambda, double kappa) {
  const int n = static_cast<int>(lambda.size());
  const Basis basis{Dimension(n)};
  const Matrix H = big_h(lambda, kappa);
  const Matrix Hi = big_h_inverse(lambda, kappa);

  std::vector<double> P(static_cast<size_t>(n));
  std::vector<Complex> Q(static_cast<size_t>(n));
  for (int c = 0; c < n; ++c) {
    P[static_cast<size_t>(c)] = gauge_p(lambda(c), kappa);
    Q[static_cast<size_t>(c)] = gauge_q(lambda(c), kappa);
  }

  CommutationReport report;
  report.residuals.fill(0.0);
  auto track = [&](int rule, const Matrix& v, const Matrix& rhs) {
    const double r = (Hi * v * H - rhs).cwiseAbs().maxCoeff();
    report.residuals[static_cast<size_t>(rule)] =
        std::max(report.residuals[static_cast<size_t>(rule)], r);
  };

  for (int c = 0; c < n; ++c) {
    const Complex pp_qq = P[c] * P[c] - Q[c] * Q[c];
    const Complex two_i_pq = 2.0 * kI * P[c] * Q[c];
    const Matrix& dp = basis.d_plus(c);
    const Matrix& dm = basis.d_minus(c);
    const Matrix& xpi = basis.x_plus(long_root(c), Flavor::Imag);
    const Matrix& xmi = basis.x_minus(long_root(c), Flavor::Imag);
    track(0, dp, dp);
    track(1, dm, pp_qq * dm + two_i_pq * xpi);
    track(2, xpi, pp_qq * xpi + two_i_pq * dm);
    track(3, xmi, xmi);
  }

  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const Complex pp = P[a] * P[b];
      const Complex qq = Q[a] * Q[b];
      const Complex mixm = kI * (P[a] * Q[b] - P[b] * Q[a]);
      const Complex mixp = kI * (P[a] * Q[b] + P[b] * Q[a]);
      const Root dr = diff_root(a, b);
      const Root sr = sum_root(a, b);
      track(4, basis.x_plus(dr, Flavor::Real),
            (pp + qq) * basis.x_plus(dr, Flavor::Real) + mixm * basis.x_minus(sr, Flavor::Imag));
      track(5, basis.x_minus(dr, Flavor::Real),
            (pp - qq) * basis.x_minus(dr, Flavor::Real) + mixp * basis.x_plus(sr, Flavor::Imag));
      track(6, basis.x_plus(sr, Flavor::Real),
            (pp - qq) * basis.x_plus(sr, Flavor::Real) - mixp * basis.x_minus(dr, Flavor::Imag));
      track(7, basis.x_minus(sr, Flavor::Real),
            (pp + qq) * basis.x_minus(sr, Flavor::Real) - mixm * basis.x_plus(dr, Flavor::Imag));
      track(8, basis.x_plus(dr, Flavor::Imag),
            (pp + qq) * basis.x_plus(dr, Flavor::Imag) - mixm * basis.x_minus(sr, Flavor::Real));
      track(9, basis.x_minus(dr, Flavor::Imag),
            (pp - qq) * basis.x_minus(dr, Flavor::Imag) - mixp * basis.x_plus(sr, Flavor::Real));
      track(10, basis.x_plus(sr, Flavor::Imag),
            (pp - qq) * basis.x_plus(sr, Flavor::Imag) + mixp * basis.x_minus(dr, Flavor::Real));
      track(11, basis.x_minus(sr, Flavor::Imag),
            (pp + qq) * basis.x_minus(sr, Flavor::Imag) + mixm * basis.x_plus(dr, Flavor::Real));
    }
  }

  report.max_residual = 0.0;
  for (double r : report.residuals) report.max_residual = std::max(report.max_residual, r);
  return report;
}

namespace detail {

Matrix omega12(const RVector& lambda, double kappa) {
  const int n = static_cast<int>(lambda.size());
  const int N = 2 * n;
  const Basis basis{Dimension(n)};
  Matrix O = Matrix::Zero(N * N, N * N);
  for (int c = 0; c < n; ++c)
    O += kron(basis.d_minus(c), big_h_log_deriv(lambda, kappa, c));
  return O / kSqrt2;
}

}  // namespace detail

}  // namespace rsvd
