#include "rsvd/algebra.hpp"

#include <cmath>
#include <sstream>

namespace rsvd {

namespace {

constexpr double kSqrt2 = 1.4142135623730950488;

/// e_{j,k} unit matrix of size N.
Matrix unit(int N, int j, int k) {
  Matrix m = Matrix::Zero(N, N);
  m(j, k) = 1.0;
  return m;
}

}  // namespace

Matrix build_c(Dimension dim) {
  const int n = dim.n;
  Matrix C = Matrix::Zero(2 * n, 2 * n);
  C.block(0, n, n, n) = Matrix::Identity(n, n);
  C.block(n, 0, n, n) = Matrix::Identity(n, n);
  return C;
}

Matrix lambda_matrix(const RVector& lambda) {
  const int n = static_cast<int>(lambda.size());
  Matrix L = Matrix::Zero(2 * n, 2 * n);
  for (int c = 0; c < n; ++c) {
    L(c, c) = lambda(c);
    L(n + c, n + c) = -lambda(c);
  }
  return L;
}

double algebra_residual(const Matrix& Y) {
  const Matrix C = build_c(Dimension(static_cast<int>(Y.rows()) / 2));
  return (Y.adjoint() * C + C * Y).norm();
}

double group_residual(const Matrix& y) {
  const Matrix C = build_c(Dimension(static_cast<int>(y.rows()) / 2));
  return (y.adjoint() * C * y - C).norm();
}

bool in_algebra(const Matrix& Y, double tol) {
  return algebra_residual(Y) < tol * (1.0 + Y.norm());
}

void require_algebra(const Matrix& Y, double tol) {
  if (!in_algebra(Y, tol)) {
    std::ostringstream msg;
    msg << "matrix is not in the Lie algebra: residual " << algebra_residual(Y);
    throw MembershipError(msg.str());
  }
}

std::pair<Matrix, Matrix> cartan_split(const Matrix& Y) {
  Matrix plus = 0.5 * (Y - Y.adjoint());
  Matrix minus = 0.5 * (Y + Y.adjoint());
  return {plus, minus};
}

RefinedParts refined_split(const Matrix& Y) {
  auto [plus, minus] = cartan_split(Y);
  RefinedParts parts;
  parts.m = plus.diagonal().asDiagonal();
  parts.m_perp = plus - parts.m;
  parts.a = minus.diagonal().asDiagonal();
  parts.a_perp = minus - parts.a;
  return parts;
}

double bilinear(const Matrix& Y1, const Matrix& Y2) {
  return (Y1 * Y2).trace().real();
}

// ---------------------------------------------------------------------------
// Roots
// ---------------------------------------------------------------------------

double Root::value(const RVector& lambda) const {
  switch (kind) {
    case RootKind::Difference:
      return lambda(a) - lambda(b);
    case RootKind::Sum:
      return lambda(a) + lambda(b);
    case RootKind::Long:
      return 2.0 * lambda(a);
  }
  return 0.0;  // unreachable
}

std::string Root::name() const {
  std::ostringstream s;
  switch (kind) {
    case RootKind::Difference:
      s << "e" << a + 1 << "-e" << b + 1;
      break;
    case RootKind::Sum:
      s << "e" << a + 1 << "+e" << b + 1;
      break;
    case RootKind::Long:
      s << "2e" << a + 1;
      break;
  }
  return s.str();
}

bool Root::operator==(const Root& other) const {
  return kind == other.kind && a == other.a && b == other.b;
}

// ---------------------------------------------------------------------------
// Basis construction
// ---------------------------------------------------------------------------

namespace {

/// X_{e_a - e_b}^{+/-, r} = (1/2)(e_ab -/+ e_ba +/- e_{n+a,n+b} - e_{n+b,n+a})
Matrix x_diff_real(int N, int n, int a, int b, int sign) {
  return 0.5 * (unit(N, a, b) - static_cast<double>(sign) * unit(N, b, a) +
                static_cast<double>(sign) * unit(N, n + a, n + b) - unit(N, n + b, n + a));
}

/// X_{e_a - e_b}^{+/-, i} = (i/2)(e_ab +/- e_ba +/- e_{n+a,n+b} + e_{n+b,n+a})
Matrix x_diff_imag(int N, int n, int a, int b, int sign) {
  return 0.5 * kI *
         (unit(N, a, b) + static_cast<double>(sign) * unit(N, b, a) +
          static_cast<double>(sign) * unit(N, n + a, n + b) + unit(N, n + b, n + a));
}

/// X_{e_a + e_b}^{+/-, r} = -(1/2)(e_{a,n+b} - e_{b,n+a} +/- e_{n+a,b} -/+ e_{n+b,a})
Matrix x_sum_real(int N, int n, int a, int b, int sign) {
  return -0.5 * (unit(N, a, n + b) - unit(N, b, n + a) +
                 static_cast<double>(sign) * unit(N, n + a, b) -
                 static_cast<double>(sign) * unit(N, n + b, a));
}

/// X_{e_a + e_b}^{+/-, i} = -(i/2)(e_{a,n+b} + e_{b,n+a} +/- e_{n+a,b} +/- e_{n+b,a})
Matrix x_sum_imag(int N, int n, int a, int b, int sign) {
  return -0.5 * kI *
         (unit(N, a, n + b) + unit(N, b, n + a) +
          static_cast<double>(sign) * unit(N, n + a, b) +
          static_cast<double>(sign) * unit(N, n + b, a));
}

/// X_{2 e_c}^{+/-, i} = -(i/sqrt2)(e_{c,n+c} +/- e_{n+c,c})
Matrix x_long_imag(int N, int n, int c, int sign) {
  return -(kI / kSqrt2) * (unit(N, c, n + c) + static_cast<double>(sign) * unit(N, n + c, c));
}

std::string flavor_suffix(Flavor f) { return f == Flavor::Real ? "r" : "i"; }

}  // namespace

Basis::Basis(Dimension dim) : dim_(dim) {
  const int n = dim.n;
  const int N = dim.N();
  elements_.reserve(N * N);

  for (int c = 0; c < n; ++c) {
    BasisElement e;
    e.kind = BasisElement::Kind::DPlus;
    e.c = c;
    e.root = Root{RootKind::Long, c, c};
    e.flavor = Flavor::Imag;
    e.matrix = (kI / kSqrt2) * (unit(N, c, c) + unit(N, n + c, n + c));
    e.signature = -1.0;
    e.name = "D+_" + std::to_string(c + 1);
    elements_.push_back(std::move(e));
  }
  for (int c = 0; c < n; ++c) {
    BasisElement e;
    e.kind = BasisElement::Kind::DMinus;
    e.c = c;
    e.root = Root{RootKind::Long, c, c};
    e.flavor = Flavor::Imag;
    e.matrix = (1.0 / kSqrt2) * (unit(N, c, c) - unit(N, n + c, n + c));
    e.signature = +1.0;
    e.name = "D-_" + std::to_string(c + 1);
    elements_.push_back(std::move(e));
  }

  // Positive roots in enumeration order.
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) roots_.push_back(Root{RootKind::Difference, a, b});
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) roots_.push_back(Root{RootKind::Sum, a, b});
  for (int c = 0; c < n; ++c) roots_.push_back(Root{RootKind::Long, c, c});

  auto push_x = [&](const Root& root, Flavor flavor, bool plus, Matrix m) {
    BasisElement e;
    e.kind = plus ? BasisElement::Kind::XPlus : BasisElement::Kind::XMinus;
    e.c = -1;
    e.root = root;
    e.flavor = flavor;
    e.matrix = std::move(m);
    e.signature = plus ? -1.0 : +1.0;
    e.name = std::string("X[") + root.name() + "]" + (plus ? "+" : "-") + flavor_suffix(flavor);
    elements_.push_back(std::move(e));
    return static_cast<int>(elements_.size()) - 1;
  };

  for (const Root& root : roots_) {
    switch (root.kind) {
      case RootKind::Difference: {
        int pr = push_x(root, Flavor::Real, true, x_diff_real(N, n, root.a, root.b, +1));
        int pi = push_x(root, Flavor::Imag, true, x_diff_imag(N, n, root.a, root.b, +1));
        int mr = push_x(root, Flavor::Real, false, x_diff_real(N, n, root.a, root.b, -1));
        int mi = push_x(root, Flavor::Imag, false, x_diff_imag(N, n, root.a, root.b, -1));
        pairs_.push_back(XPair{root, Flavor::Real, pr, mr});
        pairs_.push_back(XPair{root, Flavor::Imag, pi, mi});
        break;
      }
      case RootKind::Sum: {
        int pr = push_x(root, Flavor::Real, true, x_sum_real(N, n, root.a, root.b, +1));
        int pi = push_x(root, Flavor::Imag, true, x_sum_imag(N, n, root.a, root.b, +1));
        int mr = push_x(root, Flavor::Real, false, x_sum_real(N, n, root.a, root.b, -1));
        int mi = push_x(root, Flavor::Imag, false, x_sum_imag(N, n, root.a, root.b, -1));
        pairs_.push_back(XPair{root, Flavor::Real, pr, mr});
        pairs_.push_back(XPair{root, Flavor::Imag, pi, mi});
        break;
      }
      case RootKind::Long: {
        int pi = push_x(root, Flavor::Imag, true, x_long_imag(N, n, root.a, +1));
        int mi = push_x(root, Flavor::Imag, false, x_long_imag(N, n, root.a, -1));
        pairs_.push_back(XPair{root, Flavor::Imag, pi, mi});
        break;
      }
    }
  }
}

const BasisElement& Basis::operator[](int i) const {
  if (i < 0 || i >= size()) throw IndexError("Basis: element index out of range");
  return elements_[static_cast<size_t>(i)];
}

const Matrix& Basis::d_plus(int c) const {
  if (c < 0 || c >= dim_.n) throw IndexError("Basis::d_plus: particle index out of range");
  return elements_[static_cast<size_t>(c)].matrix;
}

const Matrix& Basis::d_minus(int c) const {
  if (c < 0 || c >= dim_.n) throw IndexError("Basis::d_minus: particle index out of range");
  return elements_[static_cast<size_t>(dim_.n + c)].matrix;
}

int Basis::x_index(const Root& alpha, Flavor flavor, bool plus) const {
  if (alpha.kind == RootKind::Long && flavor == Flavor::Real)
    throw IndexError("Basis: long roots carry only the imaginary flavors");
  for (const XPair& p : pairs_) {
    if (p.root == alpha && p.flavor == flavor) return plus ? p.plus_index : p.minus_index;
  }
  throw IndexError("Basis: unknown root " + alpha.name());
}

const Matrix& Basis::x_plus(const Root& alpha, Flavor flavor) const {
  return elements_[static_cast<size_t>(x_index(alpha, flavor, true))].matrix;
}

const Matrix& Basis::x_minus(const Root& alpha, Flavor flavor) const {
  return elements_[static_cast<size_t>(x_index(alpha, flavor, false))].matrix;
}

RVector Basis::expand(const Matrix& Y) const {
  RVector coeffs(size());
  for (int i = 0; i < size(); ++i) {
    coeffs(i) = bilinear(elements_[static_cast<size_t>(i)].matrix, Y) /
                elements_[static_cast<size_t>(i)].signature;
  }
  return coeffs;
}

// ---------------------------------------------------------------------------
// Diagonal adjoint action
// ---------------------------------------------------------------------------

Matrix ad_lambda(const RVector& lambda, const Matrix& Y) {
  const Matrix L = lambda_matrix(lambda);
  return L * Y - Y * L;
}

double regularity_margin(const RVector& lambda) {
  return 1e-8 * std::max(1.0, lambda.cwiseAbs().maxCoeff());
}

Matrix ad_lambda_inverse(const Basis& basis, const RVector& lambda, const Matrix& Z,
                         double margin) {
  if (margin < 0.0) margin = regularity_margin(lambda);
  for (const Root& root : basis.roots()) {
    if (std::abs(root.value(lambda)) < margin) {
      throw RegularityError("ad_lambda_inverse: root " + root.name() +
                            " vanishes at this configuration");
    }
  }
  const double diag_norm = Z.diagonal().norm();
  if (diag_norm > 1e-10 * (1.0 + Z.norm())) {
    throw DomainError("ad_lambda_inverse: argument has diagonal components (not in the image)");
  }

  const int N = basis.dim().N();
  Matrix W = Matrix::Zero(N, N);
  for (const Basis::XPair& p : basis.x_pairs()) {
    const Matrix& xp = basis.elements()[static_cast<size_t>(p.plus_index)].matrix;
    const Matrix& xm = basis.elements()[static_cast<size_t>(p.minus_index)].matrix;
    // <X^+, X^+> = -1 and <X^-, X^-> = +1.
    const double c_plus = -bilinear(xp, Z);
    const double c_minus = bilinear(xm, Z);
    const double alpha = p.root.value(lambda);
    W += (c_minus / alpha) * xp + (c_plus / alpha) * xm;
  }
  return W;
}

}  // namespace rsvd
