#ifndef RSVD_LAX_HPP
#define RSVD_LAX_HPP

#include "rsvd/types.hpp"

namespace rsvd {

/// Coupling constants of the model. Admissible range: mu < 0 < nu and
/// nu * kappa >= 0 (so kappa >= 0 in practice).
struct Couplings {
  double mu;
  double nu;
  double kappa = 0.0;

  void validate() const;  ///< throws CouplingError outside the admissible range
};

/// A point of the reduced phase space: positions lambda in the open Weyl
/// chamber lambda_1 > ... > lambda_n > 0 and conjugate rapidities theta.
struct PhasePoint {
  RVector lambda;
  RVector theta;

  int n() const { return static_cast<int>(lambda.size()); }

  /// Throws ChamberError if the chamber constraint (with minimum gap) fails
  /// or the coordinate vectors disagree in size.
  void validate(double min_gap = 1e-6) const;
};

/// The four gauge-related dressings of the Lax matrix.
enum class LaxVariant { Plain, Tilde, Hat, Check };

/// z_a = -(1 + i nu/lambda_a) prod_{d != a} (1 + 2i mu/(lambda_a - lambda_d))
///                                          (1 + 2i mu/(lambda_a + lambda_d)).
CVector z_values(const PhasePoint& p, const Couplings& c);

/// Column vector F with F_a = e^{theta_a} |z_a|^{1/2} and
/// F_{n+a} = e^{-theta_a} conj(z_a) |z_a|^{-1/2}.
CVector f_vector(const PhasePoint& p, const Couplings& c);

/// The Lax matrix A: Hermitian, positive definite, and in the symmetry group
/// (A C A = C). Blocks:
///   A_{a,b}       = 2i mu F_a conj(F_b) / (2i mu + lambda_a - lambda_b)
///   A_{n+a,n+b}   = 2i mu F_{n+a} conj(F_{n+b}) / (2i mu - lambda_a + lambda_b)
///   A_{a,n+b}     = 2i mu F_a conj(F_{n+b}) / (2i mu + lambda_a + lambda_b)
///                   + i (mu - nu)/(i mu + lambda_a) delta_{a,b}
///   A_{n+b,a}     = conj(A_{a,n+b})
Matrix lax_a(const PhasePoint& p, const Couplings& c);

/// Principal square root / inverse square root of a Hermitian positive
/// definite matrix via eigendecomposition. Throws DomainError when the
/// smallest eigenvalue drops below 1e-12 times the largest.
Matrix hermitian_sqrt(const Matrix& A);
Matrix hermitian_inv_sqrt(const Matrix& A);

/// V = A^{-1/2} F; lies on the sphere {V : CV + V = 0, V*V = N}.
CVector v_vector(const PhasePoint& p, const Couplings& c);

/// Scalar building blocks of the diagonal gauge transformation:
///   alpha(x) = sqrt(x + sqrt(x^2+kappa^2)) / sqrt(2x)
///   beta(x)  = i kappa / (sqrt(2x) sqrt(x + sqrt(x^2+kappa^2)))
/// with alpha^2 + beta^2 = 1, and their x-derivatives.
double gauge_alpha(double x, double kappa);
Complex gauge_beta(double x, double kappa);
double gauge_alpha_deriv(double x, double kappa);
Complex gauge_beta_deriv(double x, double kappa);

/// P(x) = sqrt(1 + kappa^2/x^2) = alpha^2 - beta^2 and Q(x) = i kappa / x
/// = 2 alpha beta; the blocks of H = h^2. They satisfy P^2 + Q^2 = 1.
double gauge_p(double x, double kappa);
Complex gauge_q(double x, double kappa);

/// Block matrix h = [[diag alpha, diag beta], [-diag beta, diag alpha]];
/// Hermitian, in the symmetry group, and h^{-1} just negates the
/// off-diagonal blocks (since alpha^2 + beta^2 = 1).
Matrix h_matrix(const RVector& lambda, double kappa);
Matrix h_inverse(const RVector& lambda, double kappa);

/// H = h^2 = [[diag P, diag Q], [-diag Q, diag P]] and its closed-form inverse.
Matrix big_h(const RVector& lambda, double kappa);
Matrix big_h_inverse(const RVector& lambda, double kappa);

/// H^{-1} dH/dlambda_c = sqrt2 kappa / (lambda_c sqrt(lambda_c^2 + kappa^2))
/// X_{2e_c}^{-,i}; returned as a dense matrix.
Matrix big_h_log_deriv(const RVector& lambda, double kappa, int c);

/// The requested dressing of the Lax matrix:
///   Plain: A      Tilde: h^{-1} A h^{-1}     Hat: A H^{-1}     Check: H^{-1} A.
Matrix lax_variant(const PhasePoint& p, const Couplings& c, LaxVariant v);

/// The commuting Hamiltonian of the model,
///   H = sum_c cosh(2 theta_c) sqrt(1+nu^2/lambda_c^2) sqrt(1+kappa^2/lambda_c^2)
///         prod_{d != c} sqrt(1+4mu^2/(lambda_c-lambda_d)^2)
///                       sqrt(1+4mu^2/(lambda_c+lambda_d)^2)
///     + (nu kappa / 4 mu^2) (prod_c (1 + 4mu^2/lambda_c^2) - 1),
/// which equals (1/2) tr of the Tilde (or Hat, or Check) variant.
double hamiltonian(const PhasePoint& p, const Couplings& c);

}  // namespace rsvd

#endif  // RSVD_LAX_HPP
