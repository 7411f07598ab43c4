#ifndef RSVD_RMATRIX_HPP
#define RSVD_RMATRIX_HPP

#include <array>
#include <vector>

#include "rsvd/algebra.hpp"
#include "rsvd/lax.hpp"
#include "rsvd/tensor.hpp"
#include "rsvd/types.hpp"

namespace rsvd {

/// Dynamical structure vectors S_a (Hermitian, off-diagonal) and T_a
/// (anti-Hermitian, off-diagonal) entering the D^+ terms of the quadratic
/// bracket coefficients. Both are built from the dressed vector F.
std::vector<Matrix> s_vectors(const PhasePoint& p, const Couplings& c);
std::vector<Matrix> t_vectors(const PhasePoint& p, const Couplings& c);

/// Psi_{a,b} = 1/(lambda_a - lambda_b)
///           + (lambda_a - lambda_b)/((lambda_a - lambda_b)^2 + 4 mu^2).
double psi(const PhasePoint& p, const Couplings& c, int a, int b);

/// Which dressing of the bracket structure the coefficients belong to.
enum class Family { Plain, Tilde, Hat };

/// Coefficients (a, b, c, d) of a quadratic bracket
///   {L_1, L_2} = a L_1 L_2 + L_1 b L_2 - L_2 c L_1 - L_1 L_2 d,
/// stored as N^2 x N^2 tensor-square matrices.
struct QuadCoefficients {
  Matrix a;
  Matrix b;
  Matrix c;
  Matrix d;
  Family family;
};

/// Coefficients of the undressed structure. kappa is ignored (the undressed
/// bracket is the kappa = 0 structure; none of its ingredients involve kappa).
QuadCoefficients quad_plain(const PhasePoint& p, const Couplings& c);

/// Gamma_12 = (1/sqrt2) sum_c D_c^- (x) d(h^{-1})/dlambda_c, the inhomogeneous
/// term produced by the position dependence of the diagonal gauge h.
Matrix gamma12(const RVector& lambda, double kappa);

/// Coefficients after conjugating the Lax matrix by h^{-1} on both sides
/// (the Hermitian dressing), including the Gamma corrections.
QuadCoefficients quad_tilde(const PhasePoint& p, const Couplings& c);

/// Coefficients for the one-sided dressing A H^{-1}, including the
/// H^{-1} dH/dlambda_c corrections. The a-coefficient is unchanged.
QuadCoefficients quad_hat(const PhasePoint& p, const Couplings& c);

/// Residuals of the four consistency conditions
///   a_21 = -a_12,  d_21 = -d_12,  b_21 = c_12,  a + b = c + d,
/// scaled by 1/(1 + max coefficient norm).
std::array<double, 4> consistency_residuals(const QuadCoefficients& q);

/// Right-hand side a L1 L2 + L1 b L2 - L2 c L1 - L1 L2 d for the given
/// Lax matrix L (an N x N matrix; L1, L2 are its slot embeddings).
Matrix quadratic_rhs(const QuadCoefficients& q, const Matrix& L);

/// The r-matrices recovered from a consistent coefficient quadruple:
///   p_plus = (a + u)/2,  p_minus = (d - b - c - u)/2,
///   r_12 = p_plus L_2 + L_2 p_minus,
/// with u an arbitrary swap-symmetric tensor (zero by default).
struct RMatrixParts {
  Matrix r12;
  Matrix p_plus;
  Matrix p_minus;
};
RMatrixParts r_from_quad(const QuadCoefficients& q, const Matrix& L, const Matrix& u12);
RMatrixParts r_from_quad(const QuadCoefficients& q, const Matrix& L);

/// Linear-form right-hand side [r_12, L_1] - [r_21, L_2].
Matrix linear_rhs(const Matrix& r12, const Matrix& L);

/// Second matrix of the Lax pair: with Ahat = A H^{-1} and Achk = H^{-1} A,
///   B = (1/2) sum_{alpha,eps} [ tr(X+ (Ahat-Achk)) X- - tr(X- (Ahat+Achk)) X+ ] / alpha(lambda)
///     + (1/2) sum_c tr(S_c (Ahat+Achk) + T_c (Ahat-Achk)) D_c^+
///     - (kappa/2) sum_c tr(X_{2e_c}^{-,i} Achk) / (lambda_c sqrt(lambda_c^2+kappa^2)) D_c^-,
/// so that the flow of the Hamiltonian acts on Ahat as [B, Ahat].
Matrix lax_pair_b(const PhasePoint& p, const Couplings& c);

// ---------------------------------------------------------------------------
// Scalar identities behind the dressed coefficients
// ---------------------------------------------------------------------------

/// Residuals of the three functional equations satisfied by P and Q:
///  1. P(x)^2 - Q(x)^2 = 1 + 2 kappa^2/x^2
///  2. [P(x)^2 P(y)^2 - (Q(x)Q(y) - 1)^2]/(x-y)
///     + [P(x)^2 Q(y)^2 - P(y)^2 Q(x)^2]/(x+y) = 0
///  3. [P(x)^2 Q(y)^2 - P(y)^2 Q(x)^2]/(x-y)
///     + [P(x)^2 P(y)^2 - (Q(x)Q(y) + 1)^2]/(x+y) = 0
std::array<double, 3> functional_equation_residuals(double x, double y, double kappa);

/// Entrywise residuals of the twelve conjugation rules H^{-1} v H = ... for
/// the basis directions v (one residual per rule, maximized over indices).
struct CommutationReport {
  std::array<double, 12> residuals;
  double max_residual;
};
CommutationReport commutation_residuals(const RVector& lambda, double kappa);

namespace detail {
/// Omega_12 = (1/sqrt2) sum_c D_c^- (x) (H^{-1} dH/dlambda_c); internal helper
/// for the dressed-coefficient verification, equal to
/// -(H_2^{-1} Gamma_12 + Gamma_12 H_2^{-1}) H_2 once the gauge laws hold.
Matrix omega12(const RVector& lambda, double kappa);
}  // namespace detail

}  // namespace rsvd

#endif  // RSVD_RMATRIX_HPP
