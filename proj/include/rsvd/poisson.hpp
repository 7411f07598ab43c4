#ifndef RSVD_POISSON_HPP
#define RSVD_POISSON_HPP

#include <functional>
#include <vector>

#include "rsvd/lax.hpp"
#include "rsvd/rmatrix.hpp"
#include "rsvd/types.hpp"

namespace rsvd {

/// The symplectic form is 2 sum_c dtheta_c /\ dlambda_c, so the bracket of
/// coordinate functions is
///   {f, g} = sign * (1/2) sum_c (df/dlambda_c dg/dtheta_c
///                                - df/dtheta_c dg/dlambda_c).
/// The overall orientation `sign` is fixed empirically: at n = 1, kappa = 0
/// exactly one choice reproduces the quadratic bracket of the Lax matrix.
int bracket_sign();

/// Finite-difference configuration for the numerical brackets.
struct BracketConfig {
  double fd_scale = 1e-5;   ///< step = fd_scale * (1 + |coordinate|)
  bool richardson = true;   ///< one extrapolation level (combine steps h and h/2)
  int sign = bracket_sign();
  double min_gap = 1e-6;    ///< chamber margin required of stencil points
};

using ScalarField = std::function<Complex(const PhasePoint&)>;

/// Numerical Poisson bracket {f, g} at p.
/// Throws ChamberError if a stencil point cannot be kept inside the chamber.
Complex bracket(const ScalarField& f, const ScalarField& g, const PhasePoint& p,
                const BracketConfig& cfg = {});

/// Central-difference derivatives of the selected Lax dressing with respect
/// to every coordinate, sharing one stencil of matrix evaluations.
struct LaxDerivatives {
  std::vector<Matrix> dlambda;  ///< d(variant)/dlambda_c
  std::vector<Matrix> dtheta;   ///< d(variant)/dtheta_c
};
LaxDerivatives lax_derivatives(const PhasePoint& p, const Couplings& c, LaxVariant v,
                               const BracketConfig& cfg = {});

/// Tensor of all entry brackets: result_{(i,k),(j,l)} = {L_ij, L_kl} for the
/// selected dressing L, assembled as
///   sign/2 sum_c [ dL/dlambda_c (x) dL/dtheta_c - dL/dtheta_c (x) dL/dlambda_c ].
Matrix tensor_bracket_lax(const PhasePoint& p, const Couplings& c, LaxVariant v,
                          const BracketConfig& cfg = {});

/// One quadratic-bracket verification: compares the numerical entry-bracket
/// tensor of the dressing matched to `family` against the algebraic
/// right-hand side built from the corresponding coefficients.
/// The Plain family is checked at kappa = 0 (its structure does not involve
/// kappa); Tilde pairs with h^{-1} A h^{-1} and Hat with A H^{-1}.
struct TheoremCheck {
  Family family;
  int n;
  double residual;   ///< ||LHS - RHS||_F / (1 + ||RHS||_F)
  double tolerance;
  bool pass;
};
TheoremCheck verify_theorem(const PhasePoint& p, const Couplings& c, Family family,
                            const BracketConfig& cfg = {}, double tolerance = 5e-6);

/// Result of the empirical sign calibration at n = 1, kappa = 0.
struct CalibrationResult {
  int sign;               ///< winning orientation
  double residual_plus;   ///< verification residual with sign = +1
  double residual_minus;  ///< verification residual with sign = -1
};

/// Runs the calibration experiment; throws CalibrationError unless exactly
/// one orientation passes the tolerance while the other fails it decisively.
CalibrationResult calibrate_sign(double tolerance = 1e-5);

}  // namespace rsvd

#endif  // RSVD_POISSON_HPP
