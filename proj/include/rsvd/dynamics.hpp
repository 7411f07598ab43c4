#ifndef RSVD_DYNAMICS_HPP
#define RSVD_DYNAMICS_HPP

#include <utility>
#include <vector>

#include "rsvd/lax.hpp"
#include "rsvd/poisson.hpp"
#include "rsvd/types.hpp"

namespace rsvd {

/// Analytic gradients of the Hamiltonian; cross-checked against finite
/// differences in the test suite.
struct HamiltonianGradients {
  RVector dlambda;  ///< dH/dlambda_c
  RVector dtheta;   ///< dH/dtheta_c
};
HamiltonianGradients hamiltonian_gradients(const PhasePoint& p, const Couplings& c);

/// Equations of motion induced by the calibrated bracket:
///   dlambda_c/dt = sign/2 dH/dtheta_c,   dtheta_c/dt = -sign/2 dH/dlambda_c.
struct FlowRhs {
  RVector dlambda;
  RVector dtheta;
};
FlowRhs flow_rhs(const PhasePoint& p, const Couplings& c, int sign = bracket_sign());

/// Fixed-step RK4 trajectory of the Hamiltonian flow. Every stage point must
/// stay inside the chamber (ChamberError otherwise).
struct Trajectory {
  std::vector<double> times;
  std::vector<PhasePoint> states;
  Couplings couplings{-1.0, 1.0, 0.0};
  double dt = 0.0;
};
Trajectory integrate(const PhasePoint& p0, const Couplings& c, double t_end, double dt,
                     int sign = bracket_sign());

/// One RK4 step (exposed for the order-verification test).
PhasePoint rk4_step(const PhasePoint& p, const Couplings& c, double dt,
                    int sign = bracket_sign());

/// Maximum relative deviation of the sorted eigenvalues of the selected
/// dressing along the trajectory from their values at the initial time.
/// Eigenvalues are sorted by real part; imaginary parts above
/// 1e-10 * (1 + |eigenvalue|) raise DomainError (the spectra are real).
double spectral_drift(const Trajectory& traj, LaxVariant v);

/// Sorted (by real part) eigenvalues of the selected dressing at a state.
RVector lax_spectrum(const PhasePoint& p, const Couplings& c, LaxVariant v);

/// Maximum relative deviation of the energy along the trajectory.
double energy_drift(const Trajectory& traj);

/// Verification of the Lax form of the flow: the time derivative of A H^{-1}
/// along the Hamiltonian flow (chain rule: coordinate finite differences
/// contracted with the analytic flow velocities) is compared with the
/// commutator [B, A H^{-1}].
struct LaxEquationCheck {
  double residual;        ///< ||dA/dt - [B, A]||_F / (1 + ||[B, A]||_F)
  double flow_step;       ///< relative width of the coordinate stencil
};
LaxEquationCheck verify_lax_equation(const PhasePoint& p, const Couplings& c,
                                     double flow_step = 1e-4, int sign = bracket_sign());

}  // namespace rsvd

#endif  // RSVD_DYNAMICS_HPP
