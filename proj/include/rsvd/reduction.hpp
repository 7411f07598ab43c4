#ifndef RSVD_REDUCTION_HPP
#define RSVD_REDUCTION_HPP

#include <utility>

#include "rsvd/lax.hpp"
#include "rsvd/random.hpp"
#include "rsvd/types.hpp"

namespace rsvd {

/// Distinguished sphere point E with E_a = 1, E_{n+a} = -1.
CVector e_vector(Dimension dim);

/// Residuals of the sphere membership {V : CV + V = 0, V*V = N}.
std::pair<double, double> sphere_residuals(const CVector& V);

/// Throws SphereError unless both sphere residuals are below tol.
void require_sphere(const CVector& V, double tol = 1e-8);

/// Compact-moment value xi(V) = i mu (V V* - 1) + i (mu - nu) C; lies in the
/// compact subalgebra, and its spectrum only depends on the orbit of V.
Matrix xi(const CVector& V, const Couplings& c);

/// Point of the extended (unreduced) phase space T*G x O.
struct ExtendedPoint {
  Matrix y;    ///< group element
  Matrix Y;    ///< Lie-algebra element
  Matrix rho;  ///< orbit element inside the compact subalgebra
};

/// Residual of membership in the compact subgroup K = {k : k*k = 1, k*Ck = C}.
double compact_residual(const Matrix& k);

/// Random element of K (block pairs of Haar unitaries in the basis that
/// diagonalizes C).
Matrix random_compact(Dimension dim, Rng& rng);

/// Parametrization of the zero level set of the momentum map:
///   y = etaL A^{1/2} etaR^{-1},  Y = etaR Lambda etaR^{-1},
///   rho = etaL xi(V) etaL^{-1},
/// with A the Lax matrix and V the sphere vector of (p, c).
/// Throws MembershipError unless etaL, etaR are in K.
ExtendedPoint upsilon(const PhasePoint& p, const Couplings& c, const Matrix& etaL,
                      const Matrix& etaR);
ExtendedPoint upsilon(const PhasePoint& p, const Couplings& c);  ///< etaL = etaR = 1

/// Momentum map of the two-sided compact symmetry:
///   J = ( (y Y y^{-1})_+ + rho,  -Y_+ )
/// where (.)_+ is the anti-Hermitian part. Both components vanish on the
/// image of upsilon.
std::pair<Matrix, Matrix> momentum_map(const ExtendedPoint& e);

/// The invariant (1/2) tr(y y*) whose reduction gives the Hamiltonian at
/// kappa = 0.
double f1(const ExtendedPoint& e);

}  // namespace rsvd

#endif  // RSVD_REDUCTION_HPP
