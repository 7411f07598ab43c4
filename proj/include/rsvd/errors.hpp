#ifndef RSVD_ERRORS_HPP
#define RSVD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rsvd {

/// Base class for all failures raised by the workbench.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A root functional alpha(lambda) is closer to zero than the configured margin,
/// so restricted inverses along the diagonal action are ill-defined.
struct RegularityError : Error {
  using Error::Error;
};

/// An argument lies outside the mathematical domain of the operation
/// (e.g. a matrix that must be positive definite is numerically singular,
/// or an element that must have no diagonal component has one).
struct DomainError : Error {
  using Error::Error;
};

/// Coupling constants violate the admissible range mu < 0 < nu, nu*kappa >= 0.
struct CouplingError : Error {
  using Error::Error;
};

/// Position coordinates left the open Weyl chamber
/// lambda_1 > lambda_2 > ... > lambda_n > 0 (within the configured margin),
/// either on input or while displacing/integrating.
struct ChamberError : Error {
  using Error::Error;
};

/// A vector claimed to lie on the constraint sphere {V : CV + V = 0, V*V = N}
/// fails the membership residuals.
struct SphereError : Error {
  using Error::Error;
};

/// A matrix claimed to lie in the symmetry group (or its Lie algebra, or the
/// maximal compact subgroup) fails the membership residuals.
struct MembershipError : Error {
  using Error::Error;
};

/// A matrix fails a required (anti-)Hermiticity or swap-symmetry property.
struct SymmetryError : Error {
  using Error::Error;
};

/// An index is outside its admissible range (particle, root, or basis index).
struct IndexError : Error {
  using Error::Error;
};

/// The empirical sign calibration of the Poisson bracket failed to single out
/// a winner (both orientations leave a large residual).
struct CalibrationError : Error {
  using Error::Error;
};

/// Invalid run configuration (unknown key, unparsable value, bad suite name).
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace rsvd

#endif  // RSVD_ERRORS_HPP
