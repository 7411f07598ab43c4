#ifndef RSVD_RANDOM_HPP
#define RSVD_RANDOM_HPP

#include <cstdint>
#include <random>

#include "rsvd/lax.hpp"
#include "rsvd/types.hpp"

namespace rsvd {

/// Seeded generator with platform-independent draws (the standard
/// distributions are implementation-defined, so uniforms are mapped from the
/// raw 64-bit stream directly).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller.
  double normal();

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Random chamber point with gaps in [0.2, 2.0], smallest position in
/// [0.3, 1.5] and rapidities in [-2, 2].
PhasePoint random_point(Dimension dim, Rng& rng);

/// Random scattering state: well-separated positions (gaps in [1.0, 2.5],
/// smallest position in [0.8, 1.5]) and moderate rapidities in [-0.4, 0.4].
/// Suitable as a long-integration initial condition; the particle speeds grow
/// like sinh of the rapidity amplified by the interaction factors, so the hot
/// draws from random_point can move too fast for a fixed-step run.
PhasePoint scattering_point(Dimension dim, Rng& rng);

/// Random admissible couplings: mu in [-2, -0.3], nu in [0.3, 2] and,
/// if with_kappa, kappa in [0, 2] (else kappa = 0).
Couplings random_couplings(Rng& rng, bool with_kappa = true);

/// Haar-distributed n x n unitary (QR of a Ginibre matrix with phase fix).
Matrix random_unitary(int n, Rng& rng);

}  // namespace rsvd

#endif  // RSVD_RANDOM_HPP
