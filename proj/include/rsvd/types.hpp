#ifndef RSVD_TYPES_HPP
#define RSVD_TYPES_HPP

#include <Eigen/Dense>
#include <complex>

#include "rsvd/errors.hpp"

namespace rsvd {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;    ///< dense complex matrix, usually N x N with N = 2n
using CVector = Eigen::VectorXcd;   ///< dense complex vector
using RVector = Eigen::VectorXd;    ///< dense real vector

inline constexpr Complex kI{0.0, 1.0};  ///< imaginary unit

/// Number of particles n; the matrices of the model act on C^N with N = 2n.
struct Dimension {
  int n;

  explicit Dimension(int n_particles) : n(n_particles) {
    if (n < 1) throw IndexError("Dimension: particle number must be >= 1");
  }

  int N() const { return 2 * n; }
};

}  // namespace rsvd

#endif  // RSVD_TYPES_HPP
