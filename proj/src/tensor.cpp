#include "rsvd/tensor.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>

namespace rsvd {

Matrix kron(const Matrix& A, const Matrix& B) {
  return Eigen::kroneckerProduct(A, B).eval();
}

Matrix slot1(const Matrix& A) {
  return kron(A, Matrix::Identity(A.rows(), A.cols()));
}

Matrix slot2(const Matrix& A) {
  return kron(Matrix::Identity(A.rows(), A.cols()), A);
}

Matrix swap_slots(const Matrix& M) {
  const int NN = static_cast<int>(M.rows());
  const int N = static_cast<int>(std::lround(std::sqrt(static_cast<double>(NN))));
  if (N * N != NN || M.cols() != NN)
    throw DomainError("swap_slots: matrix is not a square tensor-square");
  Matrix S(NN, NN);
  for (int i = 0; i < N; ++i)
    for (int k = 0; k < N; ++k)
      for (int j = 0; j < N; ++j)
        for (int l = 0; l < N; ++l) S(i * N + k, j * N + l) = M(k * N + i, l * N + j);
  return S;
}

Matrix wedge(const Matrix& A, const Matrix& B) { return kron(A, B) - kron(B, A); }

Matrix vee(const Matrix& A, const Matrix& B) { return kron(A, B) + kron(B, A); }

Matrix trace2(const Matrix& M) {
  const int NN = static_cast<int>(M.rows());
  const int N = static_cast<int>(std::lround(std::sqrt(static_cast<double>(NN))));
  if (N * N != NN) throw DomainError("trace2: matrix is not a square tensor-square");
  Matrix T = Matrix::Zero(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      for (int k = 0; k < N; ++k) T(i, j) += M(i * N + k, j * N + k);
  return T;
}

double swap_symmetry_residual(const Matrix& M) { return (M - swap_slots(M)).norm(); }

double swap_antisymmetry_residual(const Matrix& M) { return (M + swap_slots(M)).norm(); }

}  // namespace rsvd
