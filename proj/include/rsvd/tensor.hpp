#ifndef RSVD_TENSOR_HPP
#define RSVD_TENSOR_HPP

#include "rsvd/types.hpp"

namespace rsvd {

/// Tensor-square conventions: an element of End(C^N (x) C^N) is stored as an
/// N^2 x N^2 matrix with compound row index (i,k) -> i*N + k, so that
/// kron(A, B)_{(i,k),(j,l)} = A_ij B_kl.

/// Kronecker product A (x) B.
Matrix kron(const Matrix& A, const Matrix& B);

/// Slot embeddings A_1 = A (x) 1 and A_2 = 1 (x) A.
Matrix slot1(const Matrix& A);
Matrix slot2(const Matrix& A);

/// Swaps the two tensor slots: (swap_slots(M))_{(i,k),(j,l)} = M_{(k,i),(l,j)}.
Matrix swap_slots(const Matrix& M);

/// Wedge and vee combinations A (x) B -/+ B (x) A.
Matrix wedge(const Matrix& A, const Matrix& B);
Matrix vee(const Matrix& A, const Matrix& B);

/// Partial trace over the second slot: (trace2(M))_{i,j} = sum_k M_{(i,k),(j,k)}.
Matrix trace2(const Matrix& M);

/// Residual of M against its slot-swap (anti-)symmetry, ||M -/+ swap(M)||_F.
double swap_symmetry_residual(const Matrix& M);
double swap_antisymmetry_residual(const Matrix& M);

}  // namespace rsvd

#endif  // RSVD_TENSOR_HPP
