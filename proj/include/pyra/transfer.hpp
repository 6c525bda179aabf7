#pragma once

#include <vector>

#include "pyra/bigint.hpp"

namespace pyra {

using IntMatrix = std::vector<std::vector<BigInt>>;
using RatVector = std::vector<BigRat>;

// The 2b x 2b link matrices of the admissible-composition chain (b = a-1),
// rows/columns ordered 0P, 0N, 1P, 1N, ..., (a-2)P, (a-2)N:
//   E[iR][jS] = 1 iff R_ii S_jj may be adjacent   (i == j, R != S)
//   T[iR][jS] = 1 iff R_ii T_ij S_jj is allowed   (i > j)
//   U[iR][jS] = 1 iff R_ii U_ij S_jj is allowed   (i < j, R = P, S = N)
struct TransferMatrices {
  int a = 3;
  int b = 2;
  IntMatrix E, T, U;
  IntMatrix A;  // E + T + U
};

/// Builds the matrices; requires a >= 3 (throws std::invalid_argument).
TransferMatrices build_matrices(int a);

/// a_r = e_{0P}^T A^{r-1} ones: the number of admissible-composition
/// skeletons with r P/N-terms and the walk boundary conditions. Equals
/// (a-1)^{r-1}.
BigInt compute_a_r(int a, int r);

/// Monic characteristic polynomial of an n x n integer matrix, exact, by
/// fraction-free determinants at n+1 integer points and Lagrange
/// interpolation. coeff[k] multiplies lambda^k.
std::vector<BigInt> char_poly(const IntMatrix& M);

/// Coefficients of lambda^{b-1} (lambda - b) (lambda + 1)^b.
std::vector<BigInt> expected_char_poly(int b);

/// char_poly(A) == expected_char_poly(b), exactly.
bool verify_char_poly(int a);

// Exact spectral witnesses: the eigenvector e with A e = b e (first
// coordinate b), the kernel chain f_1..f_{b-1} with A f_1 = 0 and
// A f_i = f_1 + ... + f_{i-1}, and the all-ones decomposition
// ones = (e - sum_i zeta^{b-1-i} f_i)/b with zeta = 1 + 1/b.
RatVector witness_e(int a);
RatVector witness_f(int a, int i);

/// All witness identities above plus A^{b-1} f_i = 0, in exact rationals.
bool verify_spectral_witness(int a);

/// a = 3 recursion anchors: iterating v_r = A^{r-1} ones = (a_r, a'_r, b_r,
/// b'_r) satisfies b_r = b'_r, b_r = a_r + a'_r (r >= 2), b_r = 3*2^{r-2}
/// (r >= 2) and a_{r+1} + a_r = 3*2^{r-1}.
bool a3_recursion_check(int r_max = 12);

IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y);
std::vector<BigInt> mat_vec(const IntMatrix& m, const std::vector<BigInt>& v);

}  // namespace pyra
