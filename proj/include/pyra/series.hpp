#pragma once

#include <cstdint>
#include <vector>

#include "pyra/bigint.hpp"

namespace pyra {

/// Number of pyramids of size m: C(am-1, m-1).
BigInt count_B(int a, int m);

/// Number of right (equivalently left) pyramids of size m, the Fuss-Catalan
/// value (am)! / (m! ((a-1)m+1)!).
BigInt count_A(int a, int m);

// Series are coefficient vectors indexed by the exponent; entry 0 is the
// constant term (0 for A, B, C).

/// A_1..A_M by the a-fold convolution recursion behind A = t(1+A)^a.
std::vector<BigInt> series_A(int a, int M);

/// B = A / (1 - (a-1)A), computed as B_m = A_m + (a-1) (A*B)_m.
std::vector<BigInt> series_B_from_A(int a, const std::vector<BigInt>& A);

/// Direct evaluation of B_m = sum_r (a-1)^{r-1} sum_{m_1+..+m_r=m} prod A_mi,
/// grouping the inner sums as exact convolution powers of A. Throws
/// BudgetExceeded for m > budget_max.
BigInt sum_over_compositions_B(int a, int m, int budget_max = 512);

/// Triangular table T[m][n] = number of pyramids of size m and left width n,
/// m = 1..M, n = 0..(a-1)(m-1); from B(t,v) = A(t)(1 + (v+..+v^{a-1})B(t,v)).
std::vector<std::vector<BigInt>> series_B_bivariate(int a, int M);
std::vector<std::vector<BigInt>> series_B_bivariate_parallel(int a, int M);

/// C_m = sum_n n * B_{m,n} via C = (1/2) a(a-1) B^2.
std::vector<BigInt> series_C(int a, const std::vector<BigInt>& B);
std::vector<BigInt> series_C_parallel(int a, const std::vector<BigInt>& B);

/// Truncated product (x*y)_k for k < M; `parallel` uses OpenMP over output
/// coefficients and is bit-identical to the serial kernel.
std::vector<BigInt> convolve(const std::vector<BigInt>& x, const std::vector<BigInt>& y,
                             std::size_t M);
std::vector<BigInt> convolve_parallel(const std::vector<BigInt>& x, const std::vector<BigInt>& y,
                                      std::size_t M);

/// Residual series of A - t(1+A)^a through the order of A (zero iff A solves
/// the fixed point equation).
std::vector<BigInt> fixed_point_residual(int a, const std::vector<BigInt>& A);

/// Exact average width of size-m pyramids, 2 C_m / B_m + a.
BigRat average_width_exact(int a, int m);

/// Leading-order asymptote sqrt((pi/2) a(a-1) m) of the average width.
double average_width_asymptote(int a, std::int64_t m);

struct SingularityData {
  BigRat t0;    // (a-1)^{a-1} / a^a, singularity of A closest to the origin
  BigRat A_t0;  // 1/(a-1)
  double c0;    // (a-1)^{-2} sqrt(2a(a-1))
};
SingularityData singularity_data(int a);

/// ln of the Stirling-form asymptote of B_m:
/// (2 pi a(a-1) m)^{-1/2} (a^a/(a-1)^{a-1})^m.
double stirling_ln_B(int a, std::int64_t m);

/// ln of the C_m asymptote (1/4) t0^{-m}.
double ln_asymptote_C(int a, std::int64_t m);

}  // namespace pyra
