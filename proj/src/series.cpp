#include "pyra/series.hpp"

#include <cmath>
#include <stdexcept>

namespace pyra {

namespace {

void require_a(int a) {
  if (a < 2) throw std::invalid_argument("piece length a must be >= 2");
}

constexpr double kPi = 3.14159265358979323846;

// m * ln(a^a / (a-1)^{a-1})
double ln_growth(int a, std::int64_t m) {
  const double da = a;
  return static_cast<double>(m) * (da * std::log(da) - (da - 1.0) * std::log(da - 1.0));
}

}  // namespace

BigInt count_B(int a, int m) {
  require_a(a);
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  return binomial(static_cast<unsigned long>(a) * m - 1, static_cast<unsigned long>(m) - 1);
}

BigInt count_A(int a, int m) {
  require_a(a);
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  BigInt r = binomial(static_cast<unsigned long>(a) * m, static_cast<unsigned long>(m));
  const BigInt d = BigInt(a - 1) * m + 1;
  BigInt q;
  mpz_divexact(q.get_mpz_t(), r.get_mpz_t(), d.get_mpz_t());
  return q;
}

std::vector<BigInt> series_A(int a, int M) {
  require_a(a);
  if (M < 1) throw std::invalid_argument("M must be >= 1");
  // D = 1 + A satisfies D = 1 + t D^a; track the powers D^k incrementally:
  // once D_0..D_n are known, pw[k][n] = [t^n] D^k, and D_{n+1} = pw[a][n].
  std::vector<BigInt> D(static_cast<std::size_t>(M) + 1);
  D[0] = 1;
  std::vector<std::vector<BigInt>> pw(static_cast<std::size_t>(a) + 1);
  for (int n = 0; n < M; ++n) {
    const auto un = static_cast<std::size_t>(n);
    pw[1].push_back(D[un]);
    for (int k = 2; k <= a; ++k) {
      BigInt c = 0;
      for (int i = 0; i <= n; ++i)
        c += D[static_cast<std::size_t>(i)] * pw[static_cast<std::size_t>(k) - 1][un - static_cast<std::size_t>(i)];
      pw[static_cast<std::size_t>(k)].push_back(std::move(c));
    }
    D[un + 1] = pw[static_cast<std::size_t>(a)][un];
  }
  D[0] = 0;  // return A itself: A_0 = 0, A_m = D_m for m >= 1
  return D;
}

std::vector<BigInt> series_B_from_A(int a, const std::vector<BigInt>& A) {
  require_a(a);
  std::vector<BigInt> B(A.size());
  const BigInt w = a - 1;
  for (std::size_t m = 1; m < A.size(); ++m) {
    BigInt c = A[m];
    BigInt conv = 0;
    for (std::size_t k = 1; k < m; ++k) conv += A[k] * B[m - k];
    B[m] = c + w * conv;
  }
  return B;
}

BigInt sum_over_compositions_B(int a, int m, int budget_max) {
  require_a(a);
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  if (m > budget_max)
    throw BudgetExceeded("sum_over_compositions_B: m exceeds configured budget");
  const std::vector<BigInt> A = series_A(a, m);
  std::vector<BigInt> power = A;  // A^{*r}, starting at r = 1
  BigInt total = A[static_cast<std::size_t>(m)];
  BigInt weight = 1;
  for (int r = 2; r <= m; ++r) {
    power = convolve(power, A, static_cast<std::size_t>(m) + 1);
    weight *= a - 1;
    total += weight * power[static_cast<std::size_t>(m)];
  }
  return total;
}

namespace {

// Shared body for the bivariate table; `parallel` toggles the OpenMP loop
// over left widths. Both orders sum k ascending, so results are identical.
std::vector<std::vector<BigInt>> bivariate_impl(int a, int M, bool parallel) {
  require_a(a);
  if (M < 1) throw std::invalid_argument("M must be >= 1");
  const std::vector<BigInt> A = series_A(a, M);
  std::vector<std::vector<BigInt>> B(static_cast<std::size_t>(M) + 1);
  std::vector<std::vector<BigInt>> G(static_cast<std::size_t>(M) + 1);  // (A *_t B)[m][n]
  for (int m = 1; m <= M; ++m) {
    const auto um = static_cast<std::size_t>(m);
    const int width = (a - 1) * (m - 1);  // left widths are < (a-1)m
    B[um].assign(static_cast<std::size_t>(width) + 1, BigInt(0));
    G[um].assign(static_cast<std::size_t>(width) + 1, BigInt(0));
    const auto body = [&](int n) {
      const auto un = static_cast<std::size_t>(n);
      BigInt g = 0;
      for (int k = 1; k < m; ++k) {
        const auto& row = B[um - static_cast<std::size_t>(k)];
        if (un < row.size()) g += A[static_cast<std::size_t>(k)] * row[un];
      }
      G[um][un] = std::move(g);
      BigInt b = n == 0 ? A[um] : BigInt(0);
      for (int d = 1; d <= a - 1 && d <= n; ++d) b += G[um][un - static_cast<std::size_t>(d)];
      B[um][un] = std::move(b);
    };
    if (parallel) {
      // G entries within a row are independent, but B[m][n] needs
      // G[m][n-d]; compute the whole G row first, then the B row.
      std::vector<BigInt> grow(static_cast<std::size_t>(width) + 1);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
      for (int n = 0; n <= width; ++n) {
        const auto un = static_cast<std::size_t>(n);
        BigInt g = 0;
        for (int k = 1; k < m; ++k) {
          const auto& row = B[um - static_cast<std::size_t>(k)];
          if (un < row.size()) g += A[static_cast<std::size_t>(k)] * row[un];
        }
        grow[un] = std::move(g);
      }
      G[um] = std::move(grow);
      for (int n = 0; n <= width; ++n) {
        const auto un = static_cast<std::size_t>(n);
        BigInt b = n == 0 ? A[um] : BigInt(0);
        for (int d = 1; d <= a - 1 && d <= n; ++d) b += G[um][un - static_cast<std::size_t>(d)];
        B[um][un] = std::move(b);
      }
    } else {
      for (int n = 0; n <= width; ++n) body(n);
    }
  }
  B[0].clear();
  return B;
}

}  // namespace

std::vector<std::vector<BigInt>> series_B_bivariate(int a, int M) {
  return bivariate_impl(a, M, false);
}

std::vector<std::vector<BigInt>> series_B_bivariate_parallel(int a, int M) {
  return bivariate_impl(a, M, true);
}

std::vector<BigInt> convolve(const std::vector<BigInt>& x, const std::vector<BigInt>& y,
                             std::size_t M) {
  std::vector<BigInt> out(M);
  for (std::size_t m = 0; m < M; ++m) {
    BigInt c = 0;
    const std::size_t lo = m >= y.size() ? m - y.size() + 1 : 0;
    for (std::size_t k = lo; k < x.size() && k <= m; ++k) c += x[k] * y[m - k];
    out[m] = std::move(c);
  }
  return out;
}

std::vector<BigInt> convolve_parallel(const std::vector<BigInt>& x, const std::vector<BigInt>& y,
                                      std::size_t M) {
  std::vector<BigInt> out(M);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
  for (std::ptrdiff_t sm = 0; sm < static_cast<std::ptrdiff_t>(M); ++sm) {
    const auto m = static_cast<std::size_t>(sm);
    BigInt c = 0;
    const std::size_t lo = m >= y.size() ? m - y.size() + 1 : 0;
    for (std::size_t k = lo; k < x.size() && k <= m; ++k) c += x[k] * y[m - k];
    out[m] = std::move(c);
  }
  return out;
}

namespace {

std::vector<BigInt> series_C_impl(int a, const std::vector<BigInt>& B, bool parallel) {
  require_a(a);
  std::vector<BigInt> sq = parallel ? convolve_parallel(B, B, B.size()) : convolve(B, B, B.size());
  const BigInt half_aa1 = BigInt(a) * (a - 1) / 2;
  for (BigInt& c : sq) c *= half_aa1;
  return sq;
}

}  // namespace

std::vector<BigInt> series_C(int a, const std::vector<BigInt>& B) {
  return series_C_impl(a, B, false);
}

std::vector<BigInt> series_C_parallel(int a, const std::vector<BigInt>& B) {
  return series_C_impl(a, B, true);
}

std::vector<BigInt> fixed_point_residual(int a, const std::vector<BigInt>& A) {
  require_a(a);
  const std::size_t M = A.size();
  std::vector<BigInt> onePlusA = A;
  if (!onePlusA.empty()) onePlusA[0] += 1;
  std::vector<BigInt> p = onePlusA;
  for (int k = 1; k < a; ++k) p = convolve(p, onePlusA, M);
  std::vector<BigInt> res(M);
  for (std::size_t m = 0; m < M; ++m) {
    res[m] = A[m];
    if (m >= 1) res[m] -= p[m - 1];  // t * (1+A)^a
  }
  return res;
}

BigRat average_width_exact(int a, int m) {
  require_a(a);
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  BigInt cm = 0;
  for (int k = 1; k < m; ++k) cm += count_B(a, k) * count_B(a, m - k);
  cm *= BigInt(a) * (a - 1) / 2;
  BigRat r(2 * cm, count_B(a, m));
  r.canonicalize();
  return r + a;
}

double average_width_asymptote(int a, std::int64_t m) {
  require_a(a);
  return std::sqrt(kPi / 2.0 * a * (a - 1) * static_cast<double>(m));
}

SingularityData singularity_data(int a) {
  require_a(a);
  SingularityData d;
  d.t0 = BigRat(pow_int(a - 1, static_cast<unsigned long>(a) - 1),
                pow_int(a, static_cast<unsigned long>(a)));
  d.t0.canonicalize();
  d.A_t0 = BigRat(1, a - 1);
  d.c0 = std::sqrt(2.0 * a * (a - 1)) / ((a - 1.0) * (a - 1.0));
  return d;
}

double stirling_ln_B(int a, std::int64_t m) {
  require_a(a);
  return -0.5 * std::log(2.0 * kPi * a * (a - 1) * static_cast<double>(m)) + ln_growth(a, m);
}

double ln_asymptote_C(int a, std::int64_t m) {
  require_a(a);
  return -std::log(4.0) + ln_growth(a, m);
}

}  // namespace pyra
