#include "pyra/transfer.hpp"

#include <stdexcept>

namespace pyra {

namespace {

IntMatrix zero_matrix(int n) {
  return IntMatrix(static_cast<std::size_t>(n), std::vector<BigInt>(static_cast<std::size_t>(n)));
}

void require_a3(int a) {
  if (a < 3) throw std::invalid_argument("transfer matrices need a >= 3 (b >= 2)");
}

// Fraction-free (Bareiss) determinant of an integer matrix.
BigInt bareiss_det(IntMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

TransferMatrices build_matrices(int a) {
  require_a3(a);
  TransferMatrices t;
  t.a = a;
  t.b = a - 1;
  const int n = 2 * t.b;
  t.E = zero_matrix(n);
  t.T = zero_matrix(n);
  t.U = zero_matrix(n);
  t.A = zero_matrix(n);
  // Row/column index of (i, R): 2i for P, 2i+1 for N.
  for (int i = 0; i < t.b; ++i)
    for (int j = 0; j < t.b; ++j)
      for (int r = 0; r < 2; ++r)
        for (int s = 0; s < 2; ++s) {
          const auto row = static_cast<std::size_t>(2 * i + r);
          const auto col = static_cast<std::size_t>(2 * j + s);
          if (i == j && r != s) t.E[row][col] = 1;
          if (i > j) t.T[row][col] = 1;
          if (i < j && r == 0 && s == 1) t.U[row][col] = 1;
          t.A[row][col] = t.E[row][col] + t.T[row][col] + t.U[row][col];
        }
  return t;
}

IntMatrix mat_mul(const IntMatrix& x, const IntMatrix& y) {
  const std::size_t n = x.size();
  IntMatrix out(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (x[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out[i][j] += x[i][k] * y[k][j];
    }
  return out;
}

std::vector<BigInt> mat_vec(const IntMatrix& m, const std::vector<BigInt>& v) {
  std::vector<BigInt> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

BigInt compute_a_r(int a, int r) {
  require_a3(a);
  if (r < 1) throw std::invalid_argument("r must be >= 1");
  const TransferMatrices t = build_matrices(a);
  std::vector<BigInt> v(t.A.size(), 1);  // the all-ones vector
  for (int k = 1; k < r; ++k) v = mat_vec(t.A, v);
  return v[0];  // row 0P of A^{r-1} applied to ones
}

std::vector<BigInt> char_poly(const IntMatrix& M) {
  const int n = static_cast<int>(M.size());
  // Evaluate det(xI - M) at x = 0..n and interpolate the monic degree-n
  // polynomial exactly.
  std::vector<BigInt> xs(static_cast<std::size_t>(n) + 1), ys(static_cast<std::size_t>(n) + 1);
  for (int x = 0; x <= n; ++x) {
    IntMatrix shifted = M;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) shifted[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = -M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      shifted[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] += x;
    }
    xs[static_cast<std::size_t>(x)] = x;
    ys[static_cast<std::size_t>(x)] = bareiss_det(shifted);
  }
  // Lagrange interpolation over the rationals.
  std::vector<BigRat> coeff(static_cast<std::size_t>(n) + 1, BigRat(0));
  for (std::size_t k = 0; k < xs.size(); ++k) {
    // Basis polynomial prod_{j != k} (x - x_j) / (x_k - x_j).
    std::vector<BigRat> basis{BigRat(1)};
    BigRat denom(1);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == k) continue;
      basis.push_back(BigRat(0));
      for (std::size_t d = basis.size(); d-- > 1;) {
        basis[d] = basis[d - 1] - BigRat(xs[j]) * basis[d];
        basis[d].canonicalize();
      }
      basis[0] = BigRat(-xs[j]) * basis[0];
      basis[0].canonicalize();
      denom *= BigRat(xs[k] - xs[j]);
    }
    // basis now holds coefficients low..high of prod (x - x_j)... see below.
    for (std::size_t d = 0; d < basis.size(); ++d) {
      BigRat c = basis[d] * BigRat(ys[k]) / denom;
      c.canonicalize();
      coeff[d] += c;
    }
  }
  std::vector<BigInt> out(coeff.size());
  for (std::size_t d = 0; d < coeff.size(); ++d) {
    coeff[d].canonicalize();
    if (coeff[d].get_den() != 1)
      throw std::logic_error("char_poly: interpolation produced a non-integer coefficient");
    out[d] = coeff[d].get_num();
  }
  return out;
}

std::vector<BigInt> expected_char_poly(int b) {
  // (lambda + 1)^b
  std::vector<BigInt> p(static_cast<std::size_t>(b) + 1);
  for (int k = 0; k <= b; ++k)
    p[static_cast<std::size_t>(k)] = binomial(static_cast<unsigned long>(b), static_cast<unsigned long>(k));
  // * (lambda - b)
  std::vector<BigInt> q(p.size() + 1);
  for (std::size_t k = 0; k < p.size(); ++k) {
    q[k + 1] += p[k];
    q[k] -= BigInt(b) * p[k];
  }
  // * lambda^{b-1}
  std::vector<BigInt> out(q.size() + static_cast<std::size_t>(b) - 1);
  for (std::size_t k = 0; k < q.size(); ++k) out[k + static_cast<std::size_t>(b) - 1] = q[k];
  return out;
}

bool verify_char_poly(int a) {
  require_a3(a);
  const TransferMatrices t = build_matrices(a);
  return char_poly(t.A) == expected_char_poly(t.b);
}

RatVector witness_e(int a) {
  require_a3(a);
  const int b = a - 1;
  const BigRat zeta = BigRat(b + 1, b);
  RatVector e(static_cast<std::size_t>(2 * b));
  BigRat zp(1);  // zeta^i
  for (int i = 0; i < b; ++i) {
    e[static_cast<std::size_t>(2 * i)] = BigRat(b) * zp;
    e[static_cast<std::size_t>(2 * i) + 1] = (i == b - 1 ? BigRat(b) : BigRat(i + 1)) * zp;
    e[static_cast<std::size_t>(2 * i)].canonicalize();
    e[static_cast<std::size_t>(2 * i) + 1].canonicalize();
    zp *= zeta;
    zp.canonicalize();
  }
  return e;
}

RatVector witness_f(int a, int i) {
  require_a3(a);
  const int b = a - 1;
  if (i < 1 || i > b - 1) throw std::invalid_argument("witness_f: need 1 <= i <= b-1");
  RatVector f(static_cast<std::size_t>(2 * b), BigRat(0));
  f[static_cast<std::size_t>(2 * (b - i)) - 1] = BigRat(-i);  // the 2(b-i)'th coordinate
  for (std::size_t k = static_cast<std::size_t>(2 * (b - i)); k < f.size(); ++k) f[k] = BigRat(1);
  return f;
}

namespace {

RatVector rat_mat_vec(const IntMatrix& m, const RatVector& v) {
  RatVector out(m.size(), BigRat(0));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m[i][j] != 0) out[i] += BigRat(m[i][j]) * v[j];
    out[i].canonicalize();
  }
  return out;
}

bool rat_equal(const RatVector& x, const RatVector& y) {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (cmp(x[i], y[i]) != 0) return false;
  return true;
}

}  // namespace

bool verify_spectral_witness(int a) {
  require_a3(a);
  const TransferMatrices t = build_matrices(a);
  const int b = t.b;
  const BigRat zeta = BigRat(b + 1, b);

  const RatVector e = witness_e(a);
  RatVector be(e.size());
  for (std::size_t k = 0; k < e.size(); ++k) {
    be[k] = BigRat(b) * e[k];
    be[k].canonicalize();
  }
  if (!rat_equal(rat_mat_vec(t.A, e), be)) return false;

  std::vector<RatVector> f;
  for (int i = 1; i <= b - 1; ++i) f.push_back(witness_f(a, i));

  // A f_1 = 0 and A f_i = f_1 + ... + f_{i-1}.
  for (int i = 1; i <= b - 1; ++i) {
    RatVector expect(e.size(), BigRat(0));
    for (int j = 1; j < i; ++j)
      for (std::size_t k = 0; k < expect.size(); ++k) {
        expect[k] += f[static_cast<std::size_t>(j - 1)][k];
        expect[k].canonicalize();
      }
    if (!rat_equal(rat_mat_vec(t.A, f[static_cast<std::size_t>(i - 1)]), expect)) return false;
  }

  // A^{b-1} kills every f_i.
  for (int i = 1; i <= b - 1; ++i) {
    RatVector v = f[static_cast<std::size_t>(i - 1)];
    for (int k = 0; k < b - 1; ++k) v = rat_mat_vec(t.A, v);
    for (const BigRat& c : v)
      if (c != 0) return false;
  }

  // ones = (e - sum_i zeta^{b-1-i} f_i) / b.
  RatVector rhs = e;
  for (int i = 1; i <= b - 1; ++i) {
    BigRat w(1);
    for (int k = 0; k < b - 1 - i; ++k) w *= zeta;
    for (std::size_t c = 0; c < rhs.size(); ++c) {
      rhs[c] -= w * f[static_cast<std::size_t>(i - 1)][c];
      rhs[c].canonicalize();
    }
  }
  for (BigRat& c : rhs) {
    c /= b;
    c.canonicalize();
    if (cmp(c, BigRat(1)) != 0) return false;
  }
  return true;
}

bool a3_recursion_check(int r_max) {
  const TransferMatrices t = build_matrices(3);
  std::vector<std::vector<BigInt>> v;  // v[r-1] = A^{r-1} ones = (a_r, a'_r, b_r, b'_r)
  v.emplace_back(4, BigInt(1));
  for (int r = 2; r <= r_max + 1; ++r) v.push_back(mat_vec(t.A, v.back()));
  auto a_of = [&](int r) { return v[static_cast<std::size_t>(r - 1)][0]; };
  auto ap_of = [&](int r) { return v[static_cast<std::size_t>(r - 1)][1]; };
  auto b_of = [&](int r) { return v[static_cast<std::size_t>(r - 1)][2]; };
  auto bp_of = [&](int r) { return v[static_cast<std::size_t>(r - 1)][3]; };
  if (a_of(1) != 1) return false;
  for (int r = 1; r <= r_max; ++r) {
    if (b_of(r) != bp_of(r)) return false;
    if (r >= 2 && b_of(r) != a_of(r) + ap_of(r)) return false;
    if (r >= 2 && b_of(r) != BigInt(3) * pow_int(2, static_cast<unsigned long>(r) - 2)) return false;
    if (a_of(r + 1) + a_of(r) != BigInt(3) * pow_int(2, static_cast<unsigned long>(r) - 1)) return false;
  }
  return true;
}

}  // namespace pyra
