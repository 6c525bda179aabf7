#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace pyra {

using BigInt = mpz_class;
using BigRat = mpq_class;

/// Thrown when a requested computation exceeds a configured resource cap.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

inline BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  if (k > n) return r;  // 0
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline BigInt pow_int(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

/// Natural log of a positive big integer, accurate to ~1 ulp of double.
inline double ln_big(const BigInt& x) {
  if (x <= 0) throw std::domain_error("ln_big: argument must be positive");
  long e = 0;
  double d = mpz_get_d_2exp(&e, x.get_mpz_t());  // x = d * 2^e, d in [0.5, 1)
  return std::log(d) + static_cast<double>(e) * 0.6931471805599453094;
}

inline double to_double(const BigRat& q) { return q.get_d(); }

}  // namespace pyra
