#include <doctest.h>

#include <stdexcept>

#include <map>

#include "pyra/admissible.hpp"
#include "pyra/series.hpp"
#include "pyra/transfer.hpp"
#include "pyra/verify.hpp"

using namespace pyra;

TEST_CASE("a=3 matrices match the worked 4x4 display") {
  const TransferMatrices t = build_matrices(3);
  const IntMatrix E{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}};
  const IntMatrix T{{0, 0, 0, 0}, {0, 0, 0, 0}, {1, 1, 0, 0}, {1, 1, 0, 0}};
  const IntMatrix U{{0, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}};
  const IntMatrix A{{0, 1, 0, 1}, {1, 0, 0, 0}, {1, 1, 0, 1}, {1, 1, 1, 0}};
  CHECK(t.E == E);
  CHECK(t.T == T);
  CHECK(t.U == U);
  CHECK(t.A == A);
  CHECK_THROWS_AS(build_matrices(2), std::invalid_argument);
}

TEST_CASE("E rows are a permutation") {
  for (int a = 3; a <= 8; ++a) {
    const TransferMatrices t = build_matrices(a);
    for (const auto& row : t.E) {
      BigInt sum = 0;
      for (const BigInt& v : row) sum += v;
      CHECK(sum == 1);
    }
  }
}

TEST_CASE("a_r equals (a-1)^{r-1}") {
  CHECK(compute_a_r(3, 1) == 1);
  CHECK(compute_a_r(3, 2) == 2);
  CHECK(compute_a_r(3, 3) == 4);
  CHECK(compute_a_r(3, 4) == 8);
  CHECK(compute_a_r(5, 6) == 1024);
  for (int a = 3; a <= 8; ++a)
    for (int r = 1; r <= 12; ++r)
      CHECK(compute_a_r(a, r) == pow_int(a - 1, static_cast<unsigned long>(r) - 1));
}

TEST_CASE("characteristic polynomial") {
  // a=3: lambda (lambda-2)(lambda+1)^2 = lambda^4 - 3 lambda^2 - 2 lambda.
  const std::vector<BigInt> expect{0, -2, -3, 0, 1};
  CHECK(char_poly(build_matrices(3).A) == expect);
  CHECK(expected_char_poly(2) == expect);
  for (int a = 3; a <= 8; ++a) CHECK(verify_char_poly(a));
}

TEST_CASE("spectral witnesses") {
  const RatVector e3 = witness_e(3);
  CHECK(e3 == RatVector{BigRat(2), BigRat(1), BigRat(3), BigRat(3)});
  for (int a = 3; a <= 8; ++a) CHECK(verify_spectral_witness(a));
}

TEST_CASE("a=3 recursion anchors") { CHECK(a3_recursion_check(12)); }

TEST_CASE("profile aggregation ties walks to a_r weights") {
  // For every closed walk of length am starting with a right-step, group the
  // factorizations by (r, ordered sizes): each group holds exactly
  // a_r * prod A_{m_i} walks, and the grand total is C(am-1, m-1).
  for (int a : {3, 4})
    for (int m = 1; m <= 3; ++m) {
      std::map<std::vector<int>, BigInt> groups;
      BigInt total = 0;
      for_each_string(a, a * m, m, true, [&](const BitString& s) {
        const Walk w = string_to_walk(s);
        if (w.end() != 0) return;
        const auto [r, sizes] = composition_profile(a, factorize_walk(w));
        (void)r;
        groups[sizes] += 1;
        total += 1;
      });
      CHECK(total == count_B(a, m));
      for (const auto& [sizes, n] : groups) {
        BigInt expect = compute_a_r(a, static_cast<int>(sizes.size()));
        for (int k : sizes) expect *= count_A(a, k);
        CHECK(n == expect);
      }
    }
}
