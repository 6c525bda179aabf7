#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "pyra/lego.hpp"
#include "pyra/mc.hpp"
#include "pyra/series.hpp"

using namespace pyra;

TEST_CASE("flat validity") {
  CHECK(flat_valid(2, {{0, 1}}));
  CHECK(flat_valid(2, {{0, 1}, {1, 2}}));
  CHECK(flat_valid(2, {{0, 1}, {-1, 2}, {1, 2}}));
  CHECK_FALSE(flat_valid(2, {{0, 1}, {2, 1}}));          // two lowest pieces
  CHECK_FALSE(flat_valid(2, {{0, 1}, {1, 1}}));          // same-level overlap
  CHECK_FALSE(flat_valid(2, {{0, 1}, {3, 2}}));          // disconnected
  CHECK(flat_valid(2, {{0, 1}, {1, 2}, {2, 3}, {3, 2}}));  // (3,2) hangs, unsupported
  CHECK_FALSE(flat_valid(2, {{0, 1}, {1, 2}, {2, 1}}));    // two pieces at the lowest level
}

TEST_CASE("hanging pieces canonicalize upward") {
  // A piece clipped underneath becomes the new bottom after canonicalization.
  const std::vector<Piece> c = flat_canonical({{0, 1}, {1, 0}});
  CHECK(c == std::vector<Piece>{{0, 1}, {-1, 2}});
}

TEST_CASE("flat anchor counts") {
  for (int a = 2; a <= 4; ++a) CHECK(count_flat_orderly(a, 1) == 1);
  CHECK(count_flat_orderly(2, 2) == 3);
  CHECK(count_flat_dedup(2, 2) == 3);
  // L^a_2 = 2a-1 = B_2 for every a.
  for (int a = 2; a <= 4; ++a) {
    CHECK(count_flat_orderly(a, 2) == count_B(a, 2));
    CHECK(count_flat_dedup(a, 2) == count_B(a, 2));
  }
}

TEST_CASE("the two exhaustive generators agree") {
  for (int m = 1; m <= 5; ++m)
    CHECK(count_flat_orderly(2, m) == count_flat_dedup(2, m));
  for (int m = 1; m <= 4; ++m)
    CHECK(count_flat_orderly(3, m) == count_flat_dedup(3, m));
}

TEST_CASE("L dominates B; a hanging piece first appears at m = 4") {
  for (int a : {2, 3})
    for (int m = 1; m <= 4; ++m) {
      const BigInt L = count_flat_orderly(a, m);
      CHECK(L >= count_B(a, m));
      if (m <= 3) CHECK(L == count_B(a, m));  // 3 pieces cannot hang yet
      if (m >= 4) CHECK(L > count_B(a, m));
    }
}

TEST_CASE("flat budget guard") {
  CHECK_THROWS_AS(count_flat_orderly(2, 8, 5), BudgetExceeded);
  CHECK_THROWS_AS(count_flat_dedup(2, 8, 5), BudgetExceeded);
}

TEST_CASE("growth bounds") {
  CHECK(growth_lower_bound(2) == doctest::Approx(4.0));
  CHECK(growth_lower_bound(3) == doctest::Approx(6.75));
  CHECK(growth_lower_bound_exact(3) == BigRat(27, 4));
  for (int a = 2; a <= 12; ++a) {
    CHECK(growth_lower_bound(a) < conjectured_growth(a));
    CHECK(conjectured_growth(a) == doctest::Approx(1.25 * growth_lower_bound(a)));
  }
}

TEST_CASE("depth-1 polynomial coefficients") {
  // The x^2 coefficient factors as a^2 (a-1)^4.
  for (int a = 2; a <= 100; ++a) {
    const BigRat c2 = klarner_coefficient(a, 2);
    CHECK(c2 == BigRat(BigInt(a) * a * pow_int(a - 1, 4)));
    CHECK(c2.get_den() == 1);
    // All four coefficients are exact rationals with denominator dividing 40.
    for (int p = 2; p <= 5; ++p) {
      BigInt den = klarner_coefficient(a, p).get_den();
      CHECK(BigInt(40) % den == 0);
    }
  }
  CHECK(klarner_coefficient(2, 2) == 4);
}

TEST_CASE("depth-1 largest root is found and certified") {
  for (int a = 2; a <= 8; ++a) {
    const KlarnerRoot r = klarner_depth1_bound(a);
    INFO("a=", a, " note=", r.note);
    CHECK(r.found);
    CHECK(r.root > 0.0);
    CHECK(r.residual < 1e-12);
    // Certify: exact sign change in a tiny interval around the reported root.
    const BigRat x(r.root);
    BigRat lo = x * BigRat(999999, 1000000), hi = x * BigRat(1000001, 1000000);
    auto eval = [&](const BigRat& v) {
      BigRat s(0);
      for (int p = 5; p >= 2; --p) s = s * v + klarner_coefficient(a, p);
      s = s * v * v;
      return sgn(s);
    };
    CHECK(eval(lo) * eval(hi) <= 0);
  }
}

TEST_CASE("growth fit recovers exact rates") {
  std::vector<std::pair<std::int64_t, BigInt>> pts;
  for (int m = 16; m <= 40; ++m) pts.emplace_back(m, count_B(2, m));
  const GrowthFit f2 = fit_growth_counts(pts);
  CHECK(f2.growth > 3.96);
  CHECK(f2.growth < 4.04);

  pts.clear();
  for (int m = 16; m <= 40; ++m) pts.emplace_back(m, count_B(3, m));
  const GrowthFit f3 = fit_growth_counts(pts);
  CHECK(f3.growth > 6.75 * 0.99);
  CHECK(f3.growth < 6.75 * 1.01);
}

TEST_CASE("growth fit degenerate inputs") {
  std::vector<std::pair<std::int64_t, double>> fixed;
  for (int n = 5; n <= 12; ++n) fixed.emplace_back(n, std::log(7.0));
  const GrowthFit f = fit_growth(fixed);
  CHECK(f.growth == doctest::Approx(1.0).epsilon(1e-9));

  CHECK_THROWS_AS(fit_growth({{1, 0.0}, {2, 0.5}, {3, 1.0}}), std::invalid_argument);
  std::vector<std::pair<std::int64_t, double>> collinear{{4, 1.0}, {4, 1.0}, {4, 1.0}, {4, 1.0}};
  CHECK_THROWS_AS(fit_growth(collinear), std::invalid_argument);
}

TEST_CASE("synthetic power-law recovery") {
  std::vector<std::pair<std::int64_t, double>> pts;
  const double A = 0.37, H = 5.25, C = -1.5;
  for (int n = 10; n <= 30; ++n)
    pts.emplace_back(n, std::log(A) + n * std::log(H) + C * std::log(static_cast<double>(n)));
  const GrowthFit f = fit_growth(pts);
  CHECK(f.amplitude == doctest::Approx(A).epsilon(1e-6));
  CHECK(f.growth == doctest::Approx(H).epsilon(1e-9));
  CHECK(f.exponent == doctest::Approx(C).epsilon(1e-6));
}

TEST_CASE("section 5 report rows") {
  const auto rows = section5_report(2, 4);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].a == 2);
  CHECK(rows[0].lower_bound == doctest::Approx(4.0));
  CHECK(rows[0].conjecture == doctest::Approx(5.0));
  CHECK(rows[1].conjecture == doctest::Approx(1.25 * 6.75));
  for (const auto& r : rows) CHECK(r.klarner.found);
}
