#include <doctest.h>

#include <stdexcept>

#include "pyra/admissible.hpp"
#include "pyra/verify.hpp"

using namespace pyra;

namespace {

Walk walk_of(int a, const std::string& bits) { return string_to_walk({a, bits}); }

}  // namespace

TEST_CASE("single positive walk factorizes as [P]") {
  const Walk w = walk_of(3, "100");
  const AdmissibleComposition c = factorize_walk(w);
  REQUIRE(c.size() == 1);
  CHECK(c[0].type == FactorType::P);
  CHECK(c[0].i == 0);
  CHECK(compose_admissible(3, c) == w);
  CHECK(composition_profile(3, c) == std::pair<int, std::vector<int>>{1, {1}});
}

TEST_CASE("positive walk ending above 0 factorizes as [P, U]") {
  // a=3: R L ends at 1 = P_00(1) with one trailing left-step deleted.
  Walk w{3, 0, {Step::Right, Step::Left}};
  const AdmissibleComposition c = factorize_walk(w);
  REQUIRE(c.size() == 2);
  CHECK(c[0].type == FactorType::P);
  CHECK(c[0].steps.size() == 3);
  CHECK(c[1].type == FactorType::U);
  CHECK(c[1].i == 0);
  CHECK(c[1].j == 1);
  CHECK(compose_admissible(3, c) == w);
}

TEST_CASE("pure negative walk factorizes as [N]") {
  Walk w{3, 0, {Step::Left, Step::Left, Step::Right}};
  const AdmissibleComposition c = factorize_walk(w);
  REQUIRE(c.size() == 1);
  CHECK(c[0].type == FactorType::N);
}

TEST_CASE("worked mixed factorization") {
  // a=3: R L L L R L = P_00(1) U_01 N_11(1) T_10.
  Walk w{3, 0, {Step::Right, Step::Left, Step::Left, Step::Left, Step::Right, Step::Left}};
  const AdmissibleComposition c = factorize_walk(w);
  REQUIRE(c.size() == 4);
  CHECK(c[0].type == FactorType::P);
  CHECK(c[1].type == FactorType::U);
  CHECK(c[2].type == FactorType::N);
  CHECK(c[2].i == 1);
  CHECK(c[3].type == FactorType::T);
  CHECK(c[3].i == 1);
  CHECK(c[3].j == 0);
  CHECK(compose_admissible(3, c) == w);
  CHECK(count_all_factorizations(w) == 1);
}

TEST_CASE("factorize_walk rejects out-of-range endpoints") {
  CHECK_THROWS_AS(factorize_walk(Walk{3, 0, {Step::Right}}), std::domain_error);   // ends at 2
  CHECK_THROWS_AS(factorize_walk(Walk{3, 0, {Step::Left}}), std::domain_error);    // ends at -1
  CHECK_THROWS_AS(factorize_walk(Walk{3, 1, {Step::Left}}), std::domain_error);    // start != 0
}

TEST_CASE("empty walk maps to the empty composition") {
  const Walk w{4, 0, {}};
  CHECK(factorize_walk(w).empty());
  CHECK(compose_admissible(4, {}) == w);
}

TEST_CASE("compose_admissible validates the pair rule") {
  const Walk p00 = walk_of(3, "100");
  AdmissibleComposition bad;
  bad.push_back({FactorType::P, 0, 0, p00.steps});
  bad.push_back({FactorType::P, 0, 0, p00.steps});  // PP forbidden
  CHECK_THROWS_AS(compose_admissible(3, bad), std::invalid_argument);

  AdmissibleComposition chain_break;
  chain_break.push_back({FactorType::P, 0, 0, p00.steps});
  chain_break.push_back({FactorType::N, 1, 1, {Step::Left, Step::Left, Step::Right}});
  CHECK_THROWS_AS(compose_admissible(3, chain_break), std::invalid_argument);  // 0 then 1
}

TEST_CASE("uniqueness on every closed walk starting with a right-step (small)") {
  for (int a : {3, 4})
    for (const CheckResult& r : verify_factorization(a, 9)) {
      INFO(r.name, ": ", r.detail);
      CHECK(r.ok);
    }
}

TEST_CASE("walks outside the decomposable family throw; oracle agrees") {
  // Exhaust all step sequences of length <= 7 for a=3 ending in [0, a-2];
  // factorize_walk succeeds exactly when the oracle finds one composition,
  // and the oracle never finds more than one.
  const int a = 3;
  for (int len = 1; len <= 7; ++len) {
    for (unsigned mask = 0; mask < (1u << len); ++mask) {
      Walk w{a, 0, {}};
      for (int k = 0; k < len; ++k)
        w.steps.push_back(mask & (1u << k) ? Step::Right : Step::Left);
      const std::int64_t end = w.end();
      if (end < 0 || end > a - 2) continue;
      const std::uint64_t n = count_all_factorizations(w);
      CHECK(n <= 1);
      if (n == 1) {
        const AdmissibleComposition c = factorize_walk(w);
        CHECK(compose_admissible(a, c) == w);
      } else {
        CHECK_THROWS_AS(factorize_walk(w), std::invalid_argument);
      }
    }
  }
}

TEST_CASE("every P before T or at the end is followed by a left-step in the walk") {
  // Maximality: a P factor inside the factorization is never directly
  // followed by a right-step of the composed walk.
  const int a = 3;
  for_each_string(a, 12, 4, true, [&](const BitString& s) {
    const Walk w = string_to_walk(s);
    if (w.end() != 0) return;
    const AdmissibleComposition c = factorize_walk(w);
    std::size_t pos = 0;
    for (std::size_t k = 0; k < c.size(); ++k) {
      const WalkFactor& f = c[k];
      std::size_t consumed = 0;
      if (f.type == FactorType::P || f.type == FactorType::N)
        consumed = f.steps.size();
      else if (f.type == FactorType::T)
        consumed = static_cast<std::size_t>(f.i - f.j);
      if (f.type == FactorType::P && k + 1 < c.size() && c[k + 1].type == FactorType::U)
        consumed -= static_cast<std::size_t>(c[k + 1].j - c[k + 1].i);  // U-deleted steps
      pos += consumed;
      if (f.type == FactorType::P && pos < w.steps.size())
        CHECK(w.steps[pos] == Step::Left);
    }
    CHECK(pos == w.steps.size());
  });
}
