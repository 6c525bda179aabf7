#include <doctest.h>

#include <stdexcept>

#include <algorithm>

#include "pyra/admissible.hpp"
#include "pyra/codec.hpp"
#include "pyra/decomp.hpp"
#include "pyra/lego.hpp"
#include "pyra/mc.hpp"
#include "pyra/paths.hpp"
#include "pyra/series.hpp"

// Randomized property checks at sizes the exhaustive suites cannot reach.
// Generators are hand-rolled on SplitMix64 so failures replay from the seed.

using namespace pyra;

namespace {

BitString random_positive_string(int a, int m, SplitMix64& rng) {
  // Uniform over positive (am,m)-strings via the ballot-style acceptance
  // counts would need big rationals; biased sampling is fine for property
  // tests, so grow with the same feasibility rule as the enumerator.
  BitString s{a, {}};
  int ones = 0;
  std::int64_t t = 0;
  const std::size_t n = static_cast<std::size_t>(a) * static_cast<std::size_t>(m);
  while (s.bits.size() < n) {
    const bool can_one = ones < m;
    const bool can_zero = t >= 1;
    const bool pick_one = can_one && (!can_zero || rng.below(a + 1) < 2);
    if (pick_one) {
      s.bits.push_back('1');
      ++ones;
      t += a - 1;
    } else {
      s.bits.push_back('0');
      --t;
    }
  }
  return s;
}

Walk random_walk_to(int a, int length, SplitMix64& rng) {
  // Random step sequences from 0, retried until the endpoint lands in
  // [0, a-2]; values may dip anywhere.
  while (true) {
    Walk w{a, 0, {}};
    for (int k = 0; k < length; ++k)
      w.steps.push_back(rng.below(a) == 0 ? Step::Right : Step::Left);
    const std::int64_t e = w.end();
    if (e >= 0 && e <= a - 2) return w;
  }
}

Pyramid random_pyramid(int a, int m, SplitMix64& rng) {
  Heap h(a);
  h.drop(0);
  std::int64_t lo = 0, hi = 0;
  for (int k = 1; k < m; ++k) {
    const std::uint64_t choices = static_cast<std::uint64_t>(hi - lo) + 2 * a - 1;
    const std::int64_t off = lo - (a - 1) + static_cast<std::int64_t>(rng.below(choices));
    h.drop(off);
    lo = std::min(lo, off);
    hi = std::max(hi, off);
  }
  return Pyramid(std::move(h));
}

}  // namespace

TEST_CASE("property: string codec at large sizes") {
  SplitMix64 rng(20260809);
  for (int rep = 0; rep < 60; ++rep) {
    const int a = 2 + static_cast<int>(rng.below(5));
    const int m = 20 + static_cast<int>(rng.below(41));
    const BitString s = random_positive_string(a, m, rng);
    REQUIRE(is_positive(s, m));
    const Pyramid p = string_to_right_pyramid(s);
    CHECK(p.size() == static_cast<std::size_t>(m));
    CHECK(p.is_right_type());
    CHECK(right_pyramid_to_string(p) == s);
    // Positivity transports to the path picture and the tree codec inverts.
    const LatticePath path = walk_to_path(string_to_walk(s));
    REQUIRE(is_generalized_dyck(path));
    const AryTree t = dyck_to_tree(path);
    CHECK(t.node_count() == static_cast<std::size_t>(m));
    CHECK(tree_to_dyck(t) == path);
  }
}

TEST_CASE("property: decompose/recompose on random large pyramids") {
  SplitMix64 rng(7);
  for (int rep = 0; rep < 80; ++rep) {
    const int a = 2 + static_cast<int>(rng.below(4));
    const int m = 10 + static_cast<int>(rng.below(31));
    const Pyramid p = random_pyramid(a, m, rng);
    const DecompSeq d = decompose(p);
    CHECK(decomp_seq_valid(a, d));
    CHECK(recompose(a, d) == p);
    std::size_t total = 0;
    for (const DecompFactor& f : d) total += f.part.size();
    CHECK(total == p.size());
    // Mirrors decompose with the same factor sizes in mirrored roles.
    const Pyramid q = p.mirrored();
    CHECK(q.mirrored() == p);
    CHECK(q.left_width() == p.width() - p.left_width() - a);
  }
}

TEST_CASE("property: dimer full codec on random pyramids") {
  SplitMix64 rng(99);
  for (int rep = 0; rep < 60; ++rep) {
    const int m = 15 + static_cast<int>(rng.below(26));
    const Pyramid p = random_pyramid(2, m, rng);
    const PyramidCode c = pyramid_to_code_a2(p);
    CHECK(c.code.bits.size() == static_cast<std::size_t>(2 * m));
    CHECK(c.code.bits.front() == '1');
    CHECK(code_to_pyramid_a2(c.code) == p);
    std::string joined;
    for (const BitString& f : c.factors) joined += f.bits;
    CHECK(joined == c.code.bits);
  }
}

TEST_CASE("property: factorization identity on long random walks") {
  SplitMix64 rng(4242);
  int factored = 0;
  for (int rep = 0; rep < 400; ++rep) {
    const int a = 3 + static_cast<int>(rng.below(4));
    const int len = 6 + static_cast<int>(rng.below(35));
    const Walk w = random_walk_to(a, len, rng);
    AdmissibleComposition c;
    try {
      c = factorize_walk(w);
    } catch (const std::invalid_argument&) {
      continue;  // walks outside the decomposable family
    }
    ++factored;
    CHECK(composition_valid(a, c));
    CHECK(compose_admissible(a, c) == w);
    // The inverse of every N factor is a positive walk and vice versa.
    for (const WalkFactor& f : c) {
      if (f.type == FactorType::N)
        CHECK(is_positive_walk(inverse_walk(Walk{a, f.i, f.steps})));
      if (f.type == FactorType::P)
        CHECK(is_negative_walk(inverse_walk(Walk{a, f.i, f.steps})));
    }
  }
  CHECK(factored > 100);  // the family is common among random walks
}

TEST_CASE("property: walks of length am starting with a right-step always factor") {
  SplitMix64 rng(31337);
  for (int rep = 0; rep < 150; ++rep) {
    const int a = 3 + static_cast<int>(rng.below(3));
    const int m = 2 + static_cast<int>(rng.below(7));
    // Random (am,m)-string starting with 1: shuffle the remaining symbols.
    std::string rest(static_cast<std::size_t>(m) - 1, '1');
    rest.resize(static_cast<std::size_t>(a * m) - 1, '0');
    for (std::size_t i = rest.size(); i > 1; --i)
      std::swap(rest[i - 1], rest[rng.below(i)]);
    const Walk w = string_to_walk({a, "1" + rest});
    const AdmissibleComposition c = factorize_walk(w);  // must not throw
    CHECK(compose_admissible(a, c) == w);
    const auto [r, sizes] = composition_profile(a, c);
    int total = 0;
    for (int k : sizes) total += k;
    CHECK(r == static_cast<int>(sizes.size()));
    CHECK(total == m);
  }
}

TEST_CASE("property: flat canonicalization is idempotent and order counts positive") {
  SplitMix64 rng(555);
  for (int rep = 0; rep < 60; ++rep) {
    const int a = 2 + static_cast<int>(rng.below(3));
    const int m = 5 + static_cast<int>(rng.below(9));
    std::vector<Piece> ps{{0, 1}};
    for (int k = 1; k < m; ++k) {
      const std::vector<Piece> options = flat_attachments(a, ps);
      REQUIRE_FALSE(options.empty());
      ps.push_back(options[rng.below(options.size())]);
    }
    const std::vector<Piece> canon = flat_canonical(ps);
    CHECK(flat_valid(a, canon));
    CHECK(flat_canonical(canon) == canon);
    CHECK(canon.front().level == 1);
    CHECK(flat_order_count(a, canon) >= 1);
  }
}
