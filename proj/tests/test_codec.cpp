#include <doctest.h>

#include <stdexcept>

#include <set>

#include "pyra/codec.hpp"
#include "pyra/series.hpp"
#include "pyra/verify.hpp"

using namespace pyra;

namespace {

Heap make_heap(int a, std::initializer_list<std::int64_t> drops) {
  Heap h(a);
  for (std::int64_t o : drops) h.drop(o);
  return h;
}

}  // namespace

TEST_CASE("greedy string codec anchors") {
  CHECK(right_pyramid_to_string(Pyramid(make_heap(2, {0}))).bits == "10");
  CHECK(right_pyramid_to_string(Pyramid(make_heap(2, {0, 1, 0}))).bits == "110010");

  CHECK(string_to_right_pyramid({2, "1010"}).heap().pieces() ==
        std::vector<Piece>{{0, 1}, {0, 2}});
  CHECK(string_to_right_pyramid({2, "1100"}).heap().pieces() ==
        std::vector<Piece>{{0, 1}, {1, 2}});
  CHECK_THROWS_AS(string_to_right_pyramid({2, "0110"}), std::invalid_argument);
  CHECK_THROWS_AS(right_pyramid_to_string(Pyramid(make_heap(2, {0, -1}))),
                  std::invalid_argument);
}

TEST_CASE("string codec round trips with distinct codes") {
  for (int a : {2, 3, 4})
    for (int m = 1; m <= (a == 2 ? 6 : 4); ++m) {
      std::set<std::string> codes;
      for_each_positive_string(a, m, [&](const BitString& s) {
        const Pyramid p = string_to_right_pyramid(s);
        CHECK(p.is_right_type());
        CHECK(p.size() == static_cast<std::size_t>(m));
        const BitString back = right_pyramid_to_string(p);
        CHECK(back == s);
        codes.insert(back.bits);
      });
      CHECK(BigInt(static_cast<unsigned long>(codes.size())) == count_A(a, m));
    }
}

TEST_CASE("full dimer codec reproduces the ten size-3 decompositions") {
  const std::vector<std::vector<std::string>> expected_splits{
      {"111000"}, {"110100"}, {"110010"}, {"101100"}, {"101010"},
      {"1100", "01"}, {"1010", "01"}, {"10", "01", "10"}, {"10", "0101"}, {"10", "0011"}};
  std::set<std::string> codes;
  std::set<std::vector<std::string>> seen;
  for_each_string(2, 6, 3, true, [&](const BitString& s) {
    const Pyramid p = code_to_pyramid_a2(s);
    const PyramidCode c = pyramid_to_code_a2(p);
    CHECK(c.code == s);  // byte-exact round trip
    std::vector<std::string> segs;
    for (const BitString& f : c.factors) segs.push_back(f.bits);
    seen.insert(segs);
    codes.insert(c.code.bits);
  });
  CHECK(codes.size() == 10);
  for (const auto& f : expected_splits) CHECK(seen.count(f) == 1);
}

TEST_CASE("full codec anchors: juxtaposed factor strings") {
  // p1=10, p2=0011 -> "100011" and p1=10, p2=01, p3=10 -> "100110".
  {
    const Pyramid p = code_to_pyramid_a2({2, "100011"});
    const PyramidCode c = pyramid_to_code_a2(p);
    REQUIRE(c.factors.size() == 2);
    CHECK(c.factors[0].bits == "10");
    CHECK(c.factors[1].bits == "0011");
    CHECK(p.left_width() == 2);
  }
  {
    const Pyramid p = code_to_pyramid_a2({2, "100110"});
    const PyramidCode c = pyramid_to_code_a2(p);
    REQUIRE(c.factors.size() == 3);
    CHECK(c.factors[0].bits == "10");
    CHECK(c.factors[1].bits == "01");
    CHECK(c.factors[2].bits == "10");
  }
}

TEST_CASE("full dimer codec round trips on every (2m,m)-string up to m=7") {
  for (int m = 1; m <= 7; ++m) {
    std::uint64_t n = 0;
    for_each_string(2, 2 * m, m, true, [&](const BitString& s) {
      CHECK(pyramid_to_code_a2(code_to_pyramid_a2(s)).code == s);
      ++n;
    });
    CHECK(BigInt(static_cast<unsigned long>(n)) == count_B(2, m));
  }
}

TEST_CASE("round-trip verify suite") {
  for (int a : {2, 3})
    for (const CheckResult& r : verify_roundtrips(a, 4)) {
      INFO(r.name);
      CHECK(r.ok);
    }
}

TEST_CASE("full codec is a=2 specific and wants (2m,m)-strings") {
  CHECK_THROWS_AS(pyramid_to_code_a2(Pyramid(make_heap(3, {0}))), std::invalid_argument);
  CHECK_THROWS_AS(code_to_pyramid_a2({2, "0110"}), std::invalid_argument);
  CHECK_THROWS_AS(code_to_pyramid_a2({2, "1101"}), std::invalid_argument);
  CHECK_THROWS_AS(code_to_pyramid_a2({3, "110000"}), std::invalid_argument);
}
