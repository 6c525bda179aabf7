#include <doctest.h>

#include <stdexcept>

#include "pyra/decomp.hpp"
#include "pyra/heap.hpp"

using namespace pyra;

namespace {

Heap make_heap(int a, std::initializer_list<std::int64_t> drops) {
  Heap h(a);
  for (std::int64_t o : drops) h.drop(o);
  return h;
}

}  // namespace

TEST_CASE("drop semantics") {
  Heap h(2);
  CHECK(h.drop(0) == 1);
  CHECK(h.pieces() == std::vector<Piece>{{0, 1}});

  SUBCASE("overlap forces level 2") {
    CHECK(h.drop(1) == 2);
    CHECK(h.pieces() == std::vector<Piece>{{0, 1}, {1, 2}});
  }
  SUBCASE("disjoint rests at level 1") {
    CHECK(h.drop(2) == 1);
    CHECK(h.pieces() == std::vector<Piece>{{0, 1}, {2, 1}});
    CHECK_FALSE(h.is_pyramid());
  }
  SUBCASE("functional drop leaves the original untouched") {
    const Heap g = h.dropped(1);
    CHECK(h.size() == 1);
    CHECK(g.size() == 2);
  }
}

TEST_CASE("drop rests on the highest overlapping piece") {
  Heap h = make_heap(3, {0, 2, -2});
  // (0,1), (2,2), (-2,2)
  CHECK(h.landing_level(1) == 3);
  CHECK(h.landing_level(4) == 3);   // overlaps only (2,2)
  CHECK(h.landing_level(5) == 1);   // intervals ]2,5[ and ]5,8[ are disjoint
  CHECK(h.landing_level(-5) == 1);  // no overlap
}

TEST_CASE("pyramid predicate") {
  CHECK(make_heap(2, {0}).is_pyramid());
  CHECK_FALSE(make_heap(2, {0, 2}).is_pyramid());
  CHECK(make_heap(2, {0, 1, 0}).is_pyramid());
}

TEST_CASE("pyramid construction rejects bad heaps") {
  CHECK(make_heap(2, {0, 1}).validate());
  CHECK_THROWS_AS(Pyramid(make_heap(2, {0, 2})), std::invalid_argument);  // two bottoms
  CHECK_THROWS_AS(Pyramid(make_heap(2, {1})), std::invalid_argument);     // not normalized
  CHECK_THROWS_AS(Pyramid(Heap(2)), std::invalid_argument);               // empty
}

TEST_CASE("widths") {
  CHECK(Pyramid(make_heap(2, {0})).width() == 2);
  CHECK(Pyramid(make_heap(5, {0})).width() == 5);
  CHECK(Pyramid(make_heap(2, {0, 1})).width() == 3);
  CHECK(Pyramid(make_heap(3, {0, 2})).width() == 5);

  CHECK(Pyramid(make_heap(2, {0})).left_width() == 0);
  CHECK(Pyramid(make_heap(2, {0, -1})).left_width() == 1);
}

TEST_CASE("left width of a left-hanging composite") {
  // p1 = "10", p2 = "0011": factor sizes (1,2); the left factor hangs two
  // pieces off to the left, left width 2.
  DecompSeq d;
  d.push_back({true, 0, Pyramid(make_heap(2, {0}))});
  d.push_back({false, 1, Pyramid(make_heap(2, {0, -1}))});
  const Pyramid p = recompose(2, d);
  CHECK(p.size() == 3);
  CHECK(p.left_width() == 2);
}

TEST_CASE("mirror is an involution exchanging right and left type") {
  const Pyramid p = Pyramid(make_heap(3, {0, 1, 2}));
  CHECK(p.is_right_type());
  const Pyramid q = p.mirrored();
  CHECK(q.is_left_type());
  CHECK(q.mirrored() == p);
}

TEST_CASE("render_ascii") {
  CHECK(make_heap(2, {0}).render_ascii() == "[]\n");
  CHECK(make_heap(2, {0, 1}).render_ascii() == " []\n[]\n");
  CHECK(make_heap(3, {0}).render_ascii() == "[=]\n");
}

TEST_CASE("decompose anchors from the ten size-3 dimers") {
  // p1=1100, p2=01: pieces {(0,1),(1,2)} + left single at s=1.
  Heap h = make_heap(2, {0, 1, -1});
  const DecompSeq d = decompose(Pyramid(h));
  REQUIRE(d.size() == 2);
  CHECK(d[0].right);
  CHECK(d[0].s == 0);
  CHECK(d[0].part.size() == 2);
  CHECK_FALSE(d[1].right);
  CHECK(d[1].s == 1);
  CHECK(d[1].part.size() == 1);
  CHECK(recompose(2, d) == Pyramid(h));

  // p1=10, p2=01, p3=10: three factors of size 1, s = (0,1,0).
  Heap g = make_heap(2, {0, -1, 0});
  const DecompSeq e = decompose(Pyramid(g));
  REQUIRE(e.size() == 3);
  CHECK(e[0].s == 0);
  CHECK(e[1].s == 1);
  CHECK(e[2].s == 0);
  for (const auto& f : e) CHECK(f.part.size() == 1);
  CHECK(recompose(2, e) == Pyramid(g));
}

TEST_CASE("decompose of a right pyramid is a single factor") {
  const Pyramid p = Pyramid(make_heap(3, {0, 1, 2, 0}));
  REQUIRE(p.is_right_type());
  const DecompSeq d = decompose(p);
  REQUIRE(d.size() == 1);
  CHECK(d[0].right);
  CHECK(d[0].part == p);
}

TEST_CASE("recompose rejects invalid sequences") {
  DecompSeq d;
  d.push_back({false, 0, Pyramid(make_heap(2, {0}))});  // must start right
  CHECK_THROWS_AS(recompose(2, d), std::invalid_argument);

  DecompSeq e;
  e.push_back({true, 0, Pyramid(make_heap(2, {0}))});
  e.push_back({false, 2, Pyramid(make_heap(2, {0}))});  // gap 2 > a-1
  CHECK_THROWS_AS(recompose(2, e), std::invalid_argument);
}
