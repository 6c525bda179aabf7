#include <doctest.h>

#include <stdexcept>

#include <set>

#include "pyra/paths.hpp"
#include "pyra/series.hpp"
#include "pyra/strings.hpp"

using namespace pyra;

TEST_CASE("walk/path relabeling") {
  const Walk w = string_to_walk({2, "10"});
  const LatticePath p = walk_to_path(w);
  CHECK(p.steps == std::vector<PathStep>{PathStep::Up, PathStep::Down});
  CHECK(is_generalized_dyck(p));
  CHECK(path_to_walk(p) == w);

  // Positivity transports through the relabeling.
  CHECK_FALSE(is_generalized_dyck(walk_to_path(string_to_walk({2, "0110"}))));
  CHECK(is_generalized_dyck(walk_to_path(string_to_walk({6, "110000000000"}))));
}

TEST_CASE("two-node binary trees") {
  const AryTree chain_left = dyck_to_tree(walk_to_path(string_to_walk({2, "1010"})));
  REQUIRE(chain_left.node_count() == 2);
  CHECK(chain_left.children[0][0] == 1);  // second node hangs on the first child slot
  CHECK(chain_left.children[0][1] == -1);

  const AryTree chain_right = dyck_to_tree(walk_to_path(string_to_walk({2, "1100"})));
  REQUIRE(chain_right.node_count() == 2);
  CHECK(chain_right.children[0][0] == -1);
  CHECK(chain_right.children[0][1] == 1);
}

TEST_CASE("empty path is the leaf-only tree") {
  const AryTree t = dyck_to_tree(LatticePath{3, {}});
  CHECK(t.node_count() == 0);
  CHECK(tree_to_dyck(t) == LatticePath{3, {}});
}

TEST_CASE("tree codec round trips and counts") {
  for (int a : {2, 3, 4})
    for (int m = 1; m <= 4; ++m) {
      std::set<std::vector<std::vector<int>>> trees;
      for_each_positive_string(a, m, [&](const BitString& s) {
        const LatticePath path = walk_to_path(string_to_walk(s));
        const AryTree t = dyck_to_tree(path);
        CHECK(t.node_count() == static_cast<std::size_t>(m));
        CHECK(tree_to_dyck(t) == path);
        trees.insert(t.children);
      });
      CHECK(BigInt(static_cast<unsigned long>(trees.size())) == count_A(a, m));
    }
}

TEST_CASE("dyck_to_tree rejects non-Dyck paths") {
  CHECK_THROWS_AS(dyck_to_tree(walk_to_path(string_to_walk({2, "0110"}))),
                  std::invalid_argument);
  CHECK_THROWS_AS(dyck_to_tree(walk_to_path(string_to_walk({3, "110"}))), std::invalid_argument);
}
