#pragma once

#include <vector>

#include "pyra/strings.hpp"

namespace pyra {

enum class PathStep : unsigned char { Up, Down };

// A lattice path from (0,0) with up-steps (1, a-1) and down-steps (1, -1).
// Generalized Dyck (a-1)-paths stay on or above the axis and end on it.
struct LatticePath {
  int a = 2;
  std::vector<PathStep> steps;

  friend bool operator==(const LatticePath&, const LatticePath&) = default;
};

LatticePath walk_to_path(const Walk& w);
Walk path_to_walk(const LatticePath& p);

bool is_generalized_dyck(const LatticePath& p);

// A planar rooted tree whose vertices have order 1 or a+1 and whose root has
// order 1; the order-(a+1) vertices are the nodes. Stored as one entry per
// node with a ordered child slots (-1 = leaf). Node 0 is the root's unique
// child when the tree is nonempty.
struct AryTree {
  int a = 2;
  std::vector<std::vector<int>> children;  // children[v].size() == a

  std::size_t node_count() const { return children.size(); }
  friend bool operator==(const AryTree&, const AryTree&) = default;
};

/// Bijection between generalized Dyck (a-1)-paths and a-ary trees: strip the
/// leading up-step, split the rest at the first returns to each of the levels
/// a-1, ..., 1 into sub-paths joined by single down-steps, and recurse.
/// Throws std::invalid_argument if the path is not generalized Dyck.
AryTree dyck_to_tree(const LatticePath& p);

LatticePath tree_to_dyck(const AryTree& t);

}  // namespace pyra
