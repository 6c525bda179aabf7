#include "pyra/paths.hpp"

#include <stdexcept>

namespace pyra {

LatticePath walk_to_path(const Walk& w) {
  LatticePath p;
  p.a = w.a;
  p.steps.reserve(w.steps.size());
  for (Step s : w.steps)
    p.steps.push_back(s == Step::Right ? PathStep::Up : PathStep::Down);
  return p;
}

Walk path_to_walk(const LatticePath& p) {
  Walk w;
  w.a = p.a;
  w.start = 0;
  w.steps.reserve(p.steps.size());
  for (PathStep s : p.steps)
    w.steps.push_back(s == PathStep::Up ? Step::Right : Step::Left);
  return w;
}

bool is_generalized_dyck(const LatticePath& p) {
  std::int64_t h = 0;
  for (PathStep s : p.steps) {
    h += s == PathStep::Up ? p.a - 1 : -1;
    if (h < 0) return false;
  }
  return h == 0;
}

namespace {

// Parses the generalized Dyck path in [lo, hi) into a tree, appending nodes
// to t. Returns the new node id, or -1 for the empty path.
int parse(const LatticePath& p, std::size_t lo, std::size_t hi, AryTree& t) {
  if (lo == hi) return -1;
  if (p.steps[lo] != PathStep::Up) throw std::invalid_argument("dyck_to_tree: malformed path");
  const int id = static_cast<int>(t.children.size());
  t.children.emplace_back(static_cast<std::size_t>(p.a), -1);
  // After the up-step the path descends from height a-1 to 0 through a
  // sub-paths, one per level, joined by single down-steps. The sub-path at
  // height level is stored in child slot `level`, so slot 0 holds the final
  // (height-0) sub-path.
  std::size_t pos = lo + 1;
  for (int level = p.a - 1; level >= 0; --level) {
    std::int64_t h = 0;  // height relative to `level`
    std::size_t cut = pos;
    while (cut < hi) {
      const std::int64_t next = h + (p.steps[cut] == PathStep::Up ? p.a - 1 : -1);
      if (next < 0) break;  // this down-step would drop below `level`
      h = next;
      ++cut;
    }
    t.children[static_cast<std::size_t>(id)][static_cast<std::size_t>(level)] =
        parse(p, pos, cut, t);
    pos = cut;
    if (level >= 1) {
      if (pos >= hi || p.steps[pos] != PathStep::Down)
        throw std::invalid_argument("dyck_to_tree: truncated path");
      ++pos;  // the joining down-step
    }
  }
  if (pos != hi) throw std::invalid_argument("dyck_to_tree: trailing steps");
  return id;
}

void emit(const AryTree& t, int id, LatticePath& out) {
  if (id < 0) return;
  out.steps.push_back(PathStep::Up);
  const auto& ch = t.children[static_cast<std::size_t>(id)];
  for (int level = t.a - 1; level >= 0; --level) {
    emit(t, ch[static_cast<std::size_t>(level)], out);
    if (level >= 1) out.steps.push_back(PathStep::Down);
  }
}

}  // namespace

AryTree dyck_to_tree(const LatticePath& p) {
  if (!is_generalized_dyck(p))
    throw std::invalid_argument("dyck_to_tree: path is not a generalized Dyck path");
  AryTree t;
  t.a = p.a;
  parse(p, 0, p.steps.size(), t);
  return t;
}

LatticePath tree_to_dyck(const AryTree& t) {
  LatticePath p;
  p.a = t.a;
  if (!t.children.empty()) emit(t, 0, p);
  return p;
}

}  // namespace pyra
