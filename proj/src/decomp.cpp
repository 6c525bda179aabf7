#include "pyra/decomp.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace pyra {

namespace {

bool concurrent(int a, const Piece& p, const Piece& q) {
  return std::llabs(p.offset - q.offset) < a;
}

// Pieces forced to be dropped after `seed` (the upward closure of seed in the
// heap order), including seed itself.
std::vector<char> upward_closure(int a, const std::vector<Piece>& ps, std::size_t seed) {
  std::vector<char> in(ps.size(), 0);
  in[seed] = 1;
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t i = 0; i < ps.size(); ++i) {
      if (in[i]) continue;
      for (std::size_t j = 0; j < ps.size(); ++j) {
        if (in[j] && ps[i].level > ps[j].level && concurrent(a, ps[i], ps[j])) {
          in[i] = 1;
          grew = true;
          break;
        }
      }
    }
  }
  return in;
}

Pyramid normalize_part(int a, const std::vector<Piece>& ps) {
  int bottom_level = ps.front().level;
  for (const Piece& p : ps) bottom_level = std::min(bottom_level, p.level);
  std::int64_t bottom_off = 0;
  int bottoms = 0;
  for (const Piece& p : ps)
    if (p.level == bottom_level) {
      bottom_off = p.offset;
      ++bottoms;
    }
  if (bottoms != 1) throw std::logic_error("decompose: factor has two lowest pieces");
  return Pyramid(redrop(a, ps, -bottom_off));
}

}  // namespace

DecompSeq decompose(const Pyramid& p) {
  const int a = p.a();
  DecompSeq out;
  // `cur` always holds the remaining sub-pyramid in standalone form (levels
  // recomputed after each split; the split rule depends on them).
  std::vector<Piece> cur = p.heap().pieces();
  bool right = true;
  std::int64_t s = 0;
  while (true) {
    std::int64_t lo = cur[0].offset, hi = cur[0].offset;
    for (const Piece& q : cur) {
      lo = std::min(lo, q.offset);
      hi = std::max(hi, q.offset);
    }
    const bool final_part = right ? (lo == s) : (hi == s - a);
    if (final_part) {
      out.push_back({right, s, normalize_part(a, cur)});
      return out;
    }
    // Lowest piece protruding over the split line; unique at its level.
    std::size_t split = cur.size();
    for (std::size_t i = 0; i < cur.size(); ++i) {
      const bool protrudes = right ? (cur[i].offset < s) : (cur[i].offset > s - a);
      if (!protrudes) continue;
      if (split == cur.size() || cur[i].level < cur[split].level) split = i;
    }
    const std::vector<char> up = upward_closure(a, cur, split);
    std::vector<Piece> factor, rest;
    for (std::size_t i = 0; i < cur.size(); ++i)
      (up[i] ? rest : factor).push_back(cur[i]);
    out.push_back({right, s, normalize_part(a, factor)});
    const std::int64_t next_s = right ? cur[split].offset + a : cur[split].offset;
    cur = redrop(a, std::move(rest)).pieces();
    right = !right;
    s = next_s;
  }
}

bool decomp_seq_valid(int a, const DecompSeq& d, std::string* why) {
  auto fail = [&](const char* msg) {
    if (why) *why = msg;
    return false;
  };
  if (d.empty()) return fail("empty sequence");
  if (!d[0].right || d[0].s != 0) return fail("first factor must be a right 0-pyramid");
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i].part.a() != a) return fail("piece-length mismatch");
    if (d[i].right != (i % 2 == 0)) return fail("factors must alternate right/left");
    if (d[i].right && !d[i].part.is_right_type()) return fail("odd factor not right-type");
    if (!d[i].right && !d[i].part.is_left_type()) return fail("even factor not left-type");
    if (i == 0) continue;
    const std::int64_t gap = d[i - 1].right ? d[i].s - d[i - 1].s : d[i - 1].s - d[i].s;
    if (gap < 1 || gap > a - 1) return fail("offset step out of [1, a-1]");
  }
  return true;
}

Pyramid recompose(int a, const DecompSeq& d) {
  std::string why;
  if (!decomp_seq_valid(a, d, &why))
    throw std::invalid_argument("invalid decomposition sequence: " + why);
  Heap h(a);
  for (const DecompFactor& f : d) {
    const std::int64_t base = f.right ? f.s : f.s - a;
    for (const Piece& p : f.part.heap().pieces()) h.drop(p.offset + base);
  }
  return Pyramid(std::move(h));
}

}  // namespace pyra
