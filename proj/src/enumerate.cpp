#include "pyra/enumerate.hpp"

#include <set>
#include <stdexcept>
#include <utility>

#include "pyra/codec.hpp"
#include "pyra/decomp.hpp"
#include "pyra/series.hpp"
#include "pyra/strings.hpp"

namespace pyra {

namespace {

// Right-type pyramids of each size 1..m, in positive-string order.
std::vector<std::vector<Pyramid>> right_factors(int a, int m) {
  std::vector<std::vector<Pyramid>> out(static_cast<std::size_t>(m) + 1);
  for (int k = 1; k <= m; ++k)
    for_each_positive_string(a, k, [&](const BitString& s) {
      out[static_cast<std::size_t>(k)].push_back(string_to_right_pyramid(s));
    });
  return out;
}

// Generates general pyramids factor by factor over the alternating
// decomposition; deterministic order, no duplicates (the decomposition is a
// bijection).
struct GeneralEnumerator {
  int a = 2;
  const std::vector<std::vector<Pyramid>>* rights = nullptr;
  const std::vector<std::vector<Pyramid>>* lefts = nullptr;
  const std::function<void(const Pyramid&)>* fn = nullptr;
  int first_size_filter = 0;  // when > 0, restrict |p_1| to this value

  DecompSeq seq;

  void run(int remaining, std::int64_t s, bool right) {
    const bool is_first = seq.empty();
    const int k_lo = is_first && first_size_filter > 0 ? first_size_filter : 1;
    const int k_hi = is_first && first_size_filter > 0 ? first_size_filter : remaining;
    for (int k = k_lo; k <= k_hi; ++k) {
      const auto& pool = (right ? *rights : *lefts)[static_cast<std::size_t>(k)];
      const bool last = k == remaining;
      for (const Pyramid& part : pool) {
        seq.push_back({right, s, part});
        if (last) {
          (*fn)(recompose(a, seq));
        } else {
          for (int d = 1; d <= a - 1; ++d)
            run(remaining - k, right ? s + d : s - d, !right);
        }
        seq.pop_back();
      }
    }
  }
};

}  // namespace

void for_each_pyramid(int a, int m, PyramidClass cls,
                      const std::function<void(const Pyramid&)>& fn, const EnumOptions& opts) {
  if (a < 2) throw std::invalid_argument("piece length a must be >= 2");
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  const BigInt predicted = cls.kind == PyramidKind::General ? count_B(a, m) : count_A(a, m);
  if (predicted > opts.count_cap)
    throw BudgetExceeded("enumeration count " + predicted.get_str() + " exceeds cap " +
                         opts.count_cap.get_str());

  if (cls.kind == PyramidKind::Right || cls.kind == PyramidKind::Left) {
    const bool mirror = cls.kind == PyramidKind::Left;
    for_each_positive_string(a, m, [&](const BitString& s) {
      Pyramid p = string_to_right_pyramid(s);
      fn(mirror ? p.mirrored() : p);
    });
    return;
  }

  const std::vector<std::vector<Pyramid>> rights = right_factors(a, m);
  std::vector<std::vector<Pyramid>> lefts(rights.size());
  for (std::size_t k = 1; k < rights.size(); ++k)
    for (const Pyramid& p : rights[k]) lefts[k].push_back(p.mirrored());

  GeneralEnumerator e;
  e.a = a;
  e.rights = &rights;
  e.lefts = &lefts;
  e.fn = &fn;
  e.run(m, 0, true);
}

std::vector<Pyramid> all_pyramids(int a, int m, PyramidClass cls, const EnumOptions& opts) {
  std::vector<Pyramid> out;
  for_each_pyramid(a, m, cls, [&](const Pyramid& p) { out.push_back(p); }, opts);
  return out;
}

BigInt count_pyramids_enumerated(int a, int m, PyramidClass cls, const EnumOptions& opts) {
  std::uint64_t n = 0;
  for_each_pyramid(a, m, cls, [&](const Pyramid&) { ++n; }, opts);
  return BigInt(static_cast<unsigned long>(n));
}

BigInt count_pyramids_enumerated_parallel(int a, int m, PyramidClass cls,
                                          const EnumOptions& opts) {
  if (cls.kind != PyramidKind::General || m == 1)
    return count_pyramids_enumerated(a, m, cls, opts);
  const BigInt predicted = count_B(a, m);
  if (predicted > opts.count_cap)
    throw BudgetExceeded("enumeration count " + predicted.get_str() + " exceeds cap " +
                         opts.count_cap.get_str());

  const std::vector<std::vector<Pyramid>> rights = right_factors(a, m);
  std::vector<std::vector<Pyramid>> lefts(rights.size());
  for (std::size_t k = 1; k < rights.size(); ++k)
    for (const Pyramid& p : rights[k]) lefts[k].push_back(p.mirrored());

  std::vector<std::uint64_t> counts(static_cast<std::size_t>(m) + 1, 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
  for (int first = 1; first <= m; ++first) {
    std::uint64_t n = 0;
    std::function<void(const Pyramid&)> fn = [&](const Pyramid&) { ++n; };
    GeneralEnumerator e;
    e.a = a;
    e.rights = &rights;
    e.lefts = &lefts;
    e.fn = &fn;
    e.first_size_filter = first;
    e.run(m, 0, true);
    counts[static_cast<std::size_t>(first)] = n;
  }
  BigInt total = 0;
  for (std::uint64_t c : counts) total += BigInt(static_cast<unsigned long>(c));
  return total;
}

namespace {

struct BruteState {
  int a;
  int m;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  std::set<std::vector<std::pair<std::int64_t, int>>> seen;

  void dfs(const Heap& h) {
    if (h.size() == static_cast<std::size_t>(m)) {
      std::vector<std::pair<std::int64_t, int>> key;
      key.reserve(h.size());
      for (const Piece& p : h.pieces()) key.emplace_back(p.offset, p.level);
      seen.insert(std::move(key));
      return;
    }
    // Any offset in this window overlaps the heap (its projection is an
    // interval), so the next piece lands above level 1 and the heap stays a
    // pyramid; anything outside would create a second bottom piece.
    const std::int64_t lo = h.min_offset() - (a - 1);
    const std::int64_t hi = h.max_offset() + (a - 1);
    for (std::int64_t o = lo; o <= hi; ++o) {
      if (++nodes > budget) throw BudgetExceeded("bruteforce enumeration node budget exceeded");
      dfs(h.dropped(o));
    }
  }
};

BruteState brute_run(int a, int m, std::uint64_t node_budget) {
  if (a < 2) throw std::invalid_argument("piece length a must be >= 2");
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  BruteState st{a, m, node_budget, 0, {}};
  Heap h(a);
  h.drop(0);
  st.dfs(h);
  return st;
}

}  // namespace

std::vector<Pyramid> bruteforce_pyramids(int a, int m, std::uint64_t node_budget) {
  BruteState st = brute_run(a, m, node_budget);
  std::vector<Pyramid> out;
  out.reserve(st.seen.size());
  for (const auto& key : st.seen) {
    std::vector<Piece> ps;
    ps.reserve(key.size());
    for (const auto& [off, lvl] : key) ps.push_back({off, lvl});
    out.push_back(Pyramid(redrop(a, std::move(ps))));
  }
  return out;
}

BigInt count_pyramids_bruteforce(int a, int m, std::uint64_t node_budget) {
  return BigInt(static_cast<unsigned long>(brute_run(a, m, node_budget).seen.size()));
}

}  // namespace pyra
