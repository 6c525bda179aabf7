#include "pyra/lego.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <stdexcept>

namespace pyra {

namespace {

bool overlap(int a, const Piece& p, const Piece& q) {
  return std::llabs(p.offset - q.offset) < a;
}

}  // namespace

bool flat_valid(int a, const std::vector<Piece>& ps, std::string* why) {
  auto fail = [&](const char* msg) {
    if (why) *why = msg;
    return false;
  };
  if (ps.empty()) return fail("empty structure");
  int min_level = ps[0].level;
  for (const Piece& p : ps) min_level = std::min(min_level, p.level);
  int lowest = 0;
  for (const Piece& p : ps)
    if (p.level == min_level) ++lowest;
  if (lowest != 1) return fail("lowest level must hold exactly one piece");
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      if (ps[i].level == ps[j].level && overlap(a, ps[i], ps[j]))
        return fail("same-level overlap");
      if (ps[i].level == ps[j].level && ps[i].offset == ps[j].offset)
        return fail("duplicate piece");
    }
  // Connectivity over |dlevel| = 1 overlaps.
  std::vector<char> seen(ps.size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < ps.size(); ++j) {
      if (seen[j]) continue;
      if (std::abs(ps[i].level - ps[j].level) == 1 && overlap(a, ps[i], ps[j])) {
        seen[j] = 1;
        stack.push_back(j);
      }
    }
  }
  for (char s : seen)
    if (!s) return fail("structure not connected");
  return true;
}

std::vector<Piece> flat_canonical(std::vector<Piece> ps) {
  int min_level = ps[0].level;
  for (const Piece& p : ps) min_level = std::min(min_level, p.level);
  std::int64_t bottom_off = 0;
  for (const Piece& p : ps)
    if (p.level == min_level) bottom_off = p.offset;
  for (Piece& p : ps) {
    p.offset -= bottom_off;
    p.level -= min_level - 1;
  }
  std::sort(ps.begin(), ps.end(), piece_less);
  return ps;
}

std::vector<Piece> flat_attachments(int a, const std::vector<Piece>& ps) {
  int min_level = ps[0].level;
  for (const Piece& p : ps) min_level = std::min(min_level, p.level);
  std::set<std::pair<int, std::int64_t>> cand;  // (level, offset)
  for (const Piece& p : ps)
    for (int dl : {-1, 1})
      for (std::int64_t off = p.offset - (a - 1); off <= p.offset + (a - 1); ++off)
        cand.insert({p.level + dl, off});
  std::vector<Piece> out;
  for (const auto& [level, off] : cand) {
    if (level == min_level) continue;  // second piece at the lowest level
    bool blocked = false;
    for (const Piece& p : ps)
      if (p.level == level && std::llabs(p.offset - off) < a) {
        blocked = true;
        break;
      }
    if (!blocked) out.push_back({off, level});
  }
  return out;
}

namespace {

using Key = std::vector<std::pair<int, std::int64_t>>;  // (level, offset) canonical

Key key_of(const std::vector<Piece>& canonical) {
  Key k;
  k.reserve(canonical.size());
  for (const Piece& p : canonical) k.emplace_back(p.level, p.offset);
  return k;
}

// Removal of which pieces keeps the structure valid?
bool removable(int a, const std::vector<Piece>& ps, std::size_t idx) {
  std::vector<Piece> rest;
  rest.reserve(ps.size() - 1);
  for (std::size_t i = 0; i < ps.size(); ++i)
    if (i != idx) rest.push_back(ps[i]);
  return rest.empty() ? false : flat_valid(a, rest);
}

// Canonical parent: remove the (level, offset)-largest removable piece.
Key parent_key(int a, const std::vector<Piece>& canonical) {
  for (std::size_t idx = canonical.size(); idx-- > 0;) {
    if (removable(a, canonical, idx)) {
      std::vector<Piece> rest;
      for (std::size_t i = 0; i < canonical.size(); ++i)
        if (i != idx) rest.push_back(canonical[i]);
      return key_of(flat_canonical(std::move(rest)));
    }
  }
  throw std::logic_error("flat structure with no removable piece");
}

// Distinct canonical children of `cur` whose canonical parent is `cur`.
std::vector<std::vector<Piece>> orderly_children(int a, const std::vector<Piece>& cur) {
  const Key self = key_of(cur);
  std::set<Key> seen;
  std::vector<std::vector<Piece>> out;
  for (const Piece& x : flat_attachments(a, cur)) {
    std::vector<Piece> grown = cur;
    grown.push_back(x);
    grown = flat_canonical(std::move(grown));
    Key k = key_of(grown);
    if (!seen.insert(std::move(k)).second) continue;
    if (parent_key(a, grown) == self) out.push_back(std::move(grown));
  }
  return out;
}

std::uint64_t orderly_count(int a, const std::vector<Piece>& cur, int target,
                            std::uint64_t cap, std::uint64_t& generated) {
  if (static_cast<int>(cur.size()) == target) return 1;
  std::uint64_t total = 0;
  for (const auto& child : orderly_children(a, cur)) {
    if (++generated > cap) throw BudgetExceeded("flat structure budget exceeded");
    total += orderly_count(a, child, target, cap, generated);
  }
  return total;
}

std::vector<Piece> flat_seed() { return {{0, 1}}; }

}  // namespace

BigInt count_flat_orderly(int a, int m, std::uint64_t cap) {
  if (a < 2) throw std::invalid_argument("piece length a must be >= 2");
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  std::uint64_t generated = 0;
  return BigInt(static_cast<unsigned long>(orderly_count(a, flat_seed(), m, cap, generated)));
}

BigInt count_flat_orderly_parallel(int a, int m, std::uint64_t cap) {
  if (a < 2) throw std::invalid_argument("piece length a must be >= 2");
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  const int depth = std::min(3, m);
  // Serial orderly expansion to the frontier depth, then parallel subtrees.
  std::vector<std::vector<Piece>> frontier{flat_seed()};
  std::uint64_t generated = 0;
  for (int size = 2; size <= depth; ++size) {
    std::vector<std::vector<Piece>> next;
    for (const auto& s : frontier)
      for (auto& child : orderly_children(a, s)) {
        if (++generated > cap) throw BudgetExceeded("flat structure budget exceeded");
        next.push_back(std::move(child));
      }
    frontier = std::move(next);
  }
  if (m == depth) return BigInt(static_cast<unsigned long>(frontier.size()));
  std::vector<std::uint64_t> counts(frontier.size(), 0);
  bool over_budget = false;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(frontier.size()); ++i) {
    try {
      std::uint64_t local_gen = 0;
      counts[static_cast<std::size_t>(i)] =
          orderly_count(a, frontier[static_cast<std::size_t>(i)], m, cap, local_gen);
    } catch (const BudgetExceeded&) {
      over_budget = true;
    }
  }
  if (over_budget) throw BudgetExceeded("flat structure budget exceeded");
  std::uint64_t total = 0;
  for (std::uint64_t c : counts) total += c;
  return BigInt(static_cast<unsigned long>(total));
}

BigInt count_flat_dedup(int a, int m, std::uint64_t cap) {
  if (a < 2) throw std::invalid_argument("piece length a must be >= 2");
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  std::set<Key> cur{key_of(flat_seed())};
  for (int size = 2; size <= m; ++size) {
    std::set<Key> next;
    for (const Key& k : cur) {
      std::vector<Piece> ps;
      ps.reserve(k.size());
      std::int64_t lo = 0, hi = 0;
      int top = 1;
      for (const auto& [level, off] : k) {
        ps.push_back({off, level});
        lo = std::min(lo, off);
        hi = std::max(hi, off);
        top = std::max(top, level);
      }
      // Bounding-box scan, validity decided from scratch.
      for (int level = 0; level <= top + 1; ++level)
        for (std::int64_t off = lo - (a - 1); off <= hi + (a - 1); ++off) {
          std::vector<Piece> grown = ps;
          grown.push_back({off, level});
          if (!flat_valid(a, grown)) continue;
          next.insert(key_of(flat_canonical(std::move(grown))));
          if (next.size() > cap) throw BudgetExceeded("flat structure budget exceeded");
        }
    }
    cur = std::move(next);
  }
  return BigInt(static_cast<unsigned long>(cur.size()));
}

std::vector<BigInt> flat_counts(int a, int m, std::uint64_t cap) {
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(m));
  for (int k = 1; k <= m; ++k) out.push_back(count_flat_orderly(a, k, cap));
  return out;
}

double growth_lower_bound(int a) {
  return to_double(growth_lower_bound_exact(a));
}

BigRat growth_lower_bound_exact(int a) {
  if (a < 2) throw std::invalid_argument("piece length a must be >= 2");
  BigRat r(pow_int(a, static_cast<unsigned long>(a)),
           pow_int(a - 1, static_cast<unsigned long>(a) - 1));
  r.canonicalize();
  return r;
}

double conjectured_growth(int a) {
  return 1.25 * growth_lower_bound(a);
}

BigRat klarner_coefficient(int a, int power) {
  const BigInt A = a;
  auto t = [&](const BigRat& c, int e) {
    BigRat r = c * BigRat(pow_int(A, static_cast<unsigned long>(e)));
    r.canonicalize();
    return r;
  };
  BigRat c;
  switch (power) {
    case 5:
      c = t(BigRat(1, 4), 9) + t(BigRat(-4, 5), 8) + t(BigRat(21, 8), 7) + t(BigRat(-3), 6) +
          t(BigRat(2), 5) + t(BigRat(-3, 4), 4) + t(BigRat(1, 8), 3);
      break;
    case 4:
      c = t(BigRat(-3), 8) + t(BigRat(77, 4), 7) + t(BigRat(-105, 2), 6) + t(BigRat(159, 2), 5) +
          t(BigRat(-73), 4) + t(BigRat(165, 4), 3) + t(BigRat(-27, 2), 2) + t(BigRat(2), 1);
      break;
    case 3:
      c = t(BigRat(-47, 8), 7) + t(BigRat(27), 6) + t(BigRat(-195, 4), 5) + t(BigRat(85, 2), 4) +
          t(BigRat(-135, 8), 3) + t(BigRat(3, 2), 2) + t(BigRat(1, 2), 1);
      break;
    case 2:
      c = t(BigRat(1), 6) + t(BigRat(-4), 5) + t(BigRat(6), 4) + t(BigRat(-4), 3) + t(BigRat(1), 2);
      break;
    default:
      throw std::invalid_argument("klarner_coefficient: power must be in 2..5");
  }
  c.canonicalize();
  return c;
}

KlarnerRoot klarner_depth1_bound(int a) {
  if (a < 2) throw std::invalid_argument("piece length a must be >= 2");
  // p(x) = x^2 q(x); search the cubic cofactor q.
  std::vector<BigRat> q(4);
  for (int p = 2; p <= 5; ++p) q[static_cast<std::size_t>(p - 2)] = klarner_coefficient(a, p);
  auto eval = [&](const BigRat& x) {
    BigRat v(0);
    for (std::size_t d = q.size(); d-- > 0;) {
      v = v * x + q[d];
      v.canonicalize();
    }
    return v;
  };

  int lead = 3;
  while (lead >= 0 && q[static_cast<std::size_t>(lead)] == 0) --lead;
  KlarnerRoot out;
  if (lead <= 0) {
    out.note = "degenerate cofactor (constant)";
    return out;
  }
  BigRat bound(1);
  for (int d = 0; d < lead; ++d) {
    BigRat ratio = abs(q[static_cast<std::size_t>(d)] / q[static_cast<std::size_t>(lead)]);
    if (cmp(ratio, bound) > 0) bound = ratio;
  }
  bound += 1;  // Cauchy bound on the roots of q

  const int grid = 4096;
  BigRat lo(0), hi(0);
  bool bracketed = false;
  BigRat prev_x(0);
  int prev_sign = sgn(eval(prev_x));
  for (int i = 1; i <= grid; ++i) {
    BigRat x = bound * BigRat(i, grid);
    x.canonicalize();
    const int s = sgn(eval(x));
    if (s == 0) {
      out.found = true;
      out.root = to_double(x);
      out.residual = 0.0;
      return out;
    }
    if (prev_sign != 0 && s != prev_sign) {
      lo = prev_x;
      hi = x;
      bracketed = true;  // keep the rightmost sign change
    }
    prev_x = x;
    prev_sign = s;
  }
  if (!bracketed) {
    out.note = "no sign change of the cubic cofactor in [0, " + std::to_string(to_double(bound)) +
               "]; only the double root x = 0 was found";
    return out;
  }

  auto scale = [&](const BigRat& x) {
    BigRat s(0), xp(1);
    for (std::size_t d = 0; d < q.size(); ++d) {
      s += abs(q[d]) * xp;
      xp *= x;
    }
    s.canonicalize();
    return s;
  };
  int sign_lo = sgn(eval(lo));
  for (int it = 0; it < 200; ++it) {
    BigRat mid = (lo + hi) / 2;
    mid.canonicalize();
    const BigRat v = eval(mid);
    const double rel = std::abs(to_double(v)) / to_double(scale(mid));
    if (v == 0 || rel < 1e-12) {
      out.found = true;
      out.root = to_double(mid);
      out.residual = rel;
      return out;
    }
    if (sgn(v) == sign_lo)
      lo = mid;
    else
      hi = mid;
  }
  out.found = true;
  out.root = to_double((lo + hi) / 2);
  const BigRat v = eval((lo + hi) / 2);
  out.residual = std::abs(to_double(v)) / to_double(scale((lo + hi) / 2));
  out.note = "bisection iteration cap reached";
  return out;
}

}  // namespace pyra
