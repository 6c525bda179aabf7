#include "pyra/admissible.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace pyra {

char factor_letter(FactorType t) {
  switch (t) {
    case FactorType::P: return 'P';
    case FactorType::N: return 'N';
    case FactorType::T: return 'T';
    case FactorType::U: return 'U';
  }
  return '?';
}

namespace {

bool pair_allowed(FactorType x, FactorType y) {
  using F = FactorType;
  switch (x) {
    case F::P: return y == F::N || y == F::T || y == F::U;
    case F::N: return y == F::P || y == F::T;
    case F::T: return y == F::P || y == F::N;
    case F::U: return y == F::N;
  }
  return false;
}

bool closed_at(const std::vector<Step>& steps, int a, int level, bool below) {
  std::int64_t v = level;
  for (Step s : steps) {
    v += s == Step::Right ? a - 1 : -1;
    if (!below && v < level) return false;
    if (below && v > level) return false;
  }
  return v == level;
}

}  // namespace

bool composition_valid(int a, const AdmissibleComposition& c, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  for (std::size_t k = 0; k < c.size(); ++k) {
    const WalkFactor& f = c[k];
    const int lo = 0, hi = a - 2;
    switch (f.type) {
      case FactorType::P:
      case FactorType::N: {
        if (f.i != f.j || f.i < lo || f.i > hi) return fail("P/N factor needs i == j in [0,a-2]");
        if (f.steps.empty() || f.steps.size() % static_cast<std::size_t>(a) != 0)
          return fail("P/N factor needs m >= 1 (a*m steps)");
        const bool neg = f.type == FactorType::N;
        if (!closed_at(f.steps, a, f.i, neg))
          return fail(neg ? "N factor not a negative closed walk" : "P factor not a positive closed walk");
        break;
      }
      case FactorType::T:
        if (!(lo <= f.j && f.j < f.i && f.i <= hi)) return fail("T_ij needs 0 <= j < i <= a-2");
        break;
      case FactorType::U:
        if (!(lo <= f.i && f.i < f.j && f.j <= hi)) return fail("U_ik needs 0 <= i < k <= a-2");
        if (k == 0 || c[k - 1].type != FactorType::P) return fail("U must follow a P factor");
        break;
    }
    if (k > 0) {
      if (!pair_allowed(c[k - 1].type, f.type))
        return fail(std::string("forbidden pair ") + factor_letter(c[k - 1].type) + factor_letter(f.type));
      const int prev_end = c[k - 1].j;
      if (prev_end != f.i) return fail("endpoint indices do not chain");
    }
  }
  return true;
}

Walk compose_admissible(int a, const AdmissibleComposition& c) {
  std::string why;
  if (!composition_valid(a, c, &why))
    throw std::invalid_argument("inadmissible composition: " + why);
  Walk w;
  w.a = a;
  w.start = c.empty() ? 0 : c.front().i;
  for (const WalkFactor& f : c) {
    switch (f.type) {
      case FactorType::P:
      case FactorType::N:
        w.steps.insert(w.steps.end(), f.steps.begin(), f.steps.end());
        break;
      case FactorType::T:
        w.steps.insert(w.steps.end(), static_cast<std::size_t>(f.i - f.j), Step::Left);
        break;
      case FactorType::U: {
        const int del = f.j - f.i;
        for (int k = 0; k < del; ++k) {
          if (w.steps.empty() || w.steps.back() != Step::Left)
            throw std::invalid_argument("U factor must delete trailing left-steps");
          w.steps.pop_back();
        }
        break;
      }
    }
  }
  return w;
}

AdmissibleComposition factorize_walk(const Walk& w) {
  const int a = w.a;
  if (w.start != 0) throw std::domain_error("factorize_walk: walk must start at 0");
  {
    const std::int64_t e = w.end();
    if (e < 0 || e > a - 2) throw std::domain_error("factorize_walk: endpoint must lie in [0, a-2]");
  }

  // value[k] = site after k steps.
  std::vector<std::int64_t> value(w.steps.size() + 1, 0);
  for (std::size_t k = 0; k < w.steps.size(); ++k)
    value[k + 1] = value[k] + (w.steps[k] == Step::Right ? a - 1 : -1);

  std::deque<WalkFactor> acc;
  std::size_t n = w.steps.size();
  std::int64_t cur_end = value[n];

  auto sub = [&](std::size_t lo, std::size_t hi) {
    return std::vector<Step>(w.steps.begin() + static_cast<std::ptrdiff_t>(lo),
                             w.steps.begin() + static_cast<std::ptrdiff_t>(hi));
  };

  while (n > 0) {
    if (w.steps[n - 1] == Step::Right) {
      // Strip the maximal trailing negative factor N_{e,e}: the latest cut c
      // where the value equals e, the prior step is a left-step (or the walk
      // starts there), and the suffix stays <= e.
      std::int64_t suffix_max = value[n];
      std::size_t cut = n;
      bool found = false;
      for (std::size_t c = n; c-- > 0;) {
        suffix_max = std::max(suffix_max, value[c]);
        if (suffix_max > cur_end) break;
        if (value[c] == cur_end && (c == 0 || w.steps[c - 1] == Step::Left)) {
          cut = c;
          found = true;
          break;
        }
      }
      if (!found || cut == n)
        throw std::invalid_argument("factorize_walk: walk admits no admissible composition");
      WalkFactor f{FactorType::N, static_cast<int>(cur_end), static_cast<int>(cur_end), sub(cut, n)};
      acc.push_front(std::move(f));
      n = cut;
      continue;
    }

    // Trailing left-step. Locate the last right-step started at negative value.
    std::size_t alpha = n;
    for (std::size_t q = n; q-- > 0;) {
      if (w.steps[q] == Step::Right && value[q] < 0) {
        alpha = q;
        break;
      }
    }

    if (alpha == n) {
      // No such step: the remaining walk is non-negative. It is one P_00,
      // with a final U absorbing the overshoot when it ends above 0.
      WalkFactor p{FactorType::P, 0, 0, sub(0, n)};
      if (cur_end == 0) {
        acc.push_front(std::move(p));
      } else {
        p.steps.insert(p.steps.end(), static_cast<std::size_t>(cur_end), Step::Left);
        acc.push_front({FactorType::U, 0, static_cast<int>(cur_end), {}});
        acc.push_front(std::move(p));
      }
      n = 0;
      continue;
    }

    const std::int64_t j1 = value[alpha + 1];
    if (j1 < 0 || j1 > a - 2)
      throw std::invalid_argument("factorize_walk: walk admits no admissible composition");

    // Peel the suffix after alpha into T-runs and maximal P factors; a final
    // P may overshoot the endpoint, annihilated by a trailing U.
    std::vector<WalkFactor> local;
    std::size_t pos = alpha + 1;
    std::int64_t idx = j1;
    while (pos < n) {
      if (w.steps[pos] == Step::Left) {
        std::size_t run = pos;
        while (run < n && w.steps[run] == Step::Left) ++run;
        const std::int64_t down = static_cast<std::int64_t>(run - pos);
        if (idx - down < 0)
          throw std::invalid_argument("factorize_walk: walk admits no admissible composition");
        local.push_back({FactorType::T, static_cast<int>(idx), static_cast<int>(idx - down), {}});
        idx -= down;
        pos = run;
      } else {
        // Maximal P_{idx,idx}: extend until a left-step would drop below idx.
        std::int64_t v = idx;
        std::size_t e = pos;
        bool dipped = false;
        while (e < n) {
          if (w.steps[e] == Step::Left && v == idx) {
            dipped = true;
            break;
          }
          v += w.steps[e] == Step::Right ? a - 1 : -1;
          ++e;
        }
        if (dipped) {
          local.push_back({FactorType::P, static_cast<int>(idx), static_cast<int>(idx), sub(pos, e)});
          pos = e;
        } else if (v == idx && cur_end == idx) {
          local.push_back({FactorType::P, static_cast<int>(idx), static_cast<int>(idx), sub(pos, n)});
          pos = n;
        } else {
          // Overshoot: v == cur_end > idx. Append the missing left-steps to
          // the P and cancel them with U_{idx, cur_end}.
          if (v != cur_end || cur_end <= idx)
            throw std::invalid_argument("factorize_walk: walk admits no admissible composition");
          WalkFactor p{FactorType::P, static_cast<int>(idx), static_cast<int>(idx), sub(pos, n)};
          p.steps.insert(p.steps.end(), static_cast<std::size_t>(cur_end - idx), Step::Left);
          local.push_back(std::move(p));
          local.push_back({FactorType::U, static_cast<int>(idx), static_cast<int>(cur_end), {}});
          pos = n;
        }
      }
    }
    acc.insert(acc.begin(), local.begin(), local.end());
    n = alpha + 1;
    cur_end = j1;
  }

  AdmissibleComposition out(acc.begin(), acc.end());
  std::string why;
  if (!composition_valid(a, out, &why))
    throw std::invalid_argument("factorize_walk: internal factorization invalid: " + why);
  return out;
}

std::pair<int, std::vector<int>> composition_profile(int a, const AdmissibleComposition& c) {
  std::vector<int> sizes;
  for (const WalkFactor& f : c)
    if (f.type == FactorType::P || f.type == FactorType::N) sizes.push_back(f.size_m(a));
  return {static_cast<int>(sizes.size()), sizes};
}

}  // namespace pyra
