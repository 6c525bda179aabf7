#include "pyra/mc.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <unordered_map>

namespace pyra {

namespace {

std::uint32_t bit(std::size_t i) { return static_cast<std::uint32_t>(1u) << i; }

std::uint64_t linext_rec(const std::vector<std::uint32_t>& preds, std::uint32_t full,
                         std::uint32_t placed, std::unordered_map<std::uint32_t, std::uint64_t>& memo) {
  if (placed == full) return 1;
  auto it = memo.find(placed);
  if (it != memo.end()) return it->second;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < preds.size(); ++i) {
    const std::uint32_t b = bit(i);
    if ((placed & b) == 0 && (preds[i] & ~placed) == 0)
      total += linext_rec(preds, full, placed | b, memo);
  }
  memo[placed] = total;
  return total;
}

}  // namespace

std::uint64_t pyramid_order_count(const Pyramid& p) {
  const auto& ps = p.heap().pieces();
  if (ps.size() > 20) throw std::invalid_argument("pyramid_order_count: size must be <= 20");
  const int a = p.a();
  std::vector<std::uint32_t> preds(ps.size(), 0);
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = 0; j < ps.size(); ++j)
      if (ps[j].level < ps[i].level && std::llabs(ps[i].offset - ps[j].offset) < a)
        preds[i] |= bit(j);
  const std::uint32_t full = ps.size() == 32 ? ~0u : bit(ps.size()) - 1;
  std::unordered_map<std::uint32_t, std::uint64_t> memo;
  return linext_rec(preds, full, 0, memo);
}

namespace {

bool flat_subset_valid(int a, const std::vector<Piece>& ps, std::uint32_t mask) {
  // Unique lowest piece and connectivity; same-level overlaps cannot appear
  // in a subset of a valid structure.
  int min_level = 0;
  bool first = true;
  for (std::size_t i = 0; i < ps.size(); ++i)
    if (mask & bit(i)) {
      if (first || ps[i].level < min_level) min_level = ps[i].level;
      first = false;
    }
  int lowest = 0;
  for (std::size_t i = 0; i < ps.size(); ++i)
    if ((mask & bit(i)) && ps[i].level == min_level) ++lowest;
  if (lowest != 1) return false;
  const std::uint32_t low = mask & ~(mask - 1);  // lowest set bit
  std::uint32_t seen = low;
  std::vector<std::size_t> work;
  for (std::size_t i = 0; i < ps.size(); ++i)
    if (low & bit(i)) work.push_back(i);
  while (!work.empty()) {
    const std::size_t i = work.back();
    work.pop_back();
    for (std::size_t j = 0; j < ps.size(); ++j) {
      if (!(mask & bit(j)) || (seen & bit(j))) continue;
      if (std::abs(ps[i].level - ps[j].level) == 1 && std::llabs(ps[i].offset - ps[j].offset) < a) {
        seen |= bit(j);
        work.push_back(j);
      }
    }
  }
  return seen == mask;
}

std::uint64_t flat_orders_rec(int a, const std::vector<Piece>& ps, std::uint32_t mask,
                              std::unordered_map<std::uint32_t, std::uint64_t>& memo) {
  if ((mask & (mask - 1)) == 0) return 1;  // a single piece
  auto it = memo.find(mask);
  if (it != memo.end()) return it->second;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < ps.size(); ++i) {
    const std::uint32_t b = bit(i);
    if (!(mask & b)) continue;
    const std::uint32_t rest = mask & ~b;
    if (flat_subset_valid(a, ps, rest)) total += flat_orders_rec(a, ps, rest, memo);
  }
  memo[mask] = total;
  return total;
}

}  // namespace

std::uint64_t flat_order_count(int a, const std::vector<Piece>& canonical) {
  if (canonical.size() > 20) throw std::invalid_argument("flat_order_count: size must be <= 20");
  const std::uint32_t full =
      canonical.size() == 32 ? ~0u : bit(canonical.size()) - 1;
  std::unordered_map<std::uint32_t, std::uint64_t> memo;
  return flat_orders_rec(a, canonical, full, memo);
}

GrowthEstimate mc_estimate(int a, int m, std::uint64_t samples, std::uint64_t seed, McMode mode,
                           int correction_max_m) {
  if (a < 2) throw std::invalid_argument("piece length a must be >= 2");
  if (m < 1 || samples < 1) throw std::invalid_argument("need m >= 1 and samples >= 1");
  const bool correct = m <= correction_max_m;
  if (mode == McMode::Pyramid && !correct)
    throw std::invalid_argument("pyramid mode requires the exact correction (m <= " +
                                std::to_string(correction_max_m) + ")");
  SplitMix64 rng(seed);
  double sum = 0.0, sumsq = 0.0;
  for (std::uint64_t s = 0; s < samples; ++s) {
    double weight = 1.0;
    if (mode == McMode::Pyramid) {
      Heap h(a);
      h.drop(0);
      std::int64_t lo = 0, hi = 0;
      for (int k = 1; k < m; ++k) {
        const std::uint64_t choices = static_cast<std::uint64_t>(hi - lo) + 2 * a - 1;
        const std::int64_t off = lo - (a - 1) + static_cast<std::int64_t>(rng.below(choices));
        h.drop(off);
        weight *= static_cast<double>(choices);
        lo = std::min(lo, off);
        hi = std::max(hi, off);
      }
      if (correct) weight /= static_cast<double>(pyramid_order_count(Pyramid(std::move(h))));
    } else {
      std::vector<Piece> ps{{0, 1}};
      for (int k = 1; k < m; ++k) {
        const std::vector<Piece> options = flat_attachments(a, ps);
        weight *= static_cast<double>(options.size());
        ps.push_back(options[rng.below(options.size())]);
      }
      if (correct) weight /= static_cast<double>(flat_order_count(a, flat_canonical(ps)));
    }
    sum += weight;
    sumsq += weight * weight;
  }
  GrowthEstimate e;
  e.samples = samples;
  e.seed = seed;
  e.m = m;
  e.mode = mode;
  e.corrected = correct;
  const double n = static_cast<double>(samples);
  e.estimate = sum / n;
  if (samples > 1) {
    const double var = std::max(0.0, (sumsq - sum * sum / n) / (n - 1.0));
    e.stderr_of_mean = std::sqrt(var / n);
  }
  return e;
}

GrowthEstimate mc_estimate_multi(int a, int m, std::uint64_t samples_per_seed,
                                 const std::vector<std::uint64_t>& seeds, McMode mode,
                                 int correction_max_m) {
  if (seeds.empty()) throw std::invalid_argument("need at least one seed");
  std::vector<GrowthEstimate> per(seeds.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(seeds.size()); ++i)
    per[static_cast<std::size_t>(i)] = mc_estimate(a, m, samples_per_seed,
                                                   seeds[static_cast<std::size_t>(i)], mode,
                                                   correction_max_m);
  GrowthEstimate e;
  e.samples = samples_per_seed * seeds.size();
  e.seed = seeds.front();
  e.m = m;
  e.mode = mode;
  e.corrected = per.front().corrected;
  double sum = 0.0, sumsq = 0.0;
  for (const GrowthEstimate& g : per) {
    sum += g.estimate;
    sumsq += g.estimate * g.estimate;
  }
  const double n = static_cast<double>(seeds.size());
  e.estimate = sum / n;
  if (seeds.size() > 1) {
    const double var = std::max(0.0, (sumsq - sum * sum / n) / (n - 1.0));
    e.stderr_of_mean = std::sqrt(var / n);
  }
  return e;
}

GrowthFit fit_growth(const std::vector<std::pair<std::int64_t, double>>& ln_points) {
  if (ln_points.size() < 4) throw std::invalid_argument("fit_growth: need at least 4 points");
  // Normal equations for basis {1, n, ln n}.
  long double M[3][3] = {};
  long double rhs[3] = {};
  for (const auto& [n, lnc] : ln_points) {
    if (n < 1) throw std::invalid_argument("fit_growth: indices must be >= 1");
    const long double x[3] = {1.0L, static_cast<long double>(n),
                              std::log(static_cast<long double>(n))};
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) M[i][j] += x[i] * x[j];
      rhs[i] += x[i] * static_cast<long double>(lnc);
    }
  }
  const auto det3 = [](const long double m[3][3]) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  };
  const long double det = det3(M);
  long double scale = 0.0L;
  for (auto& row : M)
    for (long double v : row) scale = std::max(scale, std::abs(v));
  if (std::abs(det) <= 1e-12L * scale * scale * scale)
    throw std::invalid_argument("fit_growth: singular design matrix (collinear inputs)");
  long double sol[3];
  for (int k = 0; k < 3; ++k) {
    long double Mk[3][3];
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) Mk[i][j] = j == k ? rhs[i] : M[i][j];
    sol[k] = det3(Mk) / det;
  }
  GrowthFit f;
  f.amplitude = static_cast<double>(std::exp(sol[0]));
  f.growth = static_cast<double>(std::exp(sol[1]));
  f.exponent = static_cast<double>(sol[2]);
  return f;
}

GrowthFit fit_growth_counts(const std::vector<std::pair<std::int64_t, BigInt>>& counts) {
  std::vector<std::pair<std::int64_t, double>> pts;
  pts.reserve(counts.size());
  for (const auto& [n, c] : counts) pts.emplace_back(n, ln_big(c));
  return fit_growth(pts);
}

std::vector<Section5Row> section5_report(int a_lo, int a_hi, int mc_m, std::uint64_t mc_samples,
                                         std::uint64_t seed) {
  std::vector<Section5Row> rows;
  for (int a = a_lo; a <= a_hi; ++a) {
    Section5Row row;
    row.a = a;
    row.lower_bound_exact = growth_lower_bound_exact(a);
    row.lower_bound = growth_lower_bound(a);
    row.klarner = klarner_depth1_bound(a);
    row.conjecture = conjectured_growth(a);
    if (mc_m >= 1 && mc_samples >= 1) {
      row.mc = mc_estimate(a, mc_m, mc_samples, seed, McMode::Flat);
      if (row.mc->estimate > 0)
        row.implied_k = std::exp(std::log(row.mc->estimate) / mc_m) / row.lower_bound;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace pyra
