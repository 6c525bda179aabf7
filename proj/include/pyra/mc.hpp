#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pyra/bigint.hpp"
#include "pyra/heap.hpp"
#include "pyra/lego.hpp"

namespace pyra {

// Small splittable generator (splitmix64); explicit 64-bit seed, bit-exact
// across platforms.
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform draw from [0, n) by rejection; deterministic for a given state.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return v % n;
  }
};

/// Number of drop orders building the pyramid (linear extensions of its heap
/// order). Exact in 64 bits for size <= 20 (throws std::invalid_argument
/// beyond).
std::uint64_t pyramid_order_count(const Pyramid& p);

/// Number of attachment orders building the flat structure from any of its
/// pieces, every prefix valid. Size <= 20.
std::uint64_t flat_order_count(int a, const std::vector<Piece>& canonical);

enum class McMode { Pyramid, Flat };

struct GrowthEstimate {
  double estimate = 0.0;
  std::optional<double> stderr_of_mean;  // unavailable for samples == 1
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  int m = 0;
  McMode mode = McMode::Pyramid;
  // True when the sequence-count sample weights were divided by the exact
  // per-sample multiplicity; false means the estimate targets the number of
  // build sequences, which overcounts structures.
  bool corrected = true;
};

/// Rosenbluth-style sequential growth: m-1 uniformly random admissible
/// attachments, sample weight = product of choice counts. The weight is an
/// unbiased estimator of the number of build sequences; dividing each sample
/// by its exact order count makes it an unbiased estimator of B_m
/// (Pyramid) or L^a_m (Flat). The correction runs while m <= correction_max_m
/// (order counting is exponential in m); beyond that the raw sequence-count
/// estimate is returned with corrected = false.
GrowthEstimate mc_estimate(int a, int m, std::uint64_t samples, std::uint64_t seed, McMode mode,
                           int correction_max_m = 20);

/// One mc_estimate per seed (OpenMP across seeds, per-seed streams), combined
/// as the mean of per-seed means with the standard error of that mean.
GrowthEstimate mc_estimate_multi(int a, int m, std::uint64_t samples_per_seed,
                                 const std::vector<std::uint64_t>& seeds, McMode mode,
                                 int correction_max_m = 20);

struct GrowthFit {
  double amplitude = 0.0;  // A
  double growth = 0.0;     // H
  double exponent = 0.0;   // C
};

/// Least squares for ln c_n = ln A + n ln H + C ln n over the given
/// (n, ln c_n) points; needs >= 4 points and a nonsingular design (throws
/// std::invalid_argument otherwise).
GrowthFit fit_growth(const std::vector<std::pair<std::int64_t, double>>& ln_points);
GrowthFit fit_growth_counts(const std::vector<std::pair<std::int64_t, BigInt>>& counts);

struct Section5Row {
  int a = 2;
  BigRat lower_bound_exact;
  double lower_bound = 0.0;
  KlarnerRoot klarner;
  double conjecture = 0.0;
  std::optional<GrowthEstimate> mc;
  std::optional<double> implied_k;  // mc estimate^{1/m} ... see report docs
};

/// One row per a: bounds, depth-1 root, conjectured value, and optionally a
/// Monte Carlo estimate of L^a_m with the implied ratio to the lower bound.
std::vector<Section5Row> section5_report(int a_lo, int a_hi, int mc_m = 0,
                                         std::uint64_t mc_samples = 0, std::uint64_t seed = 1);

}  // namespace pyra
