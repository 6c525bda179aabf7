#include <doctest.h>

#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pyra/enumerate.hpp"
#include "pyra/lego.hpp"
#include "pyra/mc.hpp"
#include "pyra/series.hpp"

using namespace pyra;

// The OpenMP kernels must be bit-identical to their serial references, for
// any thread count.

namespace {

struct ThreadGuard {
#ifdef _OPENMP
  int saved = omp_get_max_threads();
  explicit ThreadGuard(int n) { omp_set_num_threads(n); }
  ~ThreadGuard() { omp_set_num_threads(saved); }
#else
  explicit ThreadGuard(int) {}
#endif
};

}  // namespace

TEST_CASE("convolution kernels agree exactly") {
  const std::vector<BigInt> B = series_B_from_A(3, series_A(3, 300));
  for (int threads : {1, 4}) {
    ThreadGuard guard(threads);
    CHECK(convolve(B, B, B.size()) == convolve_parallel(B, B, B.size()));
    CHECK(series_C(3, B) == series_C_parallel(3, B));
  }
}

TEST_CASE("bivariate kernels agree exactly") {
  for (int threads : {1, 4}) {
    ThreadGuard guard(threads);
    CHECK(series_B_bivariate(3, 40) == series_B_bivariate_parallel(3, 40));
    CHECK(series_B_bivariate(2, 60) == series_B_bivariate_parallel(2, 60));
  }
}

TEST_CASE("partitioned enumeration count equals the serial count") {
  for (int threads : {1, 4}) {
    ThreadGuard guard(threads);
    CHECK(count_pyramids_enumerated_parallel(2, 8, PyramidClass::general()) ==
          count_pyramids_enumerated(2, 8, PyramidClass::general()));
    CHECK(count_pyramids_enumerated_parallel(3, 5, PyramidClass::general()) ==
          count_pyramids_enumerated(3, 5, PyramidClass::general()));
    CHECK(count_pyramids_enumerated_parallel(2, 8, PyramidClass::general()) == count_B(2, 8));
  }
}

TEST_CASE("partitioned flat count equals the serial count") {
  for (int threads : {1, 4}) {
    ThreadGuard guard(threads);
    for (int m = 1; m <= 6; ++m)
      CHECK(count_flat_orderly_parallel(2, m) == count_flat_orderly(2, m));
    CHECK(count_flat_orderly_parallel(3, 4) == count_flat_orderly(3, 4));
  }
}

TEST_CASE("multi-seed MC is deterministic across thread counts") {
  const std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5, 6};
  GrowthEstimate base;
  {
    ThreadGuard guard(1);
    base = mc_estimate_multi(2, 7, 400, seeds, McMode::Pyramid);
  }
  {
    ThreadGuard guard(4);
    const GrowthEstimate par = mc_estimate_multi(2, 7, 400, seeds, McMode::Pyramid);
    CHECK(par.estimate == base.estimate);
    REQUIRE(par.stderr_of_mean.has_value());
    CHECK(*par.stderr_of_mean == *base.stderr_of_mean);
  }
}
