// Timing harness for the OpenMP kernels against their serial references.
// Every pair must produce identical results; the table reports both times.
//
// Usage: pyra-bench [--quick]

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pyra/enumerate.hpp"
#include "pyra/lego.hpp"
#include "pyra/mc.hpp"
#include "pyra/series.hpp"

using namespace pyra;

namespace {

double time_of(const std::function<void()>& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void row(const char* name, double serial, double parallel, bool equal) {
  std::printf("%-36s %9.3fs %9.3fs %7.2fx  %s\n", name, serial, parallel,
              parallel > 0 ? serial / parallel : 0.0, equal ? "identical" : "MISMATCH");
  std::fflush(stdout);
}

}  // namespace

int main(int argc, char** argv) {
  const bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif
  std::printf("%-36s %10s %10s %8s\n", "kernel", "serial", "parallel", "speedup");

  int mismatches = 0;

  {
    const int M = quick ? 400 : 1400;
    const std::vector<BigInt> B = series_B_from_A(2, series_A(2, M));
    std::vector<BigInt> c1, c2;
    const double ts = time_of([&] { c1 = series_C(2, B); });
    const double tp = time_of([&] { c2 = series_C_parallel(2, B); });
    row(("series C convolution a=2 M=" + std::to_string(M)).c_str(), ts, tp, c1 == c2);
    mismatches += c1 != c2;
  }

  {
    const int M = quick ? 40 : 120;
    std::vector<std::vector<BigInt>> b1, b2;
    const double ts = time_of([&] { b1 = series_B_bivariate(3, M); });
    const double tp = time_of([&] { b2 = series_B_bivariate_parallel(3, M); });
    row(("bivariate width table a=3 M=" + std::to_string(M)).c_str(), ts, tp, b1 == b2);
    mismatches += b1 != b2;
  }

  {
    const int m = quick ? 8 : 11;
    BigInt n1, n2;
    const double ts = time_of([&] { n1 = count_pyramids_enumerated(2, m, PyramidClass::general()); });
    const double tp =
        time_of([&] { n2 = count_pyramids_enumerated_parallel(2, m, PyramidClass::general()); });
    row(("pyramid enumeration a=2 m=" + std::to_string(m)).c_str(), ts, tp, n1 == n2);
    mismatches += n1 != n2;
  }

  {
    const int m = quick ? 6 : 8;
    BigInt n1, n2;
    const double ts = time_of([&] { n1 = count_flat_orderly(2, m); });
    const double tp = time_of([&] { n2 = count_flat_orderly_parallel(2, m); });
    row(("flat orderly generation a=2 m=" + std::to_string(m)).c_str(), ts, tp, n1 == n2);
    mismatches += n1 != n2;
  }

  {
    const int m = quick ? 8 : 12;
    const std::uint64_t samples = quick ? 2000 : 20000;
    std::vector<std::uint64_t> seeds;
    for (std::uint64_t s = 1; s <= 8; ++s) seeds.push_back(s);
    GrowthEstimate e1, e2;
    double ts = 0, tp = 0;
    {
#ifdef _OPENMP
      const int saved = omp_get_max_threads();
      omp_set_num_threads(1);
      ts = time_of([&] { e1 = mc_estimate_multi(2, m, samples, seeds, McMode::Pyramid); });
      omp_set_num_threads(saved);
#else
      ts = time_of([&] { e1 = mc_estimate_multi(2, m, samples, seeds, McMode::Pyramid); });
#endif
      tp = time_of([&] { e2 = mc_estimate_multi(2, m, samples, seeds, McMode::Pyramid); });
    }
    const bool equal = e1.estimate == e2.estimate;
    row(("Monte Carlo 8 seeds a=2 m=" + std::to_string(m)).c_str(), ts, tp, equal);
    mismatches += !equal;
  }

  if (mismatches) std::printf("%d kernel(s) disagreed with the serial reference\n", mismatches);
  return mismatches ? 1 : 0;
}
