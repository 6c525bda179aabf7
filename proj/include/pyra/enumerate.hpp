#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "pyra/bigint.hpp"
#include "pyra/heap.hpp"

namespace pyra {

struct EnumOptions {
  // Refuse runs whose predicted output count exceeds this cap.
  BigInt count_cap = BigInt(100000000);
};

/// Enumerates every pyramid of the class exactly once, in a deterministic
/// order, each emitted in normalized form (bottom piece over ]0,a[):
///   Right: right-type pyramids, ordered by their positive-string code
///          ('1' before '0', so 111000 comes first);
///   Left:  mirrors of the Right stream, same order;
///   General: lexicographic in the decomposition encoding (first factor size
///          ascending, then its code, offset step, and so on recursively).
/// An s-translate of the class is the same stream shifted by s.
/// Throws BudgetExceeded when the predicted count exceeds opts.count_cap.
void for_each_pyramid(int a, int m, PyramidClass cls,
                      const std::function<void(const Pyramid&)>& fn,
                      const EnumOptions& opts = {});

std::vector<Pyramid> all_pyramids(int a, int m, PyramidClass cls, const EnumOptions& opts = {});

/// Serial enumeration count (actually constructs every pyramid).
BigInt count_pyramids_enumerated(int a, int m, PyramidClass cls, const EnumOptions& opts = {});

/// Same count, search partitioned over the size of the first decomposition
/// factor and run with OpenMP; exact-equal to the serial count.
BigInt count_pyramids_enumerated_parallel(int a, int m, PyramidClass cls,
                                          const EnumOptions& opts = {});

/// Independent oracle: depth-first search over all drop sequences that keep
/// the heap a pyramid, deduplicating final heaps by piece set. Throws
/// BudgetExceeded when more than node_budget drops would be explored.
BigInt count_pyramids_bruteforce(int a, int m, std::uint64_t node_budget = 200000000);
std::vector<Pyramid> bruteforce_pyramids(int a, int m, std::uint64_t node_budget = 200000000);

}  // namespace pyra
