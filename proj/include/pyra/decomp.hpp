#pragma once

#include <cstdint>
#include <vector>

#include "pyra/heap.hpp"

namespace pyra {

// One factor of the alternating right/left decomposition of a pyramid.
// Odd factors (index 1,3,...) are right s-pyramids, even factors left
// s-pyramids; the stored sub-pyramid is normalized (bottom over ]0,a[).
// A right factor sits with its bottom at offset s, a left factor with its
// bottom at offset s - a.
struct DecompFactor {
  bool right = true;
  std::int64_t s = 0;
  Pyramid part;
};

using DecompSeq = std::vector<DecompFactor>;

/// Splits a pyramid into its unique alternating sequence of right/left
/// s_i-pyramids with s_1 = 0 and 1 <= |s_{i+1} - s_i| <= a-1.
DecompSeq decompose(const Pyramid& p);

/// Inverse of decompose. Throws std::invalid_argument on sequences violating
/// the parity/offset constraints.
Pyramid recompose(int a, const DecompSeq& d);

/// Checks the DecompSeq invariants without recomposing.
bool decomp_seq_valid(int a, const DecompSeq& d, std::string* why = nullptr);

}  // namespace pyra
