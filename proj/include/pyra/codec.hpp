#pragma once

#include <vector>

#include "pyra/heap.hpp"
#include "pyra/strings.hpp"

namespace pyra {

/// Greedy scan encoding a right-type pyramid of size m as the positive
/// (am,m)-string that rebuilds it: walking t_s, emit 1 whenever the piece of
/// p at offset t_s can be dropped next reproducing its level, else 0.
/// Throws std::invalid_argument if p is not right-type.
BitString right_pyramid_to_string(const Pyramid& p);

/// Inverse: for each x_s = 1 drop a piece at t_{s-1} (t_0 = 0). Requires a
/// positive string; throws std::invalid_argument otherwise.
Pyramid string_to_right_pyramid(const BitString& s);

// Dimer-case (a = 2) encoding of an arbitrary pyramid as the juxtaposition of
// its decomposition factors: odd factors as positive strings, even factors as
// reversed positive strings of their mirrors.
struct PyramidCode {
  BitString code;                  // the full (2m,m)-string, starts with 1
  std::vector<BitString> factors;  // the juxtaposed segments
};

/// a = 2 only (throws std::invalid_argument otherwise).
PyramidCode pyramid_to_code_a2(const Pyramid& p);

/// Inverse full codec: splits the string at the sign changes of its walk into
/// alternating non-negative / non-positive segments and rebuilds the factors.
/// Requires a = 2 and a (2m,m)-string starting with 1.
Pyramid code_to_pyramid_a2(const BitString& s);

/// The factor segmentation used by the full codec, without building heaps.
std::vector<BitString> split_code_a2(const BitString& s);

}  // namespace pyra
