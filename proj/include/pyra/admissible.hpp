#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pyra/strings.hpp"

namespace pyra {

// Factor alphabet of the unique walk decomposition:
//   P_ii(m): positive closed walk at level i (starts with a right-step)
//   N_ii(m): negative closed walk at level i (ends with a right-step)
//   T_ij:    straight run of i-j left-steps, 0 <= j < i <= a-2
//   U_ik:    deletion of k-i trailing left-steps of the preceding P, i < k
// A composition is admissible when the letter word only contains the
// neighbouring pairs PN, NP, PT, TP, NT, TN, PU, UN and the endpoint indices
// chain up.
enum class FactorType : unsigned char { P, N, T, U };

struct WalkFactor {
  FactorType type = FactorType::P;
  int i = 0;                // start index
  int j = 0;                // end index (== i for P/N)
  std::vector<Step> steps;  // P/N only

  int size_m(int a) const { return static_cast<int>(steps.size()) / a; }
  friend bool operator==(const WalkFactor&, const WalkFactor&) = default;
};

using AdmissibleComposition = std::vector<WalkFactor>;

/// Structural validation: pair rule, index chaining, factor shapes, and that
/// each U deletes steps its preceding P actually has.
bool composition_valid(int a, const AdmissibleComposition& c, std::string* why = nullptr);

/// Concatenates the factors (U deleting trailing left-steps). Throws
/// std::invalid_argument when composition_valid fails.
Walk compose_admissible(int a, const AdmissibleComposition& c);

/// The unique admissible composition of a walk from 0 to j, 0 <= j <= a-2.
/// Works right-to-left: a trailing right-step strips the maximal negative
/// factor; otherwise the suffix after the last right-step started below 0 is
/// peeled into T/P factors with a final U absorbing any overshoot.
/// Throws std::domain_error for endpoints outside [0, a-2] and
/// std::invalid_argument if the walk admits no admissible composition.
AdmissibleComposition factorize_walk(const Walk& w);

/// (r, sizes of the P/N factors in order); r is the total P/N count.
std::pair<int, std::vector<int>> composition_profile(int a, const AdmissibleComposition& c);

char factor_letter(FactorType t);

}  // namespace pyra
