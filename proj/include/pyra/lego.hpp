#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pyra/bigint.hpp"
#include "pyra/heap.hpp"

namespace pyra {

// Flat structures: connected assemblies of 1 x a pieces in one plane, unique
// piece at the lowest level, pieces may hang below higher pieces. Canonical
// form: the lowest piece sits at (offset 0, level 1).

/// Same-level overlaps, connectivity through |dlevel| = 1 overlaps, unique
/// lowest piece.
bool flat_valid(int a, const std::vector<Piece>& pieces, std::string* why = nullptr);

/// Translates so the unique lowest piece is at (0,1) and sorts by
/// (level, offset).
std::vector<Piece> flat_canonical(std::vector<Piece> pieces);

/// All positions where one more piece can be clipped on, canonical order.
std::vector<Piece> flat_attachments(int a, const std::vector<Piece>& pieces);

/// L^a_m by orderly generation: a child is kept only when removing its
/// canonically largest removable piece gives back the parent. Throws
/// BudgetExceeded past `cap` generated structures.
BigInt count_flat_orderly(int a, int m, std::uint64_t cap = 50000000);

/// Same search partitioned over an orderly frontier and run with OpenMP.
BigInt count_flat_orderly_parallel(int a, int m, std::uint64_t cap = 50000000);

/// Independent oracle: breadth-first growth with global canonical-form
/// deduplication; candidate positions come from a bounding-box scan checked
/// by flat_valid rather than the orderly move generator.
BigInt count_flat_dedup(int a, int m, std::uint64_t cap = 50000000);

/// L^a_1 .. L^a_m by the orderly generator.
std::vector<BigInt> flat_counts(int a, int m, std::uint64_t cap = 50000000);

/// a^a / (a-1)^{a-1}, the pyramid-based lower bound for the growth constant.
double growth_lower_bound(int a);
BigRat growth_lower_bound_exact(int a);

/// The speculative closed form 5 a^a / (4 (a-1)^{a-1}).
double conjectured_growth(int a);

// Largest real root of the depth-1 polynomial
//   c5(a) x^5 + c4(a) x^4 + c3(a) x^3 + c2(a) x^2,
// coefficients typed exactly as printed (x = 0 is always a double root; the
// search runs over the cubic cofactor).
struct KlarnerRoot {
  bool found = false;
  double root = 0.0;
  double residual = 0.0;  // |p(root)| / sum_i |c_i| root^i
  std::string note;
};

/// Exact rational coefficient of x^power (power in 2..5) at integer a.
BigRat klarner_coefficient(int a, int power);

/// Sign-bracketing on an exact-rational grid plus bisection to relative
/// residual 1e-12. Reports found = false when no sign change exists in the
/// bracket (never clamps).
KlarnerRoot klarner_depth1_bound(int a);

}  // namespace pyra
