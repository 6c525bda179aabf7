#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pyra/enumerate.hpp"
#include "pyra/strings.hpp"

namespace pyra {

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string detail;
};

/// Counts every admissible composition that composes to w, by left-to-right
/// search over all factor cuts. Independent of factorize_walk (used to
/// certify its uniqueness claim). Throws BudgetExceeded past node_budget
/// search steps.
std::uint64_t count_all_factorizations(const Walk& w, std::uint64_t node_budget = 10000000);

/// All length-n bit strings with m ones (optionally forced to start with 1),
/// lexicographic with '1' first.
void for_each_string(int a, int n, int m, bool leading_one,
                     const std::function<void(const BitString&)>& fn);

// Named property suites (the cli `verify` surface). Each entry is one
// checked statement with a human-readable detail line.
std::vector<CheckResult> verify_theorem1(int a, int m_max, const EnumOptions& opts = {});
std::vector<CheckResult> verify_fuss_catalan(int a, int m_max, const EnumOptions& opts = {});
std::vector<CheckResult> verify_roundtrips(int a, int m_max);
std::vector<CheckResult> verify_factorization(int a, int len_max);
std::vector<CheckResult> verify_transfer(int a_lo, int a_hi, int r_max);
std::vector<CheckResult> verify_series(int a, int order, int composition_m);
std::vector<CheckResult> verify_widths(int a, int m_max);
std::vector<CheckResult> verify_width_asymptote(int a, int m, double rel_tol);
std::vector<CheckResult> verify_lego(int a, int m_max);
std::vector<CheckResult> verify_mc(int a, int m, int n_seeds, std::uint64_t samples);

}  // namespace pyra
