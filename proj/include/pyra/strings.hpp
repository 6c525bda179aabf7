#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace pyra {

// A string is a finite sequence of 0/1 symbols, stored exactly as printed
// ("111000" means x_1 = 1, x_2 = 1, ...). With piece length a, symbol 1 is a
// right-step of length a-1 and symbol 0 a left-step of length 1, so the
// running value after s symbols is t_s = sum_{u<=s} (a*x_u - 1).
struct BitString {
  int a = 2;
  std::string bits;  // '0' / '1'

  friend bool operator==(const BitString&, const BitString&) = default;
};

enum class Step : unsigned char { Right, Left };

// A walk on the integers with right-steps of length a-1 and left-steps of
// length 1.
struct Walk {
  int a = 2;
  std::int64_t start = 0;
  std::vector<Step> steps;

  std::int64_t end() const;
  friend bool operator==(const Walk&, const Walk&) = default;
};

/// Sites visited after each step (size == steps.size()); the s'th site of the
/// walk of a string equals t_s.
std::vector<std::int64_t> sites(const Walk& w);

Walk string_to_walk(const BitString& s);
BitString walk_to_string(const Walk& w);

/// True iff s is a positive (am,m)-string: exactly m ones and t_s >= 0 for
/// all s. Throws std::invalid_argument if the length is not a*m.
bool is_positive(const BitString& s, int m);

/// A walk is positive if it never goes below its start and ends at or above
/// it; negative if its inverse (reflect in the endpoint, reverse) is
/// positive, which for closed walks means it never goes above the start.
bool is_positive_walk(const Walk& w);
bool is_negative_walk(const Walk& w);

/// Reflects the walk in its endpoint and reverses the traversal: the steps
/// come out in reverse order, the start becomes the old endpoint. For closed
/// walks from 0 this is plain string reversal.
Walk inverse_walk(const Walk& w);

/// All positive (am,m)-strings in canonical order (at each position '1'
/// before '0', matching the 111000, 110100, ... listing).
void for_each_positive_string(int a, int m, const std::function<void(const BitString&)>& fn);
std::vector<BitString> positive_strings(int a, int m);

}  // namespace pyra
