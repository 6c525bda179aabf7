#include "pyra/strings.hpp"

#include <stdexcept>

namespace pyra {

std::int64_t Walk::end() const {
  std::int64_t v = start;
  for (Step st : steps) v += st == Step::Right ? a - 1 : -1;
  return v;
}

std::vector<std::int64_t> sites(const Walk& w) {
  std::vector<std::int64_t> out;
  out.reserve(w.steps.size());
  std::int64_t v = w.start;
  for (Step st : w.steps) {
    v += st == Step::Right ? w.a - 1 : -1;
    out.push_back(v);
  }
  return out;
}

Walk string_to_walk(const BitString& s) {
  Walk w;
  w.a = s.a;
  w.start = 0;
  w.steps.reserve(s.bits.size());
  for (char c : s.bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("string symbols must be 0 or 1");
    w.steps.push_back(c == '1' ? Step::Right : Step::Left);
  }
  return w;
}

BitString walk_to_string(const Walk& w) {
  BitString s;
  s.a = w.a;
  s.bits.reserve(w.steps.size());
  for (Step st : w.steps) s.bits.push_back(st == Step::Right ? '1' : '0');
  return s;
}

bool is_positive(const BitString& s, int m) {
  if (s.bits.size() != static_cast<std::size_t>(s.a) * static_cast<std::size_t>(m))
    throw std::invalid_argument("string length must be a*m");
  std::int64_t t = 0;
  int ones = 0;
  for (char c : s.bits) {
    if (c == '1') {
      t += s.a - 1;
      ++ones;
    } else {
      t -= 1;
    }
    if (t < 0) return false;
  }
  return ones == m;
}

bool is_positive_walk(const Walk& w) {
  std::int64_t v = w.start;
  for (Step st : w.steps) {
    v += st == Step::Right ? w.a - 1 : -1;
    if (v < w.start) return false;
  }
  return v >= w.start;
}

bool is_negative_walk(const Walk& w) {
  std::int64_t v = w.start;
  for (Step st : w.steps) {
    v += st == Step::Right ? w.a - 1 : -1;
    if (v > w.start) return false;
  }
  return v <= w.start;
}

Walk inverse_walk(const Walk& w) {
  Walk out;
  out.a = w.a;
  out.start = w.end();
  out.steps.assign(w.steps.rbegin(), w.steps.rend());
  return out;
}

namespace {

void gen(int a, int m, int ones, std::int64_t t, BitString& cur,
         const std::function<void(const BitString&)>& fn) {
  if (cur.bits.size() == static_cast<std::size_t>(a) * static_cast<std::size_t>(m)) {
    fn(cur);
    return;
  }
  if (ones < m) {
    cur.bits.push_back('1');
    gen(a, m, ones + 1, t + a - 1, cur, fn);
    cur.bits.pop_back();
  }
  if (t >= 1) {
    cur.bits.push_back('0');
    gen(a, m, ones, t - 1, cur, fn);
    cur.bits.pop_back();
  }
}

}  // namespace

void for_each_positive_string(int a, int m, const std::function<void(const BitString&)>& fn) {
  if (m < 0) throw std::invalid_argument("m must be >= 0");
  BitString cur{a, {}};
  if (m == 0) {
    fn(cur);
    return;
  }
  gen(a, m, 0, 0, cur, fn);
}

std::vector<BitString> positive_strings(int a, int m) {
  std::vector<BitString> out;
  for_each_positive_string(a, m, [&](const BitString& s) { out.push_back(s); });
  return out;
}

}  // namespace pyra
