#include "pyra/codec.hpp"

#include <algorithm>
#include <stdexcept>

#include "pyra/decomp.hpp"

namespace pyra {

BitString right_pyramid_to_string(const Pyramid& p) {
  if (!p.is_right_type())
    throw std::invalid_argument("right_pyramid_to_string: pyramid is not right-type");
  const int a = p.a();
  const std::vector<Piece>& ps = p.heap().pieces();
  const std::size_t m = ps.size();

  // The scan may take a piece at offset t_s only if the grown set stays a
  // sub-pyramid (an ideal of the heap order): every concurrent piece below it
  // must already be in. Its landing level then matches its level in p.
  std::vector<char> used(m, 0);
  std::size_t bottom = 0;
  while (!(ps[bottom].level == 1 && ps[bottom].offset == 0)) ++bottom;
  used[bottom] = 1;

  const auto takeable = [&](std::int64_t t) -> std::size_t {
    for (std::size_t i = 0; i < m; ++i) {
      if (used[i] || ps[i].offset != t) continue;
      bool ready = true;
      for (std::size_t j = 0; j < m && ready; ++j)
        if (!used[j] && ps[j].level < ps[i].level && std::llabs(ps[j].offset - t) < a)
          ready = false;
      if (ready) return i;  // at most one candidate can be ready
    }
    return m;
  };

  BitString out{a, "1"};
  std::int64_t t = a - 1;
  const std::size_t n = static_cast<std::size_t>(a) * m;
  while (out.bits.size() < n) {
    const std::size_t i = takeable(t);
    if (i < m) {
      used[i] = 1;
      out.bits.push_back('1');
      t += a - 1;
    } else {
      out.bits.push_back('0');
      t -= 1;
    }
    if (t < 0) throw std::invalid_argument("right_pyramid_to_string: scan failed (bad input)");
  }
  for (char u : used)
    if (!u) throw std::invalid_argument("right_pyramid_to_string: scan did not absorb all pieces");
  return out;
}

Pyramid string_to_right_pyramid(const BitString& s) {
  if (s.bits.empty() || s.bits.size() % static_cast<std::size_t>(s.a) != 0)
    throw std::invalid_argument("string length must be a*m, m >= 1");
  const int m = static_cast<int>(s.bits.size()) / s.a;
  if (!is_positive(s, m)) throw std::invalid_argument("string is not positive");
  Heap h(s.a);
  std::int64_t t = 0;
  for (char c : s.bits) {
    if (c == '1') {
      h.drop(t);
      t += s.a - 1;
    } else {
      t -= 1;
    }
  }
  return Pyramid(std::move(h));
}

std::vector<BitString> split_code_a2(const BitString& s) {
  if (s.a != 2) throw std::invalid_argument("full pyramid codec is specific to a = 2");
  if (s.bits.empty() || s.bits.size() % 2 != 0 || s.bits[0] != '1')
    throw std::invalid_argument("need a (2m,m)-string starting with 1");
  std::int64_t t = 0;
  int ones = 0;
  std::vector<BitString> parts;
  std::string cur;
  bool nonneg = true;  // current segment walks on the non-negative integers
  for (char c : s.bits) {
    const std::int64_t next = t + (c == '1' ? 1 : -1);
    if (t == 0 && ((nonneg && next < 0) || (!nonneg && next > 0))) {
      parts.push_back({2, cur});
      cur.clear();
      nonneg = !nonneg;
    }
    cur.push_back(c);
    ones += c == '1';
    t = next;
  }
  if (t != 0 || 2 * ones != static_cast<int>(s.bits.size()))
    throw std::invalid_argument("not a (2m,m)-string (walk must end at 0)");
  parts.push_back({2, cur});
  return parts;
}

PyramidCode pyramid_to_code_a2(const Pyramid& p) {
  if (p.a() != 2) throw std::invalid_argument("full pyramid codec is specific to a = 2");
  PyramidCode out;
  out.code.a = 2;
  const DecompSeq d = decompose(p);
  for (const DecompFactor& f : d) {
    BitString seg = right_pyramid_to_string(f.right ? f.part : f.part.mirrored());
    if (!f.right) std::reverse(seg.bits.begin(), seg.bits.end());
    out.code.bits += seg.bits;
    out.factors.push_back(std::move(seg));
  }
  return out;
}

Pyramid code_to_pyramid_a2(const BitString& s) {
  const std::vector<BitString> parts = split_code_a2(s);
  DecompSeq d;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const bool right = i % 2 == 0;
    BitString seg = parts[i];
    if (!right) std::reverse(seg.bits.begin(), seg.bits.end());
    Pyramid part = string_to_right_pyramid(seg);
    if (!right) part = part.mirrored();
    // For a = 2 the offset gaps are forced, so s alternates 0,1,0,1,...
    d.push_back({right, right ? 0 : 1, std::move(part)});
  }
  return recompose(2, d);
}

}  // namespace pyra
