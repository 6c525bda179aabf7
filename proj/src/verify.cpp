#include "pyra/verify.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "pyra/admissible.hpp"
#include "pyra/codec.hpp"
#include "pyra/decomp.hpp"
#include "pyra/lego.hpp"
#include "pyra/mc.hpp"
#include "pyra/paths.hpp"
#include "pyra/series.hpp"
#include "pyra/transfer.hpp"

namespace pyra {

namespace {

enum class Last : unsigned char { None, P, N, T, U };

struct OracleState {
  const Walk* w = nullptr;
  std::vector<std::int64_t> value;  // value[k] = site after k steps
  std::int64_t endpoint = 0;
  std::uint64_t nodes = 0;
  std::uint64_t budget = 0;

  std::uint64_t search(std::size_t pos, std::int64_t idx, Last last) {
    if (++nodes > budget) throw BudgetExceeded("factorization oracle budget exceeded");
    const int a = w->a;
    const std::size_t n = w->steps.size();
    std::uint64_t total = 0;
    if (pos == n && idx == endpoint && last != Last::None) total += 1;
    if (pos >= n) return total;

    const bool can_pn_start = last == Last::None || last == Last::N || last == Last::T;
    if (can_pn_start && w->steps[pos] == Step::Right) {
      // Positive factors from idx: every return to idx is a plain P cut; an
      // end above idx can be a truncated P followed by U.
      std::int64_t v = idx;
      for (std::size_t e = pos; e < n; ++e) {
        v += w->steps[e] == Step::Right ? a - 1 : -1;
        if (v < idx) break;
        const std::size_t len = e + 1 - pos;
        if (v == idx && len % static_cast<std::size_t>(a) == 0)
          total += search(e + 1, idx, Last::P);
        if (v > idx && v <= a - 2 &&
            (len + static_cast<std::size_t>(v - idx)) % static_cast<std::size_t>(a) == 0)
          total += search(e + 1, v, Last::U);
      }
    }
    if (last != Last::N) {
      // Negative factors (allowed after P, U, T, or at the start): walks
      // staying <= idx returning to idx.
      std::int64_t v = idx;
      for (std::size_t e = pos; e < n; ++e) {
        v += w->steps[e] == Step::Right ? a - 1 : -1;
        if (v > idx) break;
        const std::size_t len = e + 1 - pos;
        if (v == idx && len % static_cast<std::size_t>(a) == 0)
          total += search(e + 1, idx, Last::N);
      }
    }
    if (last == Last::P || last == Last::N) {
      // T runs: 1..idx consecutive left-steps.
      for (std::int64_t L = 1; L <= idx && pos + static_cast<std::size_t>(L) <= n; ++L) {
        if (w->steps[pos + static_cast<std::size_t>(L) - 1] != Step::Left) break;
        total += search(pos + static_cast<std::size_t>(L), idx - L, Last::T);
      }
    }
    return total;
  }
};

std::string fmt_am(int a, int m) {
  return "a=" + std::to_string(a) + " m=" + std::to_string(m);
}

CheckResult check(std::string name, bool ok, std::string detail = "") {
  return {std::move(name), ok, std::move(detail)};
}

}  // namespace

std::uint64_t count_all_factorizations(const Walk& w, std::uint64_t node_budget) {
  if (w.start != 0) throw std::invalid_argument("oracle expects walks from 0");
  OracleState st;
  st.w = &w;
  st.value.assign(w.steps.size() + 1, 0);
  for (std::size_t k = 0; k < w.steps.size(); ++k)
    st.value[k + 1] = st.value[k] + (w.steps[k] == Step::Right ? w.a - 1 : -1);
  st.endpoint = st.value.back();
  st.budget = node_budget;
  if (w.steps.empty()) return 1;
  return st.search(0, 0, Last::None);
}

void for_each_string(int a, int n, int m, bool leading_one,
                     const std::function<void(const BitString&)>& fn) {
  BitString cur{a, {}};
  cur.bits.reserve(static_cast<std::size_t>(n));
  const std::function<void(int, int)> rec = [&](int pos, int ones) {
    if (pos == n) {
      if (ones == m) fn(cur);
      return;
    }
    if (ones < m) {
      cur.bits.push_back('1');
      rec(pos + 1, ones + 1);
      cur.bits.pop_back();
    }
    if (!(pos == 0 && leading_one) && n - pos - 1 >= m - ones) {
      cur.bits.push_back('0');
      rec(pos + 1, ones);
      cur.bits.pop_back();
    }
  };
  rec(0, 0);
}

std::vector<CheckResult> verify_theorem1(int a, int m_max, const EnumOptions& opts) {
  std::vector<CheckResult> out;
  for (int m = 1; m <= m_max; ++m) {
    const BigInt expect = count_B(a, m);
    const BigInt got = count_pyramids_enumerated(a, m, PyramidClass::general(), opts);
    out.push_back(check("theorem1 " + fmt_am(a, m), got == expect,
                        got.get_str() + " vs C(am-1,m-1) = " + expect.get_str()));
  }
  return out;
}

std::vector<CheckResult> verify_fuss_catalan(int a, int m_max, const EnumOptions& opts) {
  std::vector<CheckResult> out;
  for (int m = 1; m <= m_max; ++m) {
    const BigInt expect = count_A(a, m);
    const BigInt got = count_pyramids_enumerated(a, m, PyramidClass::right(), opts);
    out.push_back(check("right-pyramids " + fmt_am(a, m), got == expect,
                        got.get_str() + " vs Fuss-Catalan = " + expect.get_str()));
  }
  return out;
}

std::vector<CheckResult> verify_roundtrips(int a, int m_max) {
  std::vector<CheckResult> out;
  for (int m = 1; m <= m_max; ++m) {
    bool codec_ok = true;
    for_each_positive_string(a, m, [&](const BitString& s) {
      if (!codec_ok) return;
      const Pyramid p = string_to_right_pyramid(s);
      codec_ok = right_pyramid_to_string(p) == s;
    });
    out.push_back(check("string<->right-pyramid " + fmt_am(a, m), codec_ok));

    bool tree_ok = true;
    std::uint64_t trees = 0;
    for_each_positive_string(a, m, [&](const BitString& s) {
      if (!tree_ok) return;
      const LatticePath path = walk_to_path(string_to_walk(s));
      const AryTree t = dyck_to_tree(path);
      tree_ok = t.node_count() == static_cast<std::size_t>(m) && tree_to_dyck(t) == path &&
                path_to_walk(path) == string_to_walk(s);
      ++trees;
    });
    tree_ok = tree_ok && BigInt(static_cast<unsigned long>(trees)) == count_A(a, m);
    out.push_back(check("path<->tree " + fmt_am(a, m), tree_ok));

    if (a == 2) {
      bool full_ok = true;
      for_each_string(2, 2 * m, m, true, [&](const BitString& s) {
        if (!full_ok) return;
        const Pyramid p = code_to_pyramid_a2(s);
        full_ok = pyramid_to_code_a2(p).code == s;
      });
      out.push_back(check("a=2 full codec m=" + std::to_string(m), full_ok));
    }

    bool decomp_ok = true;
    for_each_pyramid(a, m, PyramidClass::general(), [&](const Pyramid& p) {
      if (!decomp_ok) return;
      decomp_ok = recompose(a, decompose(p)) == p;
    });
    out.push_back(check("decompose/recompose " + fmt_am(a, m), decomp_ok));
  }
  return out;
}

std::vector<CheckResult> verify_factorization(int a, int len_max) {
  std::vector<CheckResult> out;
  for (int m = 1; a * m <= len_max; ++m) {
    bool ok = true;
    std::string why;
    std::uint64_t n_walks = 0;
    for_each_string(a, a * m, m, true, [&](const BitString& s) {
      if (!ok) return;
      const Walk w = string_to_walk(s);
      if (w.end() != 0) return;  // oracle domain: closed walks from 0
      ++n_walks;
      const AdmissibleComposition c = factorize_walk(w);
      if (!(compose_admissible(a, c) == w)) {
        ok = false;
        why = "recomposition mismatch on " + s.bits;
        return;
      }
      const std::uint64_t count = count_all_factorizations(w);
      if (count != 1) {
        ok = false;
        why = "oracle found " + std::to_string(count) + " compositions of " + s.bits;
      }
    });
    out.push_back(check("factorization " + fmt_am(a, m), ok,
                        ok ? std::to_string(n_walks) + " walks, all unique" : why));
  }
  return out;
}

std::vector<CheckResult> verify_transfer(int a_lo, int a_hi, int r_max) {
  std::vector<CheckResult> out;
  for (int a = a_lo; a <= a_hi; ++a) {
    bool ar_ok = true;
    for (int r = 1; r <= r_max; ++r)
      ar_ok = ar_ok && compute_a_r(a, r) == pow_int(a - 1, static_cast<unsigned long>(r) - 1);
    out.push_back(check("a_r = (a-1)^{r-1} a=" + std::to_string(a), ar_ok));
    out.push_back(check("char poly a=" + std::to_string(a), verify_char_poly(a)));
    out.push_back(check("spectral witness a=" + std::to_string(a), verify_spectral_witness(a)));
  }
  out.push_back(check("a=3 recursion anchors", a3_recursion_check()));
  return out;
}

std::vector<CheckResult> verify_series(int a, int order, int composition_m) {
  std::vector<CheckResult> out;
  const std::vector<BigInt> A = series_A(a, order);
  bool ok = true;
  for (int m = 1; m <= order; ++m)
    ok = ok && A[static_cast<std::size_t>(m)] == count_A(a, m);
  out.push_back(check("A recursion = closed form a=" + std::to_string(a), ok));

  const std::vector<BigInt> B = series_B_from_A(a, A);
  ok = true;
  for (int m = 1; m <= order; ++m)
    ok = ok && B[static_cast<std::size_t>(m)] == count_B(a, m);
  out.push_back(check("B = A/(1-(a-1)A) = binomial a=" + std::to_string(a), ok));

  ok = true;
  for (int m = 1; m <= composition_m; ++m)
    ok = ok && sum_over_compositions_B(a, m) == count_B(a, m);
  out.push_back(check("composition sum = binomial a=" + std::to_string(a), ok));

  const auto Bmn = series_B_bivariate(a, order);
  ok = true;
  for (int m = 1; m <= order; ++m) {
    BigInt row_sum = 0;
    for (const BigInt& c : Bmn[static_cast<std::size_t>(m)]) row_sum += c;
    ok = ok && row_sum == B[static_cast<std::size_t>(m)];
    ok = ok && Bmn[static_cast<std::size_t>(m)][0] == A[static_cast<std::size_t>(m)];
  }
  out.push_back(check("sum_n B_{m,n} = B_m and B_{m,0} = A_m a=" + std::to_string(a), ok));

  const std::vector<BigInt> C = series_C(a, B);
  ok = true;
  for (int m = 1; m <= order; ++m) {
    BigInt weighted = 0;
    const auto& row = Bmn[static_cast<std::size_t>(m)];
    for (std::size_t n = 0; n < row.size(); ++n) weighted += BigInt(static_cast<long>(n)) * row[n];
    ok = ok && weighted == C[static_cast<std::size_t>(m)];
  }
  out.push_back(check("C_m = sum n B_{m,n} = (a(a-1)/2)(B*B)_m a=" + std::to_string(a), ok));

  const std::vector<BigInt> res = fixed_point_residual(a, A);
  ok = true;
  for (const BigInt& c : res) ok = ok && c == 0;
  out.push_back(check("fixed-point residual zero a=" + std::to_string(a), ok));

  return out;
}

std::vector<CheckResult> verify_widths(int a, int m_max) {
  std::vector<CheckResult> out;
  const auto Bmn = series_B_bivariate(a, m_max);
  for (int m = 1; m <= m_max; ++m) {
    std::map<std::int64_t, std::uint64_t> hist;
    for_each_pyramid(a, m, PyramidClass::general(),
                     [&](const Pyramid& p) { ++hist[p.left_width()]; });
    const auto& row = Bmn[static_cast<std::size_t>(m)];
    bool ok = true;
    for (std::size_t n = 0; n < row.size(); ++n) {
      const auto it = hist.find(static_cast<std::int64_t>(n));
      const std::uint64_t h = it == hist.end() ? 0 : it->second;
      ok = ok && BigInt(static_cast<unsigned long>(h)) == row[n];
    }
    for (const auto& [n, h] : hist)
      ok = ok && n >= 0 && (static_cast<std::size_t>(n) < row.size() ? true : h == 0);
    out.push_back(check("width histogram = [t^m v^n]B(t,v) " + fmt_am(a, m), ok));
  }
  return out;
}

std::vector<CheckResult> verify_width_asymptote(int a, int m, double rel_tol) {
  const double exact = to_double(average_width_exact(a, m));
  const double asym = average_width_asymptote(a, m);
  const double ratio = exact / asym;
  std::ostringstream os;
  os << "ratio " << ratio << " at " << fmt_am(a, m);
  return {check("average width / asymptote", ratio >= 1.0 - rel_tol && ratio <= 1.0 + rel_tol,
                os.str())};
}

std::vector<CheckResult> verify_lego(int a, int m_max) {
  std::vector<CheckResult> out;
  for (int m = 1; m <= m_max; ++m) {
    const BigInt orderly = count_flat_orderly(a, m);
    const BigInt dedup = count_flat_dedup(a, m);
    out.push_back(check("flat generators agree " + fmt_am(a, m), orderly == dedup,
                        orderly.get_str() + " vs " + dedup.get_str()));
    out.push_back(check("L >= B " + fmt_am(a, m), orderly >= count_B(a, m),
                        orderly.get_str() + " >= " + count_B(a, m).get_str()));
  }
  return out;
}

std::vector<CheckResult> verify_mc(int a, int m, int n_seeds, std::uint64_t samples) {
  std::vector<CheckResult> out;
  const BigInt exact = count_B(a, m);
  const double exact_d = to_double(BigRat(exact));
  int within = 0;
  for (int s = 1; s <= n_seeds; ++s) {
    const GrowthEstimate e =
        mc_estimate(a, m, samples, static_cast<std::uint64_t>(s), McMode::Pyramid);
    if (!e.stderr_of_mean) continue;
    if (std::abs(e.estimate - exact_d) <= 5.0 * *e.stderr_of_mean) ++within;
  }
  std::ostringstream os;
  os << within << "/" << n_seeds << " seeds within 5 stderr of B_" << m << " = "
     << exact.get_str();
  out.push_back(check("pyramid MC calibration", within >= n_seeds - 2, os.str()));
  return out;
}

}  // namespace pyra
