// Command-line front end: exact counts, representation conversions, property
// verification suites, and table/report emission.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pyra/codec.hpp"
#include "pyra/decomp.hpp"
#include "pyra/enumerate.hpp"
#include "pyra/jsonio.hpp"
#include "pyra/lego.hpp"
#include "pyra/mc.hpp"
#include "pyra/paths.hpp"
#include "pyra/series.hpp"
#include "pyra/transfer.hpp"
#include "pyra/verify.hpp"

namespace {

using namespace pyra;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct Range {
  int lo = 2;
  int hi = 2;
};

// "3" or "2..5"
Range parse_range(const std::string& text) {
  Range r;
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      r.lo = r.hi = std::stoi(text);
    } else {
      r.lo = std::stoi(text.substr(0, dots));
      r.hi = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw CLI::ValidationError("range", "expected N or N..M, got '" + text + "'");
  }
  if (r.lo > r.hi) throw CLI::ValidationError("range", "empty range '" + text + "'");
  return r;
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open output file: " + path);
  return file;
}

// ---------------------------------------------------------------- count ----

int run_count(int a, int m, const std::string& cls_name, const std::string& verify_mode,
              std::uint64_t budget, const std::string& format, const std::string& emit_path) {
  PyramidClass cls = PyramidClass::general();
  if (cls_name == "right") cls = PyramidClass::right();
  if (cls_name == "left") cls = PyramidClass::left();

  const BigInt closed = cls.kind == PyramidKind::General ? count_B(a, m) : count_A(a, m);
  EnumOptions opts;
  opts.count_cap = BigInt(static_cast<unsigned long>(budget));

  json j;
  j["schema_version"] = kSchemaVersion;
  j["a"] = a;
  j["m"] = m;
  j["class"] = cls_name;
  j["count"] = closed.get_str();

  bool verified_ok = true;
  if (verify_mode == "enum" || verify_mode == "brute") {
    const BigInt seen = count_pyramids_enumerated(a, m, cls, opts);
    verified_ok = seen == closed;
    j["enumerated"] = seen.get_str();
    if (verify_mode == "brute" && cls.kind == PyramidKind::General) {
      const BigInt brute = count_pyramids_bruteforce(a, m, budget);
      verified_ok = verified_ok && brute == closed;
      j["bruteforce"] = brute.get_str();
    }
    j["verified"] = verified_ok;
  }

  if (!emit_path.empty()) {
    std::ofstream file;
    std::ostream& os = open_out(file, emit_path);
    for_each_pyramid(a, m, cls, [&](const Pyramid& p) { os << pyramid_to_json(p) << "\n"; },
                     opts);
  }

  if (format == "json") {
    std::cout << j.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "a,m,class,count\n" << a << "," << m << "," << cls_name << ","
              << closed.get_str() << "\n";
  } else {
    std::cout << closed.get_str() << "\n";
    if (j.contains("verified"))
      std::cout << (verified_ok ? "verified" : "VERIFICATION FAILED") << "\n";
  }
  return verified_ok ? kExitOk : kExitPropertyFailure;
}

// -------------------------------------------------------------- convert ----

json parse_input(const std::string& kind, int a, const std::string& text) {
  if (!text.empty() && text.front() == '{') return json::parse(text);
  // Raw shorthand for the sequence-like objects.
  json j;
  j["schema_version"] = kSchemaVersion;
  j["type"] = kind;
  j["a"] = a;
  if (kind == "string")
    j["bits"] = text;
  else if (kind == "walk")
    j["steps"] = text;
  else if (kind == "path")
    j["steps"] = text;
  else
    throw std::invalid_argument(kind + " input must be a JSON object");
  return j;
}

// Every conversion routes through a BitString where that is faithful.
BitString to_string_form(const std::string& from, const json& in) {
  if (from == "string") return string_from_json(in);
  if (from == "walk") return walk_to_string(walk_from_json(in));
  if (from == "path") return walk_to_string(path_to_walk(path_from_json(in)));
  if (from == "tree") return walk_to_string(path_to_walk(tree_to_dyck(tree_from_json(in))));
  if (from == "pyramid") {
    const Pyramid p = pyramid_from_json(in);
    if (p.is_right_type()) return right_pyramid_to_string(p);
    if (p.a() == 2) return pyramid_to_code_a2(p).code;
    throw std::invalid_argument(
        "no full pyramid<->string bijection is available for a >= 3 (the dimer "
        "construction is a = 2 specific); only right-type pyramids convert");
  }
  throw std::invalid_argument("unknown --from kind: " + from);
}

json from_string_form(const std::string& to, const BitString& s) {
  if (to == "string") return string_to_json(s);
  if (to == "walk") return walk_to_json(string_to_walk(s));
  if (to == "path") return path_to_json(walk_to_path(string_to_walk(s)));
  if (to == "tree") return tree_to_json(dyck_to_tree(walk_to_path(string_to_walk(s))));
  if (to == "composition") return composition_to_json(s.a, factorize_walk(string_to_walk(s)));
  if (to == "pyramid") {
    const int m = static_cast<int>(s.bits.size()) / s.a;
    if (static_cast<std::size_t>(m) * static_cast<std::size_t>(s.a) == s.bits.size() &&
        is_positive(s, m))
      return pyramid_to_json(string_to_right_pyramid(s));
    if (s.a == 2) return pyramid_to_json(code_to_pyramid_a2(s));
    throw std::invalid_argument(
        "string is not positive and a >= 3 has no full pyramid codec; cannot build a pyramid");
  }
  throw std::invalid_argument("unknown --to kind: " + to);
}

int run_convert(int a, const std::string& from, const std::string& to, const std::string& input,
                const std::string& file, bool round_trip, const std::string& format) {
  std::string text = input;
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open input file: " + file);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  if (text.empty()) {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();

  const json in = parse_input(from, a, text);
  const BitString mid = to_string_form(from, in);
  const json out = from_string_form(to, mid);

  if (round_trip && to != "composition") {
    const json back = from_string_form(from, to_string_form(to, out));
    const json orig = from_string_form(from, mid);
    if (back.dump() != orig.dump()) {
      std::cerr << "round-trip mismatch:\n  " << orig.dump() << "\n  " << back.dump() << "\n";
      return kExitPropertyFailure;
    }
  }

  if (format == "text" && to == "pyramid") {
    std::cout << pyramid_from_json(out).heap().render_ascii();
  } else if (format == "text" && (to == "string")) {
    std::cout << out.at("bits").get<std::string>() << "\n";
  } else if (format == "text" && (to == "walk" || to == "path")) {
    std::cout << out.at("steps").get<std::string>() << "\n";
  } else {
    std::cout << out.dump(2) << "\n";
  }
  return kExitOk;
}

// --------------------------------------------------------------- verify ----

int run_verify(const std::string& suite, const Range& a_range, int m, int r, int len,
               int seeds, std::uint64_t samples, double tol, const std::string& json_path) {
  std::vector<CheckResult> results;
  auto add = [&](std::vector<CheckResult> v) {
    results.insert(results.end(), v.begin(), v.end());
  };

  for (int a = a_range.lo; a <= a_range.hi; ++a) {
    if (suite == "theorem1" || suite == "all") add(verify_theorem1(a, m > 0 ? m : 6));
    if (suite == "fuss-catalan" || suite == "all") add(verify_fuss_catalan(a, m > 0 ? m : 6));
    if (suite == "roundtrips" || suite == "all") add(verify_roundtrips(a, m > 0 ? m : 4));
    if ((suite == "factorization" || suite == "all") && a >= 3)
      add(verify_factorization(a, len > 0 ? len : 9));
    if (suite == "series" || suite == "all") add(verify_series(a, m > 0 ? m : 60, 20));
    if (suite == "widths" || suite == "all") add(verify_widths(a, m > 0 ? m : 6));
    if (suite == "width-asymptote")
      add(verify_width_asymptote(a, m > 0 ? m : 2000, tol));
    if (suite == "lego" || suite == "all") add(verify_lego(a, m > 0 ? m : 5));
    if (suite == "mc" || suite == "all")
      add(verify_mc(a, m > 0 ? m : 8, seeds, samples > 0 ? samples : 1500));
  }
  if (suite == "transfer" || suite == "all") {
    const int lo = std::max(3, a_range.lo);
    if (lo <= a_range.hi) add(verify_transfer(lo, a_range.hi, r > 0 ? r : 12));
  }
  if (results.empty()) {
    std::cerr << "no checks selected (unknown suite '" << suite << "'?)\n";
    return kExitUsage;
  }

  int failures = 0;
  json summary;
  summary["schema_version"] = kSchemaVersion;
  summary["suite"] = suite;
  json checks = json::array();
  for (const CheckResult& c : results) {
    if (!c.ok) ++failures;
    std::cout << (c.ok ? "[PASS] " : "[FAIL] ") << c.name;
    if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
    std::cout << "\n";
    checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
  }
  summary["checks"] = checks;
  summary["failures"] = failures;
  std::cout << (failures == 0 ? "ALL OK" : "FAILURES: " + std::to_string(failures)) << " ("
            << results.size() << " checks)\n";
  if (!json_path.empty()) {
    std::ofstream file;
    open_out(file, json_path) << summary.dump(2) << "\n";
  }
  return failures == 0 ? kExitOk : kExitPropertyFailure;
}

// --------------------------------------------------------------- report ----

void write_bfile(std::ostream& os, const std::vector<BigInt>& seq, int first_index) {
  for (std::size_t i = static_cast<std::size_t>(first_index); i < seq.size(); ++i)
    os << i << " " << seq[i].get_str() << "\n";
}

int run_report(const std::string& table, const Range& a_range, int m_max, int step,
               const std::string& format, const std::string& out_path, std::uint64_t samples,
               std::uint64_t seed) {
  std::ofstream file;
  std::ostream& os = open_out(file, out_path);

  for (int a = a_range.lo; a <= a_range.hi; ++a) {
    if (table == "series-a" || table == "series-b" || table == "series-c") {
      std::vector<BigInt> seq;
      if (table == "series-a") {
        seq = series_A(a, m_max);
      } else {
        const std::vector<BigInt> B = series_B_from_A(a, series_A(a, m_max));
        seq = table == "series-b" ? B : series_C_parallel(a, B);
      }
      if (format == "bfile") {
        write_bfile(os, seq, 1);
      } else if (format == "json") {
        json j;
        j["schema_version"] = kSchemaVersion;
        j["a"] = a;
        j["table"] = table;
        json vals = json::array();
        for (std::size_t i = 1; i < seq.size(); ++i) vals.push_back(seq[i].get_str());
        j["values"] = vals;
        os << j.dump(2) << "\n";
      } else {
        os << "m,value\n";
        for (std::size_t i = 1; i < seq.size(); ++i) os << i << "," << seq[i].get_str() << "\n";
      }
    } else if (table == "bmn") {
      const auto Bmn = series_B_bivariate_parallel(a, m_max);
      os << "m,n,value\n";
      for (std::size_t mm = 1; mm < Bmn.size(); ++mm)
        for (std::size_t n = 0; n < Bmn[mm].size(); ++n)
          os << mm << "," << n << "," << Bmn[mm][n].get_str() << "\n";
    } else if (table == "widths") {
      const std::vector<BigInt> B = series_B_from_A(a, series_A(a, m_max));
      const std::vector<BigInt> C = series_C_parallel(a, B);
      os << "m,avg_width_num,avg_width_den,avg_width,asymptote,ratio\n";
      for (int mm = 1; mm <= m_max; mm += step) {
        BigRat w(2 * C[static_cast<std::size_t>(mm)], B[static_cast<std::size_t>(mm)]);
        w.canonicalize();
        w += a;
        const double asym = average_width_asymptote(a, mm);
        os << mm << "," << w.get_num().get_str() << "," << w.get_den().get_str() << ","
           << to_double(w) << "," << asym << "," << to_double(w) / asym << "\n";
      }
    } else if (table == "asymp-b") {
      os << "m,ln_B,stirling,diff\n";
      for (int mm = 1; mm <= m_max; mm += step) {
        const double lnb = ln_big(count_B(a, mm));
        const double st = stirling_ln_B(a, mm);
        os << mm << "," << lnb << "," << st << "," << lnb - st << "\n";
      }
    } else if (table == "asymp-c") {
      const std::vector<BigInt> B = series_B_from_A(a, series_A(a, m_max));
      const std::vector<BigInt> C = series_C_parallel(a, B);
      os << "m,ln_C,asymptote,diff\n";
      for (int mm = 2; mm <= m_max; mm += step) {  // C_1 = 0 stays out
        const double lnc = ln_big(C[static_cast<std::size_t>(mm)]);
        const double asym = ln_asymptote_C(a, mm);
        os << mm << "," << lnc << "," << asym << "," << lnc - asym << "\n";
      }
    } else if (table == "lego-counts") {
      const std::vector<BigInt> L = flat_counts(a, m_max);
      if (format == "bfile") {
        for (std::size_t i = 0; i < L.size(); ++i) os << i + 1 << " " << L[i].get_str() << "\n";
      } else {
        os << "m,L,B\n";
        for (std::size_t i = 0; i < L.size(); ++i)
          os << i + 1 << "," << L[i].get_str() << ","
             << count_B(a, static_cast<int>(i) + 1).get_str() << "\n";
      }
    } else if (table == "transfer") {
      if (a >= 3) {
        json j = matrices_to_json(build_matrices(a));
        j["witness"] = witness_to_json(a);
        os << j.dump(2) << "\n";
      }
    } else {
      break;  // handled below, outside the per-a loop
    }
  }

  if (table == "growth") {
    const auto rows = section5_report(a_range.lo, a_range.hi, m_max, samples, seed);
    os << section5_to_json(rows).dump(2) << "\n";
  } else if (table != "series-a" && table != "series-b" && table != "series-c" &&
             table != "bmn" && table != "widths" && table != "asymp-b" && table != "asymp-c" &&
             table != "lego-counts" && table != "transfer") {
    std::cerr << "unknown table '" << table << "'\n";
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pyramids of 1 x a pieces: exact enumeration, bijections, series, and growth"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "worker thread count (0 = library default)");

  // count
  auto* count = app.add_subcommand("count", "exact pyramid counts, optionally cross-checked");
  count->fallthrough();
  int c_a = 2, c_m = 1;
  std::string c_cls = "general", c_verify, c_format = "text", c_emit;
  std::uint64_t c_budget = 100000000;
  count->add_option("--a", c_a, "piece length (>= 2)")->required();
  count->add_option("--m", c_m, "number of pieces (>= 1)")->required();
  count->add_option("--cls", c_cls, "general | right | left")
      ->check(CLI::IsMember({"general", "right", "left"}));
  count->add_option("--verify", c_verify, "enum: re-count by enumeration; brute: also by brute force")
      ->check(CLI::IsMember({"enum", "brute"}));
  count->add_option("--budget", c_budget, "enumeration count cap");
  count->add_option("--format", c_format, "text | json | csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  count->add_option("--emit", c_emit, "write the enumerated pyramids as JSON lines to this file");

  // convert
  auto* convert = app.add_subcommand("convert", "convert between representations");
  convert->fallthrough();
  int v_a = 2;
  std::string v_from, v_to, v_input, v_file, v_format = "json";
  bool v_round = false;
  const std::vector<std::string> kinds{"string", "walk", "path", "tree", "pyramid", "composition"};
  convert->add_option("--a", v_a, "piece length (>= 2)")->required();
  convert->add_option("--from", v_from, "input kind")->required()->check(CLI::IsMember(kinds));
  convert->add_option("--to", v_to, "output kind")->required()->check(CLI::IsMember(kinds));
  std::string v_positional;
  convert->add_option("--input", v_input, "raw bits / R-L steps / U-D steps, or JSON");
  convert->add_option("value", v_positional, "positional form of --input");
  convert->add_option("--file", v_file, "read the input from a file instead");
  convert->add_flag("--round-trip", v_round, "convert back and require byte-identical JSON");
  convert->add_option("--format", v_format, "json | text")
      ->check(CLI::IsMember({"json", "text"}));

  // verify
  auto* verify = app.add_subcommand("verify", "run named property suites");
  verify->fallthrough();
  std::string s_suite = "all", s_a = "2..3", s_json;
  int s_m = 0, s_r = 0, s_len = 0, s_seeds = 10;
  std::uint64_t s_samples = 0;
  double s_tol = 0.05;
  verify->add_option("--suite", s_suite,
                     "theorem1 | fuss-catalan | roundtrips | factorization | transfer | series | "
                     "widths | width-asymptote | lego | mc | all");
  verify->add_option("--a", s_a, "piece length or range N..M");
  verify->add_option("--m", s_m, "size bound (suite-specific default)");
  verify->add_option("--r", s_r, "transfer-matrix power bound");
  verify->add_option("--len", s_len, "walk length bound for factorization");
  verify->add_option("--seeds", s_seeds, "number of Monte Carlo seeds");
  verify->add_option("--samples", s_samples, "Monte Carlo samples per seed");
  verify->add_option("--tol", s_tol, "relative tolerance for asymptote checks");
  verify->add_option("--json", s_json, "write a JSON summary to this file");

  // report
  auto* report = app.add_subcommand("report", "emit data tables (CSV/JSON/b-file)");
  report->fallthrough();
  std::string r_table, r_a = "2", r_format = "csv", r_out;
  int r_mmax = 50, r_step = 1;
  std::uint64_t r_samples = 0, r_seed = 1;
  report->add_option("--table", r_table,
                     "series-a | series-b | series-c | bmn | widths | asymp-b | asymp-c | "
                     "lego-counts | transfer | growth")
      ->required();
  report->add_option("--a", r_a, "piece length or range N..M");
  report->add_option("--m-max", r_mmax, "largest size / order (growth: Monte Carlo size)");
  report->add_option("--step", r_step, "row stride for the long tables");
  report->add_option("--format", r_format, "csv | json | bfile")
      ->check(CLI::IsMember({"csv", "json", "bfile"}));
  report->add_option("--out", r_out, "output path (default stdout)");
  report->add_option("--samples", r_samples, "growth table: Monte Carlo samples (0 = skip MC)");
  report->add_option("--seed", r_seed, "growth table: Monte Carlo seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#endif

  try {
    if (count->parsed())
      return run_count(c_a, c_m, c_cls, c_verify, c_budget, c_format, c_emit);
    if (convert->parsed())
      return run_convert(v_a, v_from, v_to, v_input.empty() ? v_positional : v_input, v_file,
                         v_round, v_format);
    if (verify->parsed())
      return run_verify(s_suite, parse_range(s_a), s_m, s_r, s_len, s_seeds, s_samples, s_tol,
                        s_json);
    if (report->parsed())
      return run_report(r_table, parse_range(r_a), r_mmax, r_step, r_format, r_out, r_samples,
                        r_seed);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPropertyFailure;
  }
  return kExitUsage;
}
