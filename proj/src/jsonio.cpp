#include "pyra/jsonio.hpp"

#include <algorithm>
#include <stdexcept>

namespace pyra {

namespace {

json header(const char* type, int a) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["type"] = type;
  j["a"] = a;
  return j;
}

void expect_type(const json& j, const char* type) {
  if (!j.is_object() || j.value("type", "") != std::string(type))
    throw std::invalid_argument(std::string("expected a '") + type + "' object");
}

json rat_to_json(const BigRat& q) {
  json j;
  j["num"] = q.get_num().get_str();
  j["den"] = q.get_den().get_str();
  j["approx"] = to_double(q);
  return j;
}

}  // namespace

json heap_to_json(const Heap& h) {
  json j = header("heap", h.a());
  json ps = json::array();
  for (const Piece& p : h.pieces()) ps.push_back({p.offset, p.level});
  j["pieces"] = ps;
  return j;
}

Heap heap_from_json(const json& j) {
  if (!j.is_object() || !j.contains("a") || !j.contains("pieces"))
    throw std::invalid_argument("expected {a, pieces} object");
  std::vector<Piece> ps;
  for (const auto& e : j.at("pieces"))
    ps.push_back({e.at(0).get<std::int64_t>(), e.at(1).get<int>()});
  Heap h = redrop(j.at("a").get<int>(), ps);
  // Re-dropping must reproduce the stated levels, else the input was not a
  // valid heap.
  std::vector<Piece> sorted = ps;
  std::sort(sorted.begin(), sorted.end(), piece_less);
  if (!(h.pieces() == sorted)) throw std::invalid_argument("piece list is not a valid heap");
  return h;
}

json pyramid_to_json(const Pyramid& p) {
  json j = heap_to_json(p.heap());
  j["type"] = "pyramid";
  return j;
}

Pyramid pyramid_from_json(const json& j) { return Pyramid(heap_from_json(j)); }

json string_to_json(const BitString& s) {
  json j = header("string", s.a);
  j["bits"] = s.bits;
  return j;
}

BitString string_from_json(const json& j) {
  expect_type(j, "string");
  return {j.at("a").get<int>(), j.at("bits").get<std::string>()};
}

json walk_to_json(const Walk& w) {
  json j = header("walk", w.a);
  j["start"] = w.start;
  std::string steps;
  for (Step s : w.steps) steps.push_back(s == Step::Right ? 'R' : 'L');
  j["steps"] = steps;
  return j;
}

Walk walk_from_json(const json& j) {
  expect_type(j, "walk");
  Walk w;
  w.a = j.at("a").get<int>();
  w.start = j.value("start", 0);
  for (char c : j.at("steps").get<std::string>()) {
    if (c != 'R' && c != 'L') throw std::invalid_argument("walk steps must be R/L");
    w.steps.push_back(c == 'R' ? Step::Right : Step::Left);
  }
  return w;
}

json path_to_json(const LatticePath& p) {
  json j = header("path", p.a);
  std::string steps;
  for (PathStep s : p.steps) steps.push_back(s == PathStep::Up ? 'U' : 'D');
  j["steps"] = steps;
  return j;
}

LatticePath path_from_json(const json& j) {
  expect_type(j, "path");
  LatticePath p;
  p.a = j.at("a").get<int>();
  for (char c : j.at("steps").get<std::string>()) {
    if (c != 'U' && c != 'D') throw std::invalid_argument("path steps must be U/D");
    p.steps.push_back(c == 'U' ? PathStep::Up : PathStep::Down);
  }
  return p;
}

namespace {

json tree_node(const AryTree& t, int id) {
  if (id < 0) return nullptr;
  json children = json::array();
  for (int c : t.children[static_cast<std::size_t>(id)]) children.push_back(tree_node(t, c));
  json j;
  j["children"] = children;
  return j;
}

int tree_parse(const json& node, int a, AryTree& t) {
  if (node.is_null()) return -1;
  const auto& children = node.at("children");
  if (!children.is_array() || static_cast<int>(children.size()) != a)
    throw std::invalid_argument("tree node needs exactly a children");
  const int id = static_cast<int>(t.children.size());
  t.children.emplace_back(static_cast<std::size_t>(a), -1);
  for (int k = 0; k < a; ++k)
    t.children[static_cast<std::size_t>(id)][static_cast<std::size_t>(k)] =
        tree_parse(children.at(static_cast<std::size_t>(k)), a, t);
  return id;
}

}  // namespace

json tree_to_json(const AryTree& t) {
  json j = header("tree", t.a);
  j["root"] = t.children.empty() ? json(nullptr) : tree_node(t, 0);
  return j;
}

AryTree tree_from_json(const json& j) {
  expect_type(j, "tree");
  AryTree t;
  t.a = j.at("a").get<int>();
  tree_parse(j.at("root"), t.a, t);
  return t;
}

json composition_to_json(int a, const AdmissibleComposition& c) {
  json j = header("composition", a);
  json fs = json::array();
  for (const WalkFactor& f : c) {
    json e;
    e["letter"] = std::string(1, factor_letter(f.type));
    e["i"] = f.i;
    e["j"] = f.j;
    if (f.type == FactorType::P || f.type == FactorType::N) {
      std::string steps;
      for (Step s : f.steps) steps.push_back(s == Step::Right ? 'R' : 'L');
      e["steps"] = steps;
      e["m"] = f.size_m(a);
    }
    fs.push_back(std::move(e));
  }
  j["factors"] = fs;
  return j;
}

namespace {

json matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (const auto& r : m) {
    json row = json::array();
    for (const BigInt& v : r) row.push_back(v.get_si());
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

json matrices_to_json(const TransferMatrices& t) {
  json j = header("transfer-matrices", t.a);
  j["b"] = t.b;
  j["index_order"] = "0P, 0N, 1P, 1N, ..., (a-2)P, (a-2)N";
  j["E"] = matrix_to_json(t.E);
  j["T"] = matrix_to_json(t.T);
  j["U"] = matrix_to_json(t.U);
  j["A"] = matrix_to_json(t.A);
  return j;
}

json witness_to_json(int a) {
  const int b = a - 1;
  json j = header("spectral-witness", a);
  j["zeta"] = rat_to_json(BigRat(b + 1, b));
  json e = json::array();
  for (const BigRat& c : witness_e(a)) e.push_back(rat_to_json(c));
  j["e"] = e;
  json fs = json::array();
  for (int i = 1; i <= b - 1; ++i) {
    json f = json::array();
    for (const BigRat& c : witness_f(a, i)) f.push_back(rat_to_json(c));
    fs.push_back(std::move(f));
  }
  j["f"] = fs;
  return j;
}

json estimate_to_json(const GrowthEstimate& e) {
  json j;
  j["estimate"] = e.estimate;
  if (e.stderr_of_mean)
    j["stderr"] = *e.stderr_of_mean;
  else
    j["stderr"] = nullptr;
  j["samples"] = e.samples;
  j["seed"] = e.seed;
  j["m"] = e.m;
  j["mode"] = e.mode == McMode::Pyramid ? "pyramid" : "flat";
  j["corrected"] = e.corrected;
  return j;
}

json section5_to_json(const std::vector<Section5Row>& rows) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["type"] = "growth-report";
  // Reference values quoted for context; not computed by this library.
  j["reference"] = {{"h2_speculated", 5.0},
                    {"reported_fit_H", 5.0012},
                    {"k_range", {1.238, 1.264}},
                    {"upper_bound_affine", "6.356*a - 4.375"},
                    {"h2_lower_bounds_cited", {4.5, 4.607}}};
  json rs = json::array();
  for (const Section5Row& r : rows) {
    json e;
    e["a"] = r.a;
    e["lower_bound"] = rat_to_json(r.lower_bound_exact);
    e["conjecture_5_over_4"] = r.conjecture;
    json k;
    k["found"] = r.klarner.found;
    if (r.klarner.found) {
      k["root"] = r.klarner.root;
      k["residual"] = r.klarner.residual;
    }
    if (!r.klarner.note.empty()) k["note"] = r.klarner.note;
    e["klarner_depth1"] = k;
    if (r.mc) e["mc"] = estimate_to_json(*r.mc);
    if (r.implied_k) e["implied_k"] = *r.implied_k;
    rs.push_back(std::move(e));
  }
  j["rows"] = rs;
  return j;
}

}  // namespace pyra
