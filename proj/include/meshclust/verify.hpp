#pragma once

// Built-in example checks, the eta map in type A, and the manifest that
// records their outcome.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <functional>
#include <future>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "meshclust/cluster.hpp"
#include "meshclust/euler.hpp"
#include "meshclust/io.hpp"
#include "meshclust/mesh.hpp"
#include "meshclust/minors.hpp"
#include "meshclust/rigidpath.hpp"

namespace meshclust {

/// Linear A_n with arrows n -> n-1 -> ... -> 1 and t_i = i - 1.
inline TerminalData linear_terminal(int n) {
  if (n < 1) throw TooSmallError("need n >= 1");
  std::vector<Arrow> arrows;
  for (int i = n; i > 1; --i) arrows.emplace_back(i, i - 1);
  std::vector<int> t(n);
  for (int i = 1; i <= n; ++i) t[i - 1] = i - 1;
  return {make_quiver(n, std::move(arrows)), t};
}

/// Position (row, column) of the matrix entry attached to z_{l,c}.
inline std::pair<int, int> eta_entry(int l, int c, int n) { return {l - c, n - c + 1}; }

struct EtaEntry {
  IntervalLabel label;
  MinorKey key;
  LaurentPoly minor;
  LaurentPoly expanded;
  bool ok = false;
};

/// For every T_{i,[a,b]} of linear A_n, the minor of interval_minor_key and
/// the dual PBW expansion with z_{l,c} sent to its matrix entry.
inline std::vector<EtaEntry> eta_entries(int n) {
  auto cat = build_category(linear_terminal(n));
  SymbolicMatrix x = unitriangular(n + 1);
  const std::size_t nv = upper_count(n + 1);
  std::vector<std::optional<LaurentPoly>> images;
  for (const auto& v : cat.vertices) {
    auto [r, c] = eta_entry(v.i, v.a, n);
    images.push_back(x[r - 1][c - 1]);
  }
  PbwExpander pbw(cat);
  std::vector<EtaEntry> out;
  for (int i = 1; i <= n; ++i)
    for (int a = 0; a <= i - 1; ++a)
      for (int b = a; b <= i - 1; ++b) {
        EtaEntry e;
        e.label = {i, a, b};
        e.key = interval_minor_key(i, a, b, n);
        e.minor = minor(x, e.key);
        e.expanded = substitute(pbw.expand(e.label), images, nv);
        e.ok = e.minor == e.expanded;
        out.push_back(std::move(e));
      }
  return out;
}

struct PropMinorEntry {
  std::size_t k = 0;
  MinorKey key;
  bool ok = false;
};

/// evaluate_phi(g_module(k), seq) against the minor for w_{<=k} evaluated
/// on x_{seq}(t), for a type A category.
inline std::vector<PropMinorEntry> prop_minor_entries(const CategoryModel& cat, const Ordering& ord,
                                                      const std::vector<int>& seq) {
  const int size = cat.n() + 1;
  for (const auto& [s, t] : cat.terminal.q.arrows)
    if (std::abs(s - t) != 1) throw ShapeError("quiver is not of type A with the standard numbering");
  auto word = adapted_word(cat, ord);
  auto p = one_param_product(seq, size);
  std::vector<PropMinorEntry> out;
  for (std::size_t k = 1; k <= word.size(); ++k) {
    PropMinorEntry e;
    e.k = k;
    e.key = w_minor(word, k, word[k - 1], size);
    e.ok = evaluate_phi(g_module(cat, ord, k), seq) == to_rational(minor(p, e.key));
    out.push_back(std::move(e));
  }
  return out;
}

/// The sequence (1..n) repeated r times followed by (n..1) repeated r times.
inline std::vector<int> sweep_sequence(int n, int r) {
  std::vector<int> seq;
  for (int k = 0; k < r; ++k)
    for (int i = 1; i <= n; ++i) seq.push_back(i);
  for (int k = 0; k < r; ++k)
    for (int i = n; i >= 1; --i) seq.push_back(i);
  return seq;
}

struct CheckResult {
  std::string id;
  std::string description;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

/// A named check; run() returns an empty string on success and a
/// description of the mismatch otherwise.
struct ExampleCheck {
  std::string id;
  std::string description;
  std::function<std::string()> run;
};

namespace detail {

inline std::string expect_eq(const std::string& what, const std::string& got, const std::string& want) {
  return got == want ? "" : what + ": got " + got + ", expected " + want + "\n";
}

inline TerminalData triple_example() { return {make_quiver(3, {{1, 2}, {1, 2}, {2, 3}}), {2, 1, 1}}; }

/// x(1), ..., x(7) = (1,0), (2,0), (1,1), (3,0), (2,1), (1,2), (3,1).
inline Ordering triple_ordering() { return {{1, 0}, {2, 0}, {1, 1}, {3, 0}, {2, 1}, {1, 2}, {3, 1}}; }

inline TerminalData five_vertex_example() {
  return {make_quiver(5, {{3, 1}, {3, 5}, {3, 5}, {5, 2}, {2, 4}}), {3, 2, 3, 1, 2}};
}

inline TerminalData e8_example(int level) {
  std::vector<Arrow> arrows{{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}};
  return {make_quiver(8, arrows), std::vector<int>(8, level)};
}

inline std::string check_dimvecs() {
  auto cat = build_category(triple_example());
  std::string err;
  const std::vector<std::pair<IntervalLabel, std::string>> want{
      {{1, 2, 2}, "(1,3,9 | 2,6 | 0,2)"}, {{1, 1, 2}, "(1,4,12 | 2,8 | 0,2)"}, {{1, 0, 2}, "(1,4,13 | 2,8 | 0,2)"},
      {{2, 1, 1}, "(0,2,6 | 1,4 | 0,1)"}, {{2, 0, 1}, "(0,2,8 | 1,5 | 0,1)"}, {{3, 1, 1}, "(0,2,4 | 1,3 | 1,0)"},
      {{3, 0, 1}, "(0,2,6 | 1,4 | 1,1)"}};
  for (const auto& [l, s] : want) err += expect_eq(to_string(l), triangle(cat, projected_dimvec(cat, l)), s);
  Seed seed = initial_seed(cat, canonical_ordering(cat), false);
  auto k = seed.find_label({1, 1, 2});
  if (!k) return err + "no vertex labelled T{1,[1,2]}\n";
  auto m = mutate(seed, *k);
  err += expect_eq("mutated dimension vector", triangle(cat, m.dim->value), "(0,4,13 | 2,8 | 0,2)");
  return err;
}

inline std::string check_delta() {
  auto cat = build_category(triple_example());
  auto ord = triple_ordering();
  std::string err = expect_eq("dDelta", triangle(cat, delta_dims(cat, ord)), "(23,6,1 | 14,3 | 11,4)");
  Seed seed = initial_seed(cat, ord, false);
  auto m = mutate(seed, *seed.find_label({1, 1, 2}));
  err += expect_eq("mutated Delta vector", triangle(cat, m.delta->value), "(0,0,1 | 2,0 | 0,0)");
  return err;
}

inline std::string check_five_vertex_path() {
  auto cat = build_category(five_vertex_example());
  auto sch = make_schedule(cat);
  auto res = run_path(cat, initial_seed(cat, canonical_ordering(cat), false), sch);
  std::string err = expect_eq("steps", std::to_string(res.steps.size()), "19");
  std::set<IntervalLabel> want, got;
  for (const auto& x : cat.vertices) want.insert({x.i, 0, x.a});
  for (const auto& l : res.seed.labels)
    if (l) got.insert(*l);
  if (got != want) err += "final labels are not the T{i,[0,b]}\n";
  if (!final_matrix_matches(cat, res.seed)) err += "final matrix differs from the dual quiver\n";
  return err;
}

inline std::string check_e8_count() {
  auto td = e8_example(14);
  check_terminal(td);
  std::string err = expect_eq("r(M)", std::to_string(schedule_length(td.t)), "840");
  auto sch = make_schedule(build_category(td));
  return err + expect_eq("schedule length", std::to_string(sch.steps.size()), "840");
}

inline std::string check_exchange_relations() {
  auto cat = build_category(triple_example());
  PbwExpander pbw(cat);
  auto names = pbw_names(cat);
  std::string err;
  const std::vector<std::string> want{
      "T{1,[0,1]} = T{1,[1,1]}*T{1,[0,0]} - T{2,[0,0]}*T{2,[0,0]}",
      "T{2,[0,1]} = T{2,[1,1]}*T{2,[0,0]} - T{1,[1,1]}*T{1,[1,1]}*T{3,[0,0]}",
      "T{3,[0,1]} = T{3,[1,1]}*T{3,[0,0]} - T{2,[1,1]}",
  };
  for (int i = 1; i <= 3; ++i)
    err += expect_eq("relation " + std::to_string(i), det_identity(cat, i, 1, 1).to_string(), want[i - 1]);
  const std::string t102 =
      "-T{1,[1,1]}^3*T{3,[0,0]}^2 + 2*T{1,[1,1]}*T{2,[1,1]}*T{2,[0,0]}*T{3,[0,0]} + "
      "T{1,[2,2]}*T{1,[1,1]}*T{1,[0,0]} - T{1,[2,2]}*T{2,[0,0]}^2 - T{1,[0,0]}*T{2,[1,1]}^2";
  if (pbw.expand({1, 0, 2}) != parse_laurent<BigInt>(t102, names))
    err += "T{1,[0,2]}: got " + pbw.expand({1, 0, 2}).to_string(names) + "\n";
  return err;
}

inline std::string check_euler() {
  auto cat = build_category(triple_example());
  auto ord = triple_ordering();
  std::string err;
  err += expect_eq("g_1", g_module(cat, ord, 1).to_string(), "w[1]");
  err += expect_eq("g_2", g_module(cat, ord, 2).to_string(), "2·w[2,1,1]");
  err += expect_eq("g_3", g_module(cat, ord, 3).to_string(), "4·w[1,2,1,2,1,1] + 12·w[1,2,2,1,1,1]");
  err += expect_eq("g_4", g_module(cat, ord, 4).to_string(), "2·w[3,2,1,1]");
  err += expect_eq("|g_5|", std::to_string(g_module(cat, ord, 5).size()), "402");
  auto g7 = g_module(cat, ord, 7);
  err += expect_eq("|g_7|", std::to_string(g7.size()), "10");
  err += expect_eq("g_7 leading", detail::coeff_string(g7.coeff({3, 2, 1, 1, 2, 2, 2, 1, 1, 1, 1})), "288");
  return err;
}

inline std::string check_minors() {
  auto x = unitriangular(5);
  auto names = default_names(upper_count(5), "x");
  std::string err = expect_eq("D{2,3}{3,5}", minor(x, {{2, 3}, {3, 5}}).to_string(names), "x5*x9 - x7");
  const std::vector<std::pair<MeshVertex, std::string>> table{{{1, 0}, "x4"}, {{2, 0}, "x7"}, {{2, 1}, "x3"},
                                                             {{3, 0}, "x9"}, {{3, 1}, "x6"}, {{3, 2}, "x2"},
                                                             {{4, 0}, "x10"}, {{4, 1}, "x8"}, {{4, 2}, "x5"},
                                                             {{4, 3}, "x1"}};
  for (const auto& [v, s] : table)
    err += expect_eq("z" + to_string(v), minor(x, interval_minor_key(v.i, v.a, v.a, 4)).to_string(names), s);
  return err;
}

inline std::string check_eta() {
  std::string err;
  for (const auto& e : eta_entries(4))
    if (!e.ok) err += to_string(e.label) + " does not match " + to_string(e.key) + "\n";
  return err;
}

inline std::string check_roots() {
  TerminalData td{make_quiver(3, {{1, 2}, {1, 3}, {2, 3}}), {2, 1, 1}};
  auto cat = build_category(td);
  auto roots = inversion_roots(adapted_word(cat, canonical_ordering(cat)), cartan(td.q));
  std::set<RootVec> got(roots.begin(), roots.end());
  std::set<RootVec> knitted(cat.dims.begin(), cat.dims.end());
  std::set<RootVec> want{{1, 0, 0}, {1, 1, 0}, {2, 1, 1}, {2, 2, 1}, {3, 2, 2}, {3, 3, 2}, {4, 3, 3}};
  std::string err;
  if (got != want) err += "inversion set differs from the seven listed roots\n";
  if (knitted != want) err += "knitted dimension vectors differ from the seven listed roots\n";
  return err;
}

inline std::string check_thin_identities() {
  auto g = [](std::vector<int> slots, std::vector<std::pair<int, int>> arrows) {
    return flag_oracle({std::move(slots), std::move(arrows)});
  };
  auto w = [](int i) { return ShuffleSeries::word({i}); };
  const auto g12 = g({1, 2}, {{0, 1}}), g21 = g({2, 1}, {{0, 1}});
  const auto g32 = g({3, 2}, {{0, 1}}), g23 = g({2, 3}, {{0, 1}});
  const auto g132 = g({1, 3, 2}, {{0, 2}, {1, 2}}), g213 = g({2, 1, 3}, {{0, 1}, {0, 2}});
  std::string err;
  if (g12 != shuffle(w(1), w(2)) - g21) err += "1\\2 identity fails\n";
  if (g32 != shuffle(w(3), w(2)) - g23) err += "3\\2 identity fails\n";
  auto rhs = g213 + shuffle(shuffle(w(1), w(2)), w(3)) - shuffle(w(1), g23) - shuffle(w(3), g21);
  if (g132 != rhs) err += "(1,3)\\2 identity fails\n";
  return err;
}

}  // namespace detail

/// The built-in example checks, in manifest order.
inline std::vector<ExampleCheck> example_checks() {
  return {
      {"dimvec-triple", "projected dimension vectors for 1=>2->3, t=(2,1,1), and one mutation", detail::check_dimvecs},
      {"delta-triple", "dDelta and one Delta-vector mutation for 1=>2->3", detail::check_delta},
      {"path-five-vertex", "19-step schedule, final labels and final matrix", detail::check_five_vertex_path},
      {"path-e8-count", "E8 with t=14 needs 840 mutations", detail::check_e8_count},
      {"pbw-triple", "exchange relations and dual PBW expansion of T{1,[0,2]}", detail::check_exchange_relations},
      {"euler-triple", "g_{T_k} for k = 1..5 and 7", detail::check_euler},
      {"minors-a4", "D{2,3}{3,5} and the x-variable table", detail::check_minors},
      {"eta-a4", "dual PBW expansions against minors for linear A4", detail::check_eta},
      {"roots-triangle", "inversion set of the adapted word against knitted dimension vectors", detail::check_roots},
      {"thin-a3", "shuffle identities for thin A3 modules", detail::check_thin_identities},
  };
}

inline CheckResult run_check(const ExampleCheck& c) {
  CheckResult r{c.id, c.description, false, "", 0};
  auto start = std::chrono::steady_clock::now();
  try {
    r.detail = c.run();
    r.passed = r.detail.empty();
  } catch (const std::exception& e) {
    r.detail = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

/// Run the checks on up to `jobs` threads; results keep the input order.
inline std::vector<CheckResult> run_checks(const std::vector<ExampleCheck>& checks, int jobs = 1) {
  std::vector<CheckResult> out(checks.size());
  const std::size_t width = static_cast<std::size_t>(std::max(1, jobs));
  for (std::size_t start = 0; start < checks.size(); start += width) {
    std::vector<std::future<CheckResult>> batch;
    for (std::size_t k = start; k < std::min(checks.size(), start + width); ++k)
      batch.push_back(std::async(width > 1 ? std::launch::async : std::launch::deferred,
                                 [&checks, k] { return run_check(checks[k]); }));
    for (std::size_t k = 0; k < batch.size(); ++k) out[start + k] = batch[k].get();
  }
  return out;
}

inline Json manifest_json(const std::vector<CheckResult>& results) {
  Json checks = Json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    Json c{{"id", r.id}, {"description", r.description}, {"status", r.passed ? "pass" : "fail"}};
    if (!r.detail.empty()) c["detail"] = r.detail;
    checks.push_back(c);
  }
  return {{"checks", checks}, {"passed", all}};
}

}  // namespace meshclust
