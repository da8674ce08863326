#pragma once

// JSON and text serialization, reports and DOT export.

#include <cstddef>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "meshclust/cluster.hpp"
#include "meshclust/errors.hpp"
#include "meshclust/euler.hpp"
#include "meshclust/exchange.hpp"
#include "meshclust/laurent.hpp"
#include "meshclust/mesh.hpp"
#include "meshclust/minors.hpp"
#include "meshclust/quiver.hpp"
#include "meshclust/rigidpath.hpp"

namespace meshclust {

using Json = nlohmann::ordered_json;

namespace detail {

template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

inline std::string join_ints(const std::vector<long long>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? sep : "") + std::to_string(v[k]);
  return s;
}

}  // namespace detail

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return detail::guarded("reading JSON", [&] { return Json::parse(in); });
}

inline std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    try {
      out.push_back(std::stoi(item, &used));
    } catch (const std::exception&) {
      throw ParseError("bad integer '" + item + "' in '" + text + "'");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos) throw ParseError("bad integer '" + item + "'");
  }
  return out;
}

// Quiver: {"n": 3, "arrows": [[1,2], [1,2], [2,3]]}

inline Json to_json(const Quiver& q) {
  Json arrows = Json::array();
  for (const auto& [s, t] : q.arrows) arrows.push_back({s, t});
  return {{"n", q.n}, {"arrows", arrows}};
}

inline Quiver quiver_from_json(const Json& j) {
  return detail::guarded("quiver JSON", [&] {
    std::vector<Arrow> arrows;
    for (const auto& a : j.at("arrows")) {
      if (a.size() != 2) throw ParseError("arrow must be a pair");
      arrows.emplace_back(a[0].get<int>(), a[1].get<int>());
    }
    return validate_quiver(j.at("n").get<int>(), std::move(arrows));
  });
}

inline Json to_json(const TerminalData& td) { return {{"quiver", to_json(td.q)}, {"t", td.t}}; }

inline TerminalData terminal_from_json(const Json& j) {
  return detail::guarded("terminal JSON", [&] {
    TerminalData td{quiver_from_json(j.at("quiver")), j.at("t").get<std::vector<int>>()};
    check_terminal(td);
    return td;
  });
}

// Ordering: [[1,0], [2,0], ...]

inline Json to_json(const Ordering& ord) {
  Json out = Json::array();
  for (const auto& x : ord) out.push_back({x.i, x.a});
  return out;
}

inline Ordering ordering_from_json(const Json& j) {
  return detail::guarded("ordering JSON", [&] {
    Ordering ord;
    for (const auto& x : j) {
      if (x.size() != 2) throw ParseError("ordering entry must be [i, a]");
      ord.push_back({x[0].get<int>(), x[1].get<int>()});
    }
    return ord;
  });
}

inline Json to_json(const IntervalLabel& l) { return {l.i, l.a, l.b}; }

inline IntervalLabel label_from_json(const Json& j) {
  return detail::guarded("label JSON", [&] {
    if (j.size() != 3) throw ParseError("label must be [i, a, b]");
    return IntervalLabel{j[0].get<int>(), j[1].get<int>(), j[2].get<int>()};
  });
}

// Laurent: {"nvars": 2, "terms": [[[1,-1], "3"], ...]}, coefficients as strings.

template <class C>
Json to_json(const Laurent<C>& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({e, detail::coeff_string(c)});
  return {{"nvars", p.nvars()}, {"terms", terms}};
}

template <class C>
Laurent<C> laurent_from_json(const Json& j) {
  return detail::guarded("Laurent JSON", [&] {
    const std::size_t n = j.at("nvars").get<std::size_t>();
    Laurent<C> p(n);
    for (const auto& t : j.at("terms")) {
      auto e = t.at(0).get<Exponents>();
      if (e.size() != n) throw ArityMismatchError("exponent vector of length " + std::to_string(e.size()));
      p.add_term(e, detail::parse_coeff<C>(t.at(1).get<std::string>()));
    }
    return p;
  });
}

// Exchange matrix: {"b": [[...], ...], "frozen": [1-based indices]}

inline Json to_json(const ExchangeMatrix& m) {
  Json frozen = Json::array();
  for (std::size_t k = 0; k < m.size(); ++k)
    if (m.frozen[k]) frozen.push_back(k + 1);
  return {{"b", m.b}, {"frozen", frozen}};
}

inline ExchangeMatrix matrix_from_json(const Json& j) {
  return detail::guarded("matrix JSON", [&] {
    ExchangeMatrix m;
    m.b = j.at("b").get<std::vector<std::vector<long long>>>();
    for (const auto& row : m.b)
      if (row.size() != m.b.size()) throw ShapeError("exchange matrix must be square");
    m.frozen.assign(m.b.size(), false);
    if (j.contains("frozen"))
      for (auto k : j.at("frozen").get<std::vector<std::size_t>>()) {
        if (k < 1 || k > m.b.size()) throw IndexError("frozen index " + std::to_string(k) + " out of range");
        m.frozen[k - 1] = true;
      }
    if (!principal_part_skew(m)) throw ShapeError("mutable part must be skew-symmetric");
    return m;
  });
}

// Seed: matrix plus optional names, vars (text in the names), labels,
// trackers and terminal data.

inline Json to_json(const Seed& s) {
  Json j;
  j["matrix"] = to_json(s.matrix);
  j["names"] = s.names;
  if (s.vars) {
    Json vars = Json::array();
    for (const auto& v : *s.vars) vars.push_back(v.to_string(s.names));
    j["vars"] = vars;
  }
  if (!s.labels.empty()) {
    Json labels = Json::array();
    for (const auto& l : s.labels) labels.push_back(l ? to_json(*l) : Json(nullptr));
    j["labels"] = labels;
  }
  if (s.dimTracker) j["dimTracker"] = *s.dimTracker;
  if (s.deltaTracker) j["deltaTracker"] = *s.deltaTracker;
  if (!s.dDelta.empty()) j["dDelta"] = s.dDelta;
  if (s.terminal) j["terminal"] = to_json(*s.terminal);
  return j;
}

inline Seed seed_from_json(const Json& j) {
  return detail::guarded("seed JSON", [&] {
    Seed s;
    s.matrix = matrix_from_json(j.at("matrix"));
    const std::size_t r = s.size();
    s.names = j.contains("names") ? j.at("names").get<std::vector<std::string>>() : default_names(r);
    if (s.names.size() != r) throw ArityMismatchError("expected " + std::to_string(r) + " names");
    if (j.contains("vars")) {
      std::vector<LaurentPoly> vars;
      for (const auto& v : j.at("vars")) {
        const auto& p = vars.emplace_back(v.is_string() ? parse_laurent<BigInt>(v.get<std::string>(), s.names)
                                                        : laurent_from_json<BigInt>(v));
        if (p.nvars() != r) throw ArityMismatchError("cluster variable in " + std::to_string(p.nvars()) + " variables");
      }
      if (vars.size() != r) throw ArityMismatchError("expected " + std::to_string(r) + " cluster variables");
      s.vars = std::move(vars);
    } else if (!j.contains("dimTracker")) {
      s.vars = plain_seed(s.matrix).vars;
    }
    if (j.contains("labels")) {
      for (const auto& l : j.at("labels"))
        s.labels.push_back(l.is_null() ? std::nullopt : std::optional<IntervalLabel>(label_from_json(l)));
      if (s.labels.size() != r) throw ArityMismatchError("expected " + std::to_string(r) + " labels");
    } else {
      s.labels.assign(r, std::nullopt);
    }
    auto tracker = [&](const char* key) -> std::optional<std::vector<IntVec>> {
      if (!j.contains(key)) return std::nullopt;
      auto t = j.at(key).get<std::vector<IntVec>>();
      if (t.size() != r) throw ArityMismatchError(std::string(key) + " needs one vector per vertex");
      for (const auto& v : t)
        if (v.size() != t[0].size()) throw ArityMismatchError(std::string(key) + " vectors differ in length");
      return t;
    };
    s.dimTracker = tracker("dimTracker");
    s.deltaTracker = tracker("deltaTracker");
    if (j.contains("dDelta")) s.dDelta = j.at("dDelta").get<IntVec>();
    if (j.contains("terminal")) {
      s.terminal = terminal_from_json(j.at("terminal"));
      s.labelIndex = label_index(build_category(*s.terminal));
    }
    return s;
  });
}

// Shuffle series: {"2,1,1": "2", "": "1"}

inline Json to_json(const ShuffleSeries& s) {
  Json j = Json::object();
  for (const auto& [w, c] : s.terms()) {
    std::vector<long long> v(w.begin(), w.end());
    j[detail::join_ints(v)] = detail::coeff_string(c);
  }
  return j;
}

inline ShuffleSeries series_from_json(const Json& j) {
  return detail::guarded("series JSON", [&] {
    ShuffleSeries s;
    for (const auto& [key, val] : j.items()) {
      Word w = key.empty() ? Word{} : parse_int_list(key);
      s.add(w, detail::parse_coeff<BigRational>(val.get<std::string>()));
    }
    return s;
  });
}

// Category report.

inline Json category_json(const CategoryModel& cat, const Ordering& ord) {
  Json j;
  j["terminal"] = to_json(cat.terminal);
  Json verts = Json::array();
  for (std::size_t k = 0; k < cat.size(); ++k)
    verts.push_back({{"vertex", {cat.vertices[k].i, cat.vertices[k].a}}, {"dim", cat.dims[k]}});
  j["vertices"] = verts;
  j["gammaM"] = to_json(cat.gammaM);
  j["gammaMStar"] = to_json(cat.gammaMStar);
  j["homTable"] = cat.homTable;
  j["ordering"] = to_json(ord);
  j["dDelta"] = delta_dims(cat, ord);
  if (cat.size() > 0) j["word"] = adapted_word(cat, ord);
  Json proj = Json::array();
  for (const auto& x : cat.vertices) {
    IntervalLabel l{x.i, x.a, cat.level(x.i)};
    proj.push_back({{"label", to_json(l)}, {"dims", projected_dimvec(cat, l)}});
  }
  j["initialDimvecs"] = proj;
  return j;
}

inline std::string category_text(const CategoryModel& cat, const Ordering& ord) {
  std::ostringstream out;
  const auto& q = cat.terminal.q;
  out << "quiver: n=" << q.n << " arrows";
  for (const auto& [s, t] : q.arrows) out << " " << s << "->" << t;
  out << "\nlevels: t = (" << detail::join_ints({cat.terminal.t.begin(), cat.terminal.t.end()}) << ")\n";
  out << "vertices: " << cat.size() << "\n";
  for (std::size_t k = 0; k < cat.size(); ++k)
    out << "  " << k + 1 << " " << to_string(cat.vertices[k]) << " dim (" << detail::join_ints(cat.dims[k]) << ")\n";
  out << "arrows of Gamma_M*:\n";
  for (const auto& [s, t] : cat.gammaMStar.arrows) {
    const auto& x = cat.vertices[s - 1];
    const auto& y = cat.vertices[t - 1];
    out << "  " << to_string(x) << " -> " << to_string(y) << (x.i == y.i ? " tau" : "") << "\n";
  }
  out << "homTable (row x, column z: dim Hom(M_x, M_z)):\n";
  for (const auto& row : cat.homTable) out << "  " << detail::join_ints(row, " ") << "\n";
  out << "ordering:";
  for (const auto& x : ord) out << " " << to_string(x);
  out << "\nword: ";
  if (cat.size() > 0) {
    auto w = adapted_word(cat, ord);
    out << detail::join_ints({w.begin(), w.end()});
  }
  out << "\ndDelta: " << triangle(cat, delta_dims(cat, ord)) << "\n";
  out << "initial projected dimension vectors:\n";
  for (const auto& x : cat.vertices) {
    IntervalLabel l{x.i, x.a, cat.level(x.i)};
    out << "  " << to_string(l) << " " << triangle(cat, projected_dimvec(cat, l)) << "\n";
  }
  return out.str();
}

/// Gamma_M* in DOT; tau-arrows dashed, level-0 vertices boxed.
inline std::string category_dot(const CategoryModel& cat) {
  std::ostringstream out;
  out << "digraph GammaMStar {\n  rankdir=RL;\n";
  for (std::size_t k = 0; k < cat.size(); ++k) {
    const auto& x = cat.vertices[k];
    out << "  v" << k + 1 << " [label=\"" << to_string(x) << "\"" << (x.a == 0 ? ", shape=box" : "") << "];\n";
  }
  for (const auto& [s, t] : cat.gammaMStar.arrows) {
    bool tau = cat.vertices[s - 1].i == cat.vertices[t - 1].i;
    out << "  v" << s << " -> v" << t << (tau ? " [style=dashed]" : "") << ";\n";
  }
  out << "}\n";
  return out.str();
}

// Path report.

inline Json path_json(const CategoryModel& cat, const PathResult& res, bool matrixOk) {
  Json steps = Json::array();
  for (const auto& s : res.steps) {
    Json st;
    st["step"] = s.index;
    st["vertex"] = s.vertex + 1;
    st["from"] = to_json(s.before);
    st["to"] = to_json(s.after);
    st["identity"] = s.identity.to_string();
    st["dims"] = s.dims;
    if (!s.delta.empty()) st["delta"] = s.delta;
    st["dominance"] = s.dominance;
    steps.push_back(st);
  }
  Json labels = Json::array();
  for (const auto& l : res.seed.labels) labels.push_back(l ? to_json(*l) : Json(nullptr));
  Json j;
  j["terminal"] = to_json(cat.terminal);
  j["length"] = res.steps.size();
  j["steps"] = steps;
  j["finalLabels"] = labels;
  j["maxDominance"] = res.max_dominance();
  j["finalMatrixMatches"] = matrixOk;
  return j;
}

inline std::string path_text(const CategoryModel& cat, const PathResult& res, bool matrixOk, bool brief) {
  std::ostringstream out;
  out << "steps: " << res.steps.size() << "\n";
  if (!brief) {
    for (const auto& s : res.steps) {
      out << s.index << ". mutate " << s.vertex + 1 << " " << to_string(s.before) << " -> " << to_string(s.after)
          << "\n   " << s.identity.to_string() << "\n   dims " << triangle(cat, s.dims);
      if (!s.delta.empty()) out << "  delta " << triangle(cat, s.delta);
      out << (s.dominance ? "" : "  (no dominance)") << "\n";
    }
    out << "final labels:";
    for (const auto& l : res.seed.labels) out << " " << (l ? to_string(*l) : std::string("?"));
    out << "\n";
  }
  out << "max dominance: " << (res.max_dominance() ? "yes" : "no") << "\n";
  out << "final matrix matches B(Gamma_M*): " << (matrixOk ? "yes" : "no") << "\n";
  return out.str();
}

/// The matrix B(Gamma_M*) with frozen vertices (i, t_i), indexed so that
/// the label T_{i,[0,b]} sits at vertex (i, b).
inline ExchangeMatrix dual_matrix(const CategoryModel& cat) {
  std::vector<bool> frozen(cat.size());
  for (std::size_t k = 0; k < cat.size(); ++k) frozen[k] = cat.vertices[k].a == cat.level(cat.vertices[k].i);
  return b_matrix(cat.gammaMStar, frozen);
}

/// After a full run, compare the seed matrix with dual_matrix under the
/// label correspondence T_{i,[0,b]} <-> (i, b).
inline bool final_matrix_matches(const CategoryModel& cat, const Seed& s) {
  const std::size_t r = cat.size();
  std::vector<std::size_t> perm(r);
  for (std::size_t k = 0; k < r; ++k) {
    const auto& l = s.labels[k];
    if (!l || l->a != 0) return false;
    perm[k] = cat.index({l->i, l->b});
  }
  ExchangeMatrix expect = dual_matrix(cat);
  ExchangeMatrix got;
  got.b.assign(r, std::vector<long long>(r, 0));
  got.frozen.assign(r, false);
  for (std::size_t i = 0; i < r; ++i) {
    got.frozen[perm[i]] = s.matrix.frozen[i];
    for (std::size_t j = 0; j < r; ++j) got.b[perm[i]][perm[j]] = s.matrix.b[i][j];
  }
  return equal_mod_frozen(got, expect);
}

// Minor report.

inline Json minor_json(const MinorKey& k, const LaurentPoly& p, const std::vector<std::string>& names,
                       const std::optional<IntervalLabel>& label) {
  Json j{{"I", k.I}, {"J", k.J}, {"minor", p.to_string(names)}};
  if (label) j["label"] = to_json(*label);
  return j;
}

}  // namespace meshclust
