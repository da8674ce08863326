#pragma once

// Truncated translation quivers of terminal modules: knitting of
// dimension vectors and hom dimensions in the mesh category.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "meshclust/errors.hpp"
#include "meshclust/quiver.hpp"

namespace meshclust {

/// A quiver together with its level vector t.
struct TerminalData {
  Quiver q;
  std::vector<int> t;
  friend bool operator==(const TerminalData&, const TerminalData&) = default;
};

/// The vertex (i, a) of the translation quiver, standing for tau^a(I_i).
struct MeshVertex {
  int i = 0;
  int a = 0;
  auto operator<=>(const MeshVertex&) const = default;
};

/// T_{i,[a,b]}; a > b denotes the unit.
struct IntervalLabel {
  int i = 0;
  int a = 0;
  int b = 0;
  bool is_unit() const { return a > b; }
  auto operator<=>(const IntervalLabel&) const = default;
};

using Ordering = std::vector<MeshVertex>;

inline std::string to_string(const MeshVertex& v) {
  return "(" + std::to_string(v.i) + "," + std::to_string(v.a) + ")";
}

inline std::string to_string(const IntervalLabel& l) {
  return "T{" + std::to_string(l.i) + ",[" + std::to_string(l.a) + "," + std::to_string(l.b) + "]}";
}

/// Check t against the quiver: one entry per vertex, nonnegative, and
/// t_u - 1 <= t_v <= t_u for every arrow u -> v.
inline void check_terminal(const TerminalData& td) {
  if (static_cast<int>(td.t.size()) != td.q.n)
    throw TerminalConstraintError("expected " + std::to_string(td.q.n) + " levels, got " + std::to_string(td.t.size()));
  for (int i = 0; i < td.q.n; ++i)
    if (td.t[i] < 0) throw TerminalConstraintError("negative level at vertex " + std::to_string(i + 1));
  for (const auto& [u, v] : td.q.arrows) {
    int tu = td.t[u - 1], tv = td.t[v - 1];
    if (tv > tu || tv < tu - 1)
      throw TerminalConstraintError("arrow " + std::to_string(u) + "->" + std::to_string(v) + " needs t_" +
                                    std::to_string(u) + "-1 <= t_" + std::to_string(v) + " <= t_" + std::to_string(u));
  }
}

namespace detail {

/// paths[j][i] = number of directed paths j -> i (0-based indices).
inline std::vector<std::vector<long long>> path_counts(const Quiver& q) {
  std::vector<std::vector<long long>> paths(q.n, std::vector<long long>(q.n, 0));
  std::vector<int> order = topological_order(q);
  for (int j = 0; j < q.n; ++j) paths[j][j] = 1;
  for (int v : order)
    for (const auto& [s, t] : q.arrows)
      if (s == v)
        for (int j = 0; j < q.n; ++j) paths[j][t - 1] += paths[j][s - 1];
  return paths;
}

inline bool valid_dimvec(const RootVec& d) {
  bool nonzero = false;
  for (long long x : d) {
    if (x < 0) return false;
    if (x > 0) nonzero = true;
  }
  return nonzero;
}

/// Knit tau-orbits up to the given per-vertex bounds.  In strict mode every
/// requested vertex must exist; otherwise an orbit stops at its first
/// nonpositive vector and the result records where it stopped.
inline std::map<MeshVertex, RootVec> knit(const Quiver& q, const std::vector<int>& bound, bool strict) {
  std::map<MeshVertex, RootVec> dims;
  auto paths = path_counts(q);
  for (int i = 1; i <= q.n; ++i) {
    RootVec d(q.n);
    for (int j = 1; j <= q.n; ++j) d[j - 1] = paths[j - 1][i - 1];
    dims[{i, 0}] = d;
  }
  std::vector<int> order = topological_order(q);
  int top = *std::max_element(bound.begin(), bound.end());
  std::vector<bool> alive(q.n + 1, true);
  auto lookup = [&](int i, int a) -> const RootVec* {
    auto it = dims.find({i, a});
    return it == dims.end() ? nullptr : &it->second;
  };
  for (int z = 0; z < top; ++z) {
    bool any = false;
    for (int i : order) {
      if (!alive[i] || z + 1 > bound[i - 1]) continue;
      const RootVec* self = lookup(i, z);
      if (!self) {
        alive[i] = false;
        continue;
      }
      RootVec d(q.n, 0);
      for (const auto& [s, t] : q.arrows) {
        const RootVec* mid = nullptr;
        if (s == i) mid = lookup(t, z);
        if (t == i) mid = lookup(s, z + 1);
        if (mid)
          for (int j = 0; j < q.n; ++j) d[j] += (*mid)[j];
      }
      for (int j = 0; j < q.n; ++j) d[j] -= (*self)[j];
      if (!valid_dimvec(d)) {
        if (strict)
          throw DynkinOverflowError("tau^" + std::to_string(z + 1) + "(I_" + std::to_string(i) +
                                    ") does not exist; t_" + std::to_string(i) + " is too large");
        alive[i] = false;
        continue;
      }
      dims[{i, z + 1}] = std::move(d);
      any = true;
    }
    if (!any && !strict) break;
  }
  return dims;
}

}  // namespace detail

/// Dimension vectors of the modules tau^a(I_i), 0 <= a <= t_i.
inline std::map<MeshVertex, RootVec> dim_vectors(const TerminalData& td) {
  check_terminal(td);
  return detail::knit(td.q, td.t, true);
}

/// Levels of the full preinjective component of a Dynkin quiver.
inline std::vector<int> dynkin_levels(const Quiver& q, int bound = 512) {
  auto dims = detail::knit(q, std::vector<int>(q.n, bound), false);
  std::vector<int> t(q.n, 0);
  for (const auto& [v, d] : dims) t[v.i - 1] = std::max(t[v.i - 1], v.a);
  for (int x : t)
    if (x >= bound) throw DynkinOverflowError("quiver is not of finite type");
  return t;
}

/// Everything derived from terminal data: vertices, mesh quivers,
/// dimension vectors and the hom table.
///
/// Vertices are stored by vertex of Q ascending and level descending.
/// The mesh quivers use vertex k+1 for vertices[k].
struct CategoryModel {
  TerminalData terminal;
  std::vector<MeshVertex> vertices;
  std::map<MeshVertex, std::size_t> index_of;
  Quiver gammaM;
  Quiver gammaMStar;
  std::vector<RootVec> dims;
  std::vector<std::vector<long long>> homTable;

  std::size_t size() const { return vertices.size(); }
  int n() const { return terminal.q.n; }
  int level(int i) const { return terminal.t[i - 1]; }
  bool contains(const MeshVertex& v) const { return index_of.count(v) > 0; }

  std::size_t index(const MeshVertex& v) const {
    auto it = index_of.find(v);
    if (it == index_of.end()) throw IndexError("no vertex " + to_string(v));
    return it->second;
  }

  const RootVec& dim(const MeshVertex& v) const { return dims[index(v)]; }
};

namespace detail {

/// Knit h = dim Hom(M_x, -) from x down to level 0.
inline std::vector<long long> hom_row(const CategoryModel& cat, std::size_t x,
                                      const std::vector<int>& sinks_first) {
  const Quiver& q = cat.terminal.q;
  std::vector<long long> h(cat.size(), 0);
  const MeshVertex top = cat.vertices[x];
  auto get = [&](int i, int a) -> long long {
    auto it = cat.index_of.find({i, a});
    return it == cat.index_of.end() ? 0 : h[it->second];
  };
  for (int c = top.a; c >= 0; --c) {
    for (int l : sinks_first) {
      auto it = cat.index_of.find({l, c});
      if (it == cat.index_of.end()) continue;
      long long val = -get(l, c + 1);
      for (const auto& [s, t] : q.arrows) {
        if (s == l) val += get(t, c);
        if (t == l) val += get(s, c + 1);
      }
      if (it->second == x) val += 1;
      h[it->second] = val;
    }
  }
  return h;
}

}  // namespace detail

inline CategoryModel build_category(const TerminalData& td) {
  CategoryModel cat;
  cat.terminal = td;
  auto dims = dim_vectors(td);
  const Quiver& q = td.q;
  for (int i = 1; i <= q.n; ++i)
    for (int a = td.t[i - 1]; a >= 0; --a) cat.vertices.push_back({i, a});
  for (std::size_t k = 0; k < cat.vertices.size(); ++k) {
    cat.index_of[cat.vertices[k]] = k;
    cat.dims.push_back(dims.at(cat.vertices[k]));
  }
  const int r = static_cast<int>(cat.vertices.size());
  // For u -> v in Q: (v,z) -> (u,z) and (u,z+1) -> (v,z).  Reading the
  // arrows of Q^op the other way round flips every mesh arrow and breaks
  // the hom triangles.
  std::vector<Arrow> mesh;
  for (const auto& [u, v] : q.arrows) {
    for (int z = 0; z <= std::max(td.t[u - 1], td.t[v - 1]); ++z) {
      if (cat.contains({v, z}) && cat.contains({u, z}))
        mesh.emplace_back(cat.index_of[{v, z}] + 1, cat.index_of[{u, z}] + 1);
      if (cat.contains({u, z + 1}) && cat.contains({v, z}))
        mesh.emplace_back(cat.index_of[{u, z + 1}] + 1, cat.index_of[{v, z}] + 1);
    }
  }
  cat.gammaM = make_quiver(r, mesh);
  for (const auto& x : cat.vertices)
    if (cat.contains({x.i, x.a + 1})) mesh.emplace_back(cat.index_of[x] + 1, cat.index_of[{x.i, x.a + 1}] + 1);
  cat.gammaMStar = make_quiver(r, mesh);

  std::vector<int> sinks_first = topological_order(q);
  std::reverse(sinks_first.begin(), sinks_first.end());
  cat.homTable.resize(r);
  for (int x = 0; x < r; ++x) cat.homTable[x] = detail::hom_row(cat, x, sinks_first);
  return cat;
}

/// dim Hom(M_x, M_z).
inline long long hom_dim(const CategoryModel& cat, const MeshVertex& x, const MeshVertex& z) {
  return cat.homTable[cat.index(x)][cat.index(z)];
}

inline void check_label(const CategoryModel& cat, const IntervalLabel& l) {
  if (l.i < 1 || l.i > cat.n() || l.a < 0 || l.a > l.b || l.b > cat.level(l.i))
    throw IndexError("invalid label " + to_string(l));
}

/// Entry at x(s): sum over a <= l <= b of dim Hom(M_{(i,l)}, M_{x(s)}).
inline std::vector<long long> projected_dimvec(const CategoryModel& cat, const IntervalLabel& l) {
  check_label(cat, l);
  std::vector<long long> out(cat.size(), 0);
  for (int c = l.a; c <= l.b; ++c) {
    const auto& row = cat.homTable[cat.index({l.i, c})];
    for (std::size_t s = 0; s < out.size(); ++s) out[s] += row[s];
  }
  return out;
}

/// Indicator vector of {(i,l) : a <= l <= b}.
inline std::vector<long long> interval_indicator(const CategoryModel& cat, const IntervalLabel& l) {
  check_label(cat, l);
  std::vector<long long> out(cat.size(), 0);
  for (int c = l.a; c <= l.b; ++c) out[cat.index({l.i, c})] = 1;
  return out;
}

/// Dimension vector of the Lambda-module T_{i,[a,b]}.
inline RootVec label_dim(const CategoryModel& cat, const IntervalLabel& l) {
  check_label(cat, l);
  RootVec d(cat.n(), 0);
  for (int c = l.a; c <= l.b; ++c) {
    const auto& v = cat.dim({l.i, c});
    for (int j = 0; j < cat.n(); ++j) d[j] += v[j];
  }
  return d;
}

/// Level ascending, ties by a sources-first topological order of Q.
inline Ordering canonical_ordering(const CategoryModel& cat) {
  std::vector<int> topo = topological_order(cat.terminal.q);
  std::vector<int> rank(cat.n() + 1);
  for (std::size_t k = 0; k < topo.size(); ++k) rank[topo[k]] = static_cast<int>(k);
  Ordering ord = cat.vertices;
  std::sort(ord.begin(), ord.end(), [&](const MeshVertex& x, const MeshVertex& y) {
    if (x.a != y.a) return x.a < y.a;
    return rank[x.i] < rank[y.i];
  });
  return ord;
}

/// Throws NotAdaptedError unless ord lists every vertex once and every
/// arrow x(j) -> x(i) of the mesh quiver has j > i.
inline void validate_ordering(const CategoryModel& cat, const Ordering& ord) {
  if (ord.size() != cat.size())
    throw NotAdaptedError("ordering has " + std::to_string(ord.size()) + " entries, expected " + std::to_string(cat.size()));
  std::vector<int> pos(cat.size(), -1);
  for (std::size_t k = 0; k < ord.size(); ++k) {
    if (!cat.contains(ord[k])) throw NotAdaptedError("unknown vertex " + to_string(ord[k]));
    auto idx = cat.index(ord[k]);
    if (pos[idx] >= 0) throw NotAdaptedError("vertex " + to_string(ord[k]) + " listed twice");
    pos[idx] = static_cast<int>(k);
  }
  for (const auto& [s, t] : cat.gammaM.arrows)
    if (pos[s - 1] <= pos[t - 1])
      throw NotAdaptedError("arrow " + to_string(cat.vertices[s - 1]) + " -> " + to_string(cat.vertices[t - 1]) +
                            " goes forward in the ordering");
}

/// d_Delta: entry at x(j) is the sum over j' <= j of dim Hom(M_{x(j)}, M_{x(j')}).
inline std::vector<long long> delta_dims(const CategoryModel& cat, const Ordering& ord) {
  validate_ordering(cat, ord);
  std::vector<long long> out(cat.size(), 0);
  for (std::size_t j = 0; j < ord.size(); ++j) {
    auto x = cat.index(ord[j]);
    for (std::size_t jp = 0; jp <= j; ++jp) out[x] += cat.homTable[x][cat.index(ord[jp])];
  }
  return out;
}

/// Letters i_j = first coordinate of x(j), checked for adaptedness.
inline ReducedWord adapted_word(const CategoryModel& cat, const Ordering& ord) {
  validate_ordering(cat, ord);
  ReducedWord letters;
  for (const auto& x : ord) letters.push_back(x.i);
  return adapted_word(cat.terminal.q, letters);
}

/// "(1,3,9 | 2,6 | 0,2)": entries grouped by vertex of Q, levels descending.
inline std::string triangle(const CategoryModel& cat, const std::vector<long long>& v) {
  std::string out = "(";
  for (std::size_t k = 0; k < cat.size(); ++k) {
    if (k > 0) out += cat.vertices[k].i != cat.vertices[k - 1].i ? " | " : ",";
    out += std::to_string(v[k]);
  }
  return out + ")";
}

}  // namespace meshclust
