#pragma once

// Quivers, Cartan matrices, reflections and Weyl group actions.

#include <algorithm>
#include <cstddef>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "meshclust/errors.hpp"

namespace meshclust {

using Arrow = std::pair<int, int>;

/// A finite directed multigraph on the vertices 1..n.  Arrows are kept
/// sorted, so two quivers compare equal iff they have the same arrow
/// multiset.
struct Quiver {
  int n = 0;
  std::vector<Arrow> arrows;

  /// Number of arrows s -> t.
  int count(int s, int t) const {
    auto range = std::equal_range(arrows.begin(), arrows.end(), Arrow{s, t});
    return static_cast<int>(range.second - range.first);
  }

  friend bool operator==(const Quiver&, const Quiver&) = default;
};

/// Build a quiver without checking any invariants (used for derived quivers
/// such as the mesh quivers, which may be disconnected or large).
inline Quiver make_quiver(int n, std::vector<Arrow> arrows) {
  for (const auto& [s, t] : arrows)
    if (s < 1 || s > n || t < 1 || t > n)
      throw IndexError("arrow (" + std::to_string(s) + "," + std::to_string(t) + ") outside 1.." + std::to_string(n));
  std::sort(arrows.begin(), arrows.end());
  return Quiver{n, std::move(arrows)};
}

/// Topological order with sources first; ties broken by smallest label.
inline std::vector<int> topological_order(const Quiver& q) {
  std::vector<int> indeg(q.n + 1, 0);
  std::vector<std::vector<int>> out(q.n + 1);
  for (const auto& [s, t] : q.arrows) {
    ++indeg[t];
    out[s].push_back(t);
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int v = 1; v <= q.n; ++v)
    if (indeg[v] == 0) ready.push(v);
  std::vector<int> order;
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    order.push_back(v);
    for (int w : out[v])
      if (--indeg[w] == 0) ready.push(w);
  }
  if (static_cast<int>(order.size()) != q.n) throw CycleError("quiver has a directed cycle");
  return order;
}

inline bool is_connected(const Quiver& q) {
  if (q.n == 0) return true;
  std::vector<std::vector<int>> adj(q.n + 1);
  for (const auto& [s, t] : q.arrows) {
    adj[s].push_back(t);
    adj[t].push_back(s);
  }
  std::vector<bool> seen(q.n + 1, false);
  std::vector<int> stack{1};
  seen[1] = true;
  int visited = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++visited;
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  return visited == q.n;
}

/// Validate a quiver: no loops, acyclic, connected, n >= 2.
inline Quiver validate_quiver(int n, std::vector<Arrow> arrows) {
  if (n < 2) throw TooSmallError("need at least 2 vertices, got " + std::to_string(n));
  Quiver q = make_quiver(n, std::move(arrows));
  for (const auto& [s, t] : q.arrows)
    if (s == t) throw LoopError("loop at vertex " + std::to_string(s));
  topological_order(q);
  if (!is_connected(q)) throw DisconnectedError("quiver is not connected");
  return q;
}

inline Quiver opposite(const Quiver& q) {
  std::vector<Arrow> arrows;
  arrows.reserve(q.arrows.size());
  for (const auto& [s, t] : q.arrows) arrows.emplace_back(t, s);
  return make_quiver(q.n, std::move(arrows));
}

/// Reverse every arrow incident to k.
inline Quiver reflect(const Quiver& q, int k) {
  if (k < 1 || k > q.n) throw IndexError("vertex " + std::to_string(k) + " out of range");
  std::vector<Arrow> arrows;
  arrows.reserve(q.arrows.size());
  for (const auto& [s, t] : q.arrows) {
    if (s == k || t == k)
      arrows.emplace_back(t, s);
    else
      arrows.emplace_back(s, t);
  }
  return make_quiver(q.n, std::move(arrows));
}

inline bool is_sink(const Quiver& q, int v) {
  return std::none_of(q.arrows.begin(), q.arrows.end(), [v](const Arrow& a) { return a.first == v; });
}

inline bool is_source(const Quiver& q, int v) {
  return std::none_of(q.arrows.begin(), q.arrows.end(), [v](const Arrow& a) { return a.second == v; });
}

/// Symmetric generalized Cartan matrix, 1-based access.
struct CartanMatrix {
  int n = 0;
  std::vector<std::vector<long long>> c;

  long long operator()(int i, int j) const { return c[i - 1][j - 1]; }
  friend bool operator==(const CartanMatrix&, const CartanMatrix&) = default;
};

inline CartanMatrix cartan(const Quiver& q) {
  CartanMatrix m{q.n, std::vector<std::vector<long long>>(q.n, std::vector<long long>(q.n, 0))};
  for (int i = 0; i < q.n; ++i) m.c[i][i] = 2;
  for (const auto& [s, t] : q.arrows) {
    if (s == t) continue;
    --m.c[s - 1][t - 1];
    --m.c[t - 1][s - 1];
  }
  return m;
}

/// A weight, stored as its pairings with the simple coroots.
using Weight = std::vector<long long>;
/// A root lattice element in the basis of simple roots.
using RootVec = std::vector<long long>;
/// Letters (i_1, ..., i_r), read as w = s_{i_r} ... s_{i_1}.
using ReducedWord = std::vector<int>;

inline Weight fundamental_weight(int n, int i) {
  if (i < 1 || i > n) throw IndexError("vertex " + std::to_string(i) + " out of range");
  Weight w(n, 0);
  w[i - 1] = 1;
  return w;
}

inline RootVec simple_root(int n, int i) {
  if (i < 1 || i > n) throw IndexError("vertex " + std::to_string(i) + " out of range");
  RootVec d(n, 0);
  d[i - 1] = 1;
  return d;
}

inline Weight s_weight(const Weight& w, int i, const CartanMatrix& C) {
  if (i < 1 || i > C.n || static_cast<int>(w.size()) != C.n) throw IndexError("bad weight or vertex");
  Weight out = w;
  const long long p = w[i - 1];
  for (int j = 1; j <= C.n; ++j) out[j - 1] = w[j - 1] - p * C(i, j);
  return out;
}

inline RootVec s_root(const RootVec& d, int i, const CartanMatrix& C) {
  if (i < 1 || i > C.n || static_cast<int>(d.size()) != C.n) throw IndexError("bad root or vertex");
  long long pairing = 0;
  for (int j = 1; j <= C.n; ++j) pairing += d[j - 1] * C(j, i);
  RootVec out = d;
  out[i - 1] -= pairing;
  return out;
}

/// The roots alpha_{i_1}, s_{i_1}(alpha_{i_2}), ..., in word order.
inline std::vector<RootVec> inversion_roots(const ReducedWord& word, const CartanMatrix& C) {
  std::vector<RootVec> roots;
  std::set<RootVec> seen;
  for (std::size_t k = 0; k < word.size(); ++k) {
    RootVec beta = simple_root(C.n, word[k]);
    for (std::size_t j = k; j-- > 0;) beta = s_root(beta, word[j], C);
    if (std::any_of(beta.begin(), beta.end(), [](long long x) { return x < 0; }))
      throw NotReducedError("negative root at position " + std::to_string(k + 1));
    if (!seen.insert(beta).second) throw NotReducedError("repeated root at position " + std::to_string(k + 1));
    roots.push_back(std::move(beta));
  }
  return roots;
}

/// Check that i_1 is a sink of Q^op and each i_{k+1} is a sink of
/// sigma_{i_k} ... sigma_{i_1}(Q^op).
inline ReducedWord adapted_word(const Quiver& q, const ReducedWord& letters) {
  Quiver cur = opposite(q);
  for (std::size_t k = 0; k < letters.size(); ++k) {
    int v = letters[k];
    if (v < 1 || v > q.n) throw IndexError("letter " + std::to_string(v) + " out of range");
    if (!is_sink(cur, v))
      throw NotAdaptedError("letter " + std::to_string(k + 1) + " (vertex " + std::to_string(v) + ") is not a sink");
    cur = reflect(cur, v);
  }
  return letters;
}

}  // namespace meshclust
