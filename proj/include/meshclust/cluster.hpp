#pragma once

// Seeds, seed mutation, and the dimension-vector trackers.

#include <cstddef>
#include <cstdlib>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "meshclust/errors.hpp"
#include "meshclust/exchange.hpp"
#include "meshclust/laurent.hpp"
#include "meshclust/mesh.hpp"

namespace meshclust {

using IntVec = std::vector<long long>;
using LabelIndex = std::map<IntVec, IntervalLabel>;

/// A seed: cluster variables, exchange matrix and optional trackers.
/// Index k of a seed built from a category is the category vertex k.
struct Seed {
  std::optional<std::vector<LaurentPoly>> vars;
  std::vector<std::string> names;
  ExchangeMatrix matrix;
  std::vector<std::optional<IntervalLabel>> labels;
  std::optional<std::vector<IntVec>> dimTracker;
  std::optional<std::vector<IntVec>> deltaTracker;
  IntVec dDelta;
  std::shared_ptr<const LabelIndex> labelIndex;
  std::optional<TerminalData> terminal;

  std::size_t size() const { return matrix.size(); }

  /// Index of the vertex currently carrying the label, if any.
  std::optional<std::size_t> find_label(const IntervalLabel& l) const {
    for (std::size_t k = 0; k < labels.size(); ++k)
      if (labels[k] && *labels[k] == l) return k;
    return std::nullopt;
  }

  friend bool operator==(const Seed& a, const Seed& b) {
    return a.vars == b.vars && a.matrix == b.matrix && a.labels == b.labels && a.dimTracker == b.dimTracker &&
           a.deltaTracker == b.deltaTracker;
  }
};

/// Seed with free variables y1..yr and no trackers.
inline Seed plain_seed(const ExchangeMatrix& m) {
  Seed s;
  s.matrix = m;
  s.names = default_names(m.size());
  std::vector<LaurentPoly> vars;
  for (std::size_t k = 0; k < m.size(); ++k) vars.push_back(LaurentPoly::variable(m.size(), k));
  s.vars = std::move(vars);
  s.labels.assign(m.size(), std::nullopt);
  return s;
}

/// Projected dimension vector -> interval label, over all labels whose
/// vector is not shared with another label.
inline std::shared_ptr<const LabelIndex> label_index(const CategoryModel& cat) {
  auto index = std::make_shared<LabelIndex>();
  std::map<IntVec, int> seen;
  for (int i = 1; i <= cat.n(); ++i)
    for (int a = 0; a <= cat.level(i); ++a)
      for (int b = a; b <= cat.level(i); ++b) {
        IntervalLabel l{i, a, b};
        auto v = projected_dimvec(cat, l);
        if (++seen[v] == 1)
          (*index)[v] = l;
        else
          index->erase(v);
      }
  return index;
}

/// Initial seed of the category, labelled by T_{i,[a,t_i]}; the frozen
/// vertices are those of level 0.
inline Seed initial_seed(const CategoryModel& cat, const Ordering& ord, bool with_vars = true) {
  validate_ordering(cat, ord);
  const std::size_t r = cat.size();
  Seed s;
  std::vector<bool> frozen(r);
  for (std::size_t k = 0; k < r; ++k) frozen[k] = cat.vertices[k].a == 0;
  s.matrix = b_matrix(cat.gammaMStar, frozen);
  std::vector<IntVec> dims, deltas;
  for (std::size_t k = 0; k < r; ++k) {
    const auto& x = cat.vertices[k];
    IntervalLabel l{x.i, x.a, cat.level(x.i)};
    s.labels.push_back(l);
    s.names.push_back(to_string(l));
    dims.push_back(projected_dimvec(cat, l));
    deltas.push_back(interval_indicator(cat, l));
  }
  s.dimTracker = std::move(dims);
  s.deltaTracker = std::move(deltas);
  s.dDelta = delta_dims(cat, ord);
  if (with_vars) {
    std::vector<LaurentPoly> vars;
    for (std::size_t k = 0; k < r; ++k) vars.push_back(LaurentPoly::variable(r, k));
    s.vars = std::move(vars);
  }
  s.labelIndex = label_index(cat);
  s.terminal = cat.terminal;
  return s;
}

/// Result of a tracker update d_k* = -d_k + (selected arrow sum).
struct TrackerUpdate {
  IntVec value;
  IntVec outSum;
  IntVec inSum;
  bool outSelected = true;
  bool dominance = false;
};

namespace detail {

inline void check_mutable(const Seed& s, std::size_t k) {
  if (k >= s.size()) throw IndexError("vertex " + std::to_string(k + 1) + " out of range");
  if (s.matrix.frozen[k]) throw FrozenMutationError("vertex " + std::to_string(k + 1) + " is frozen");
}

inline std::pair<IntVec, IntVec> arrow_sums(const Seed& s, const std::vector<IntVec>& tracker, std::size_t k) {
  const std::size_t len = tracker[k].size();
  IntVec out(len, 0), in(len, 0);
  for (std::size_t i = 0; i < s.size(); ++i) {
    long long b = s.matrix.b[i][k];
    IntVec& dst = b > 0 ? out : in;
    long long m = std::llabs(b);
    for (std::size_t c = 0; c < len && m; ++c) dst[c] += m * tracker[i][c];
  }
  return {out, in};
}

inline bool dominates(const IntVec& a, const IntVec& b) {
  for (std::size_t c = 0; c < a.size(); ++c)
    if (a[c] < b[c]) return false;
  return true;
}

inline TrackerUpdate finish_update(const IntVec& dk, IntVec out, IntVec in, long long score_out, long long score_in,
                                   std::size_t k, const char* what) {
  TrackerUpdate u;
  u.dominance = dominates(out, in) || dominates(in, out);
  if (score_out == score_in && out != in)
    throw AmbiguityError(std::string(what) + " at vertex " + std::to_string(k + 1) + ": tied arrow sums differ");
  u.outSelected = score_out >= score_in;
  const IntVec& pick = u.outSelected ? out : in;
  u.value.resize(dk.size());
  for (std::size_t c = 0; c < dk.size(); ++c) u.value[c] = pick[c] - dk[c];
  u.outSum = std::move(out);
  u.inSum = std::move(in);
  return u;
}

}  // namespace detail

/// d_k* = -d_k + max of the two arrow sums, the larger total entry sum
/// selecting the branch.  Also reports componentwise dominance.
inline TrackerUpdate mutate_dimvec(const Seed& s, std::size_t k) {
  detail::check_mutable(s, k);
  if (!s.dimTracker) throw IndexError("seed has no dimension tracker");
  auto [out, in] = detail::arrow_sums(s, *s.dimTracker, k);
  long long so = 0, si = 0;
  for (auto x : out) so += std::llabs(x);
  for (auto x : in) si += std::llabs(x);
  return detail::finish_update((*s.dimTracker)[k], std::move(out), std::move(in), so, si, k, "dimension vector");
}

/// Delta-tracker update: the branch with the larger pairing against dDelta.
inline TrackerUpdate mutate_delta_dimvec(const Seed& s, std::size_t k, const IntVec& dDelta) {
  detail::check_mutable(s, k);
  if (!s.deltaTracker) throw IndexError("seed has no Delta tracker");
  auto [out, in] = detail::arrow_sums(s, *s.deltaTracker, k);
  if (dDelta.size() != out.size()) throw ArityMismatchError("dDelta length");
  long long so = 0, si = 0;
  for (std::size_t c = 0; c < out.size(); ++c) {
    so += out[c] * dDelta[c];
    si += in[c] * dDelta[c];
  }
  return detail::finish_update((*s.deltaTracker)[k], std::move(out), std::move(in), so, si, k, "Delta vector");
}

/// Everything produced by one mutation.
struct MutationResult {
  Seed seed;
  std::size_t vertex = 0;
  std::vector<std::pair<std::size_t, long long>> outFactors;
  std::vector<std::pair<std::size_t, long long>> inFactors;
  std::optional<TrackerUpdate> dim;
  std::optional<TrackerUpdate> delta;
};

inline MutationResult mutate(const Seed& s, std::size_t k) {
  detail::check_mutable(s, k);
  MutationResult res;
  res.vertex = k;
  for (std::size_t i = 0; i < s.size(); ++i) {
    long long b = s.matrix.b[i][k];
    if (b > 0) res.outFactors.emplace_back(i, b);
    if (b < 0) res.inFactors.emplace_back(i, -b);
  }
  Seed t = s;
  if (s.vars) {
    const auto& vars = *s.vars;
    const std::size_t nv = vars[k].nvars();
    LaurentPoly p = LaurentPoly::one(nv), m = LaurentPoly::one(nv);
    for (const auto& [i, e] : res.outFactors) p = p * vars[i].pow(static_cast<unsigned>(e));
    for (const auto& [i, e] : res.inFactors) m = m * vars[i].pow(static_cast<unsigned>(e));
    (*t.vars)[k] = exact_div(p + m, vars[k]);
  }
  if (s.dimTracker) {
    res.dim = mutate_dimvec(s, k);
    (*t.dimTracker)[k] = res.dim->value;
  }
  if (s.deltaTracker && !s.dDelta.empty()) {
    res.delta = mutate_delta_dimvec(s, k, s.dDelta);
    (*t.deltaTracker)[k] = res.delta->value;
  }
  t.matrix = mutate_matrix(s.matrix, k);
  if (!t.labels.empty()) {
    t.labels[k] = std::nullopt;
    if (t.labelIndex && t.dimTracker) {
      auto it = t.labelIndex->find((*t.dimTracker)[k]);
      if (it != t.labelIndex->end()) t.labels[k] = it->second;
    }
  }
  res.seed = std::move(t);
  return res;
}

inline Seed mutate_seed(const Seed& s, std::size_t k) { return mutate(s, k).seed; }

/// Set the given variables to 1 (coefficient specialization).
inline LaurentPoly specialize(const LaurentPoly& p, const std::vector<std::size_t>& vars) {
  std::vector<std::optional<LaurentPoly>> images(p.nvars());
  for (auto v : vars) images.at(v) = LaurentPoly::one(p.nvars());
  return substitute(p, images, p.nvars());
}

inline std::vector<std::size_t> frozen_indices(const Seed& s) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < s.size(); ++k)
    if (s.matrix.frozen[k]) out.push_back(k);
  return out;
}

}  // namespace meshclust
