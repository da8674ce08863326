#pragma once

// The mutation path from T_M to its dual, the determinantal identities
// along it, and dual PBW expansions of interval variables.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "meshclust/cluster.hpp"
#include "meshclust/errors.hpp"
#include "meshclust/laurent.hpp"
#include "meshclust/mesh.hpp"

namespace meshclust {

/// Full subquiver of the mesh quiver (with tau-arrows) on the vertices
/// (i, t_i), as a quiver on 1..n.
inline Quiver qm_op(const CategoryModel& cat) {
  std::vector<Arrow> arrows;
  for (const auto& [s, t] : cat.gammaMStar.arrows) {
    const auto& x = cat.vertices[s - 1];
    const auto& y = cat.vertices[t - 1];
    if (x.a == cat.level(x.i) && y.a == cat.level(y.i)) arrows.emplace_back(x.i, y.i);
  }
  return make_quiver(cat.n(), std::move(arrows));
}

/// Sources of Q_M^op first.
inline std::vector<int> qm_adapted_order(const CategoryModel& cat) { return topological_order(qm_op(cat)); }

inline void validate_qm_order(const CategoryModel& cat, const std::vector<int>& order) {
  Quiver qm = opposite(qm_op(cat));
  std::vector<bool> used(cat.n() + 1, false);
  if (static_cast<int>(order.size()) != cat.n()) throw NotAdaptedError("numbering must list every vertex once");
  for (int v : order) {
    if (v < 1 || v > cat.n() || used[v]) throw NotAdaptedError("numbering must list every vertex once");
    used[v] = true;
    if (!is_sink(qm, v)) throw NotAdaptedError("vertex " + std::to_string(v) + " is not a sink when reached");
    qm = reflect(qm, v);
  }
}

struct Schedule {
  std::vector<IntervalLabel> steps;
  std::vector<int> order;
};

inline long long schedule_length(const std::vector<int>& t) {
  long long total = 0;
  for (int x : t) total += static_cast<long long>(x) * (x + 1) / 2;
  return total;
}

inline Schedule make_schedule(const CategoryModel& cat, std::optional<std::vector<int>> order = std::nullopt) {
  Schedule s;
  s.order = order ? *order : qm_adapted_order(cat);
  validate_qm_order(cat, s.order);
  const auto& t = cat.terminal.t;
  int top = t.empty() ? 0 : *std::max_element(t.begin(), t.end());
  for (int k = 1; k <= top; ++k)
    for (int i : s.order) {
      int c = t[i - 1] - (k - 1);
      for (int a = c; a >= 1; --a) s.steps.push_back({i, a, c});
    }
  return s;
}

inline Schedule make_schedule(const TerminalData& td) { return make_schedule(build_category(td)); }

/// T_{i,[a-1,b]} T_{i,[a,b-1]} = T_{i,[a,b]} T_{i,[a-1,b-1]} - product.
struct DetIdentity {
  int i = 0, a = 0, b = 0;
  IntervalLabel lhs1, lhs2, rhs1, rhs2;
  std::vector<IntervalLabel> product;

  /// Non-unit factors of the left-hand side, sorted.
  std::vector<IntervalLabel> lhs_factors() const {
    std::vector<IntervalLabel> out;
    for (const auto& l : {lhs1, lhs2})
      if (!l.is_unit()) out.push_back(l);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::string to_string() const {
    auto mono = [](const std::vector<IntervalLabel>& f) {
      if (f.empty()) return std::string("1");
      std::string s;
      for (std::size_t k = 0; k < f.size(); ++k) s += (k ? "*" : "") + meshclust::to_string(f[k]);
      return s;
    };
    std::vector<IntervalLabel> rhs;
    for (const auto& l : {rhs1, rhs2})
      if (!l.is_unit()) rhs.push_back(l);
    return mono(lhs_factors()) + " = " + mono(rhs) + " - " + mono(product);
  }
};

inline DetIdentity det_identity(const CategoryModel& cat, int i, int a, int b) {
  if (i < 1 || i > cat.n() || a < 1 || a > b || b > cat.level(i))
    throw IndexError("identity needs 1 <= a <= b <= t_i, got i=" + std::to_string(i) + " a=" + std::to_string(a) +
                     " b=" + std::to_string(b));
  DetIdentity d;
  d.i = i;
  d.a = a;
  d.b = b;
  d.lhs1 = {i, a - 1, b};
  d.lhs2 = {i, a, b - 1};
  d.rhs1 = {i, a, b};
  d.rhs2 = {i, a - 1, b - 1};
  Quiver qm = qm_op(cat);
  const int ti = cat.level(i);
  auto push = [&](IntervalLabel l) {
    if (l.a < 0 || l.b < 0 || l.is_unit()) return;
    check_label(cat, l);
    d.product.push_back(l);
  };
  for (const auto& [s, t] : qm.arrows) {
    if (s == i) push({t, a + cat.level(t) - ti, b + cat.level(t) - ti});
    if (t == i) push({s, a - 1 + cat.level(s) - ti, b - 1 + cat.level(s) - ti});
  }
  std::sort(d.product.begin(), d.product.end());
  return d;
}

struct PathStep {
  std::size_t index = 0;
  std::size_t vertex = 0;
  IntervalLabel before, after;
  DetIdentity identity;
  IntVec dims;
  IntVec delta;
  bool dominance = false;
  bool deltaDominance = false;
};

struct PathResult {
  Seed seed;
  std::vector<PathStep> steps;

  bool max_dominance() const {
    return std::all_of(steps.begin(), steps.end(), [](const PathStep& s) { return s.dominance; });
  }
};

namespace detail {

inline std::vector<IntervalLabel> factor_labels(const Seed& s, const std::vector<std::pair<std::size_t, long long>>& f) {
  std::vector<IntervalLabel> out;
  for (const auto& [v, e] : f) {
    if (!s.labels[v]) throw ScheduleMismatchError("neighbour " + std::to_string(v + 1) + " has no label");
    for (long long c = 0; c < e; ++c) out.push_back(*s.labels[v]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// Run the schedule from the initial seed, checking every exchange
/// relation against det_identity and every tracker against the label.
inline PathResult run_path(const CategoryModel& cat, const Seed& start, const Schedule& sch) {
  PathResult res;
  Seed seed = start;
  if (!seed.dimTracker) throw IndexError("path needs dimension trackers");
  for (std::size_t n = 0; n < sch.steps.size(); ++n) {
    const IntervalLabel& target = sch.steps[n];
    auto k = seed.find_label(target);
    if (!k) throw ScheduleMismatchError("step " + std::to_string(n + 1) + ": no vertex labelled " + to_string(target));
    DetIdentity id = det_identity(cat, target.i, target.a, target.b);
    MutationResult m = mutate(seed, *k);

    auto out = detail::factor_labels(seed, m.outFactors);
    auto in = detail::factor_labels(seed, m.inFactors);
    auto lhs = id.lhs_factors();
    const auto& dominant = m.dim->outSelected ? out : in;
    const auto& other = m.dim->outSelected ? in : out;
    if (dominant != lhs || other != id.product)
      throw ScheduleMismatchError("step " + std::to_string(n + 1) + ": exchange relation at " + to_string(target) +
                                  " does not match " + id.to_string());

    IntervalLabel next{target.i, target.a - 1, target.b - 1};
    if ((*m.seed.dimTracker)[*k] != projected_dimvec(cat, next))
      throw ScheduleMismatchError("step " + std::to_string(n + 1) + ": dimension tracker of " + to_string(next) +
                                  " is inconsistent");
    m.seed.labels[*k] = next;

    PathStep step;
    step.index = n + 1;
    step.vertex = *k;
    step.before = target;
    step.after = next;
    step.identity = id;
    step.dims = m.dim->value;
    step.dominance = m.dim->dominance;
    if (m.delta) {
      step.delta = m.delta->value;
      step.deltaDominance = m.delta->dominance;
    }
    res.steps.push_back(std::move(step));
    seed = std::move(m.seed);
  }
  res.seed = std::move(seed);
  return res;
}

/// Variable names T{l,[c,c]} of the polynomial ring of pbw_expand.
inline std::vector<std::string> pbw_names(const CategoryModel& cat) {
  std::vector<std::string> names;
  for (const auto& x : cat.vertices) names.push_back(to_string(IntervalLabel{x.i, x.a, x.a}));
  return names;
}

/// Expands interval variables as polynomials in z_{l,c} = T_{l,[c,c]};
/// variable k is the category vertex k.
class PbwExpander {
 public:
  explicit PbwExpander(const CategoryModel& cat) : cat_(cat) {}

  const LaurentPoly& expand(const IntervalLabel& l) {
    auto it = memo_.find(l);
    if (it != memo_.end()) return it->second;
    const std::size_t r = cat_.size();
    LaurentPoly value;
    if (l.is_unit()) {
      value = LaurentPoly::one(r);
    } else if (l.a == l.b) {
      value = LaurentPoly::variable(r, cat_.index({l.i, l.a}));
    } else {
      check_label(cat_, l);
      DetIdentity id = det_identity(cat_, l.i, l.a + 1, l.b);
      LaurentPoly prod = LaurentPoly::one(r);
      for (const auto& f : id.product) prod = prod * LaurentPoly(expand(f));
      LaurentPoly num = LaurentPoly(expand(id.rhs1)) * LaurentPoly(expand(id.rhs2)) - prod;
      value = exact_div(num, LaurentPoly(expand(id.lhs2)));
      if (!value.is_polynomial()) throw NotDivisibleError(to_string(l) + " expands with a negative exponent");
    }
    return memo_.emplace(l, std::move(value)).first->second;
  }

 private:
  const CategoryModel& cat_;
  std::map<IntervalLabel, LaurentPoly> memo_;
};

inline LaurentPoly pbw_expand(const CategoryModel& cat, const IntervalLabel& l) {
  PbwExpander e(cat);
  return e.expand(l);
}

}  // namespace meshclust
