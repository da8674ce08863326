#pragma once

// Shuffle series, the letter-insertion action, Euler characteristic
// generating functions and a chain-counting oracle for thin modules.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "meshclust/errors.hpp"
#include "meshclust/laurent.hpp"
#include "meshclust/mesh.hpp"
#include "meshclust/quiver.hpp"

namespace meshclust {

using Word = std::vector<int>;

/// Finite linear combination of words with rational coefficients.
class ShuffleSeries {
 public:
  using Terms = std::map<Word, BigRational>;

  ShuffleSeries() = default;

  static ShuffleSeries word(Word w, const BigRational& c = 1) {
    ShuffleSeries s;
    s.add(w, c);
    return s;
  }

  /// The unit w[].
  static ShuffleSeries unit() { return word({}); }

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  BigRational coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? BigRational(0) : it->second;
  }

  void add(const Word& w, const BigRational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  ShuffleSeries& operator+=(const ShuffleSeries& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  ShuffleSeries& operator-=(const ShuffleSeries& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
  }
  friend ShuffleSeries operator+(ShuffleSeries a, const ShuffleSeries& b) { return a += b; }
  friend ShuffleSeries operator-(ShuffleSeries a, const ShuffleSeries& b) { return a -= b; }

  ShuffleSeries scaled(const BigRational& s) const {
    ShuffleSeries out;
    for (const auto& [w, c] : terms_) out.add(w, c * s);
    return out;
  }

  friend bool operator==(const ShuffleSeries&, const ShuffleSeries&) = default;

  bool integral() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return boost::multiprecision::denominator(t.second) == 1; });
  }

  /// Letter counts when all words share them, empty otherwise.
  std::vector<long long> content(int n) const {
    std::vector<long long> first;
    for (const auto& [w, c] : terms_) {
      std::vector<long long> cnt(n, 0);
      for (int x : w) ++cnt.at(x - 1);
      if (first.empty())
        first = cnt;
      else if (cnt != first)
        return {};
    }
    return first;
  }

  /// "2·w[2,1,1] + w[3]", terms sorted by word.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
      bool neg = c < 0;
      BigRational mag = neg ? BigRational(-c) : c;
      out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
      first = false;
      if (mag != 1) out += detail::coeff_string(mag) + "·";
      out += "w[";
      for (std::size_t k = 0; k < w.size(); ++k) out += (k ? "," : "") + std::to_string(w[k]);
      out += "]";
    }
    return out;
  }

 private:
  Terms terms_;
};

namespace detail {

inline void shuffle_words(const Word& u, std::size_t i, const Word& v, std::size_t j, Word& cur,
                          const BigRational& c, ShuffleSeries& out) {
  if (i == u.size() && j == v.size()) {
    out.add(cur, c);
    return;
  }
  if (i < u.size()) {
    cur.push_back(u[i]);
    shuffle_words(u, i + 1, v, j, cur, c, out);
    cur.pop_back();
  }
  if (j < v.size()) {
    cur.push_back(v[j]);
    shuffle_words(u, i, v, j + 1, cur, c, out);
    cur.pop_back();
  }
}

/// rho_lambda(f_i) on a coefficient map.
template <class C>
std::map<Word, C> insert_letter(const std::map<Word, C>& s, int i, const Weight& lambda, const CartanMatrix& cm) {
  std::map<Word, C> out;
  Word w;
  for (const auto& [word, c] : s) {
    long long p = lambda.at(i - 1);
    for (std::size_t r = 0; r <= word.size(); ++r) {
      if (p != 0) {
        w.assign(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(r));
        w.push_back(i);
        w.insert(w.end(), word.begin() + static_cast<std::ptrdiff_t>(r), word.end());
        auto [it, inserted] = out.try_emplace(w, C(c * p));
        if (!inserted) {
          it->second += c * p;
          if (it->second == 0) out.erase(it);
        }
      }
      if (r < word.size()) p -= cm(word[r], i);
    }
  }
  return out;
}

inline BigInt factorial(long long b) {
  BigInt f = 1;
  for (long long k = 2; k <= b; ++k) f *= k;
  return f;
}

}  // namespace detail

inline ShuffleSeries shuffle(const ShuffleSeries& a, const ShuffleSeries& b) {
  ShuffleSeries out;
  Word cur;
  for (const auto& [u, cu] : a.terms())
    for (const auto& [v, cv] : b.terms()) detail::shuffle_words(u, 0, v, 0, cur, cu * cv, out);
  return out;
}

/// rho_lambda(f_i): insert i at every position r with coefficient
/// (lambda - alpha_{j_1} - ... - alpha_{j_r})(alpha_i^vee).
inline ShuffleSeries f_action(const ShuffleSeries& s, int i, const Weight& lambda, const CartanMatrix& cm) {
  if (i < 1 || i > cm.n) throw IndexError("letter " + std::to_string(i) + " out of range");
  auto m = detail::insert_letter(s.terms(), i, lambda, cm);
  ShuffleSeries out;
  for (const auto& [w, c] : m) out.add(w, c);
  return out;
}

/// rho(e_i): drop a trailing i, kill other words.
inline ShuffleSeries e_action(const ShuffleSeries& s, int i) {
  ShuffleSeries out;
  for (const auto& [w, c] : s.terms())
    if (!w.empty() && w.back() == i) out.add(Word(w.begin(), w.end() - 1), c);
  return out;
}

/// f_i^b / b!.  With require_integral, non-integer results raise
/// NonIntegralError.
inline ShuffleSeries divided_f(const ShuffleSeries& s, int i, long long b, const Weight& lambda,
                               const CartanMatrix& cm, bool require_integral = true) {
  if (b < 0) throw IndexError("negative divided power");
  ShuffleSeries cur = s;
  for (long long k = 0; k < b; ++k) cur = f_action(cur, i, lambda, cm);
  cur = cur.scaled(BigRational(1, detail::factorial(b)));
  if (require_integral && !cur.integral()) throw NonIntegralError("f_" + std::to_string(i) + "^(" + std::to_string(b) + ") is not integral");
  return cur;
}

/// b_j = (s_{i_{j+1}} ... s_{i_k}(varpi_{i_k}))(alpha_{i_j}^vee), b_k = 1.
inline std::vector<long long> b_exponents(const ReducedWord& word, std::size_t k, const CartanMatrix& cm) {
  if (k < 1 || k > word.size()) throw IndexError("k=" + std::to_string(k) + " outside 1.." + std::to_string(word.size()));
  std::vector<long long> b(k);
  Weight lambda = fundamental_weight(cm.n, word[k - 1]);
  b[k - 1] = lambda[word[k - 1] - 1];
  for (std::size_t j = k - 1; j-- > 0;) {
    lambda = s_weight(lambda, word[j + 1], cm);
    b[j] = lambda[word[j] - 1];
  }
  return b;
}

/// rho_{varpi_{i_k}}(f_{i_1}^{(b_1)} ... f_{i_k}^{(b_k)}) applied to w[],
/// rightmost factor first.
inline ShuffleSeries g_word(const ReducedWord& word, std::size_t k, const CartanMatrix& cm) {
  auto b = b_exponents(word, k, cm);
  const Weight lambda = fundamental_weight(cm.n, word[k - 1]);
  std::map<Word, BigInt> cur{{Word{}, BigInt(1)}};
  for (std::size_t j = k; j-- > 0;) {
    for (long long rep = 0; rep < b[j]; ++rep) cur = detail::insert_letter(cur, word[j], lambda, cm);
    if (b[j] > 1) {
      BigInt f = detail::factorial(b[j]);
      for (auto& [w, c] : cur) {
        BigInt q;
        if (!detail::divide_coeff(c, f, q))
          throw NonIntegralError("divided power f_" + std::to_string(word[j]) + "^(" + std::to_string(b[j]) +
                                 ") left a non-integral coefficient");
        c = q;
      }
    }
  }
  ShuffleSeries out;
  for (const auto& [w, c] : cur) out.add(w, BigRational(c));
  return out;
}

/// g_{T_k} for the k-th summand (1-based) in the given adapted ordering.
inline ShuffleSeries g_module(const CategoryModel& cat, const Ordering& ord, std::size_t k) {
  ReducedWord word = adapted_word(cat, ord);
  return g_word(word, k, cartan(cat.terminal.q));
}

/// Sum over a of (coefficient of i^a) * prod t_l^{a_l} / a_l!, a polynomial
/// in t_1..t_m.
inline RationalPoly evaluate_phi(const ShuffleSeries& s, const std::vector<int>& seq) {
  const std::size_t m = seq.size();
  RationalPoly out(m);
  Exponents a(m, 0);
  std::function<void(const Word&, std::size_t, std::size_t, const BigRational&)> rec =
      [&](const Word& w, std::size_t pos, std::size_t l, const BigRational& c) {
        if (l == m) {
          if (pos == w.size()) {
            BigInt denom = 1;
            for (int x : a) denom *= detail::factorial(x);
            out.add_term(a, c / BigRational(denom));
          }
          return;
        }
        std::size_t run = 0;
        while (pos + run < w.size() && w[pos + run] == seq[l]) ++run;
        for (std::size_t take = 0; take <= run; ++take) {
          a[l] = static_cast<int>(take);
          rec(w, pos + take, l + 1, c);
        }
        a[l] = 0;
      };
  for (const auto& [w, c] : s.terms()) rec(w, 0, 0, c);
  return out;
}

/// A module with one-dimensional basis slots.  arrows (u, v) between slot
/// indices mean that a submodule containing slot u contains slot v.  Only
/// the arrow pattern matters; scalars are not modelled.
struct ThinModule {
  std::vector<int> slots;
  std::vector<std::pair<int, int>> arrows;
};

/// Slot-disjoint direct sum.
inline ThinModule direct_sum(const ThinModule& x, const ThinModule& y) {
  ThinModule out = x;
  const int shift = static_cast<int>(x.slots.size());
  out.slots.insert(out.slots.end(), y.slots.begin(), y.slots.end());
  for (const auto& [u, v] : y.arrows) out.arrows.emplace_back(u + shift, v + shift);
  return out;
}

/// Sum over all maximal chains of arrow-closed slot subsets of the word of
/// added labels, bottom-up.
inline ShuffleSeries flag_oracle(const ThinModule& m) {
  const std::size_t n = m.slots.size();
  if (n > 20) throw NotThinError("too many slots for chain enumeration");
  for (int x : m.slots)
    if (x < 1) throw NotThinError("slot label must be a positive vertex");
  std::vector<std::uint32_t> below(n, 0);
  for (const auto& [u, v] : m.arrows) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n || u == v)
      throw NotThinError("bad arrow between slots");
    below[u] |= 1U << v;
  }
  std::map<std::uint32_t, std::map<Word, BigInt>> memo;
  const std::uint32_t full = n == 32 ? ~0U : ((1U << n) - 1);
  std::function<const std::map<Word, BigInt>&(std::uint32_t)> chains = [&](std::uint32_t set) -> const std::map<Word, BigInt>& {
    auto it = memo.find(set);
    if (it != memo.end()) return it->second;
    std::map<Word, BigInt> res;
    if (set == full) {
      res[Word{}] = 1;
    } else {
      for (std::size_t u = 0; u < n; ++u) {
        if (set & (1U << u)) continue;
        if ((below[u] & set) != below[u]) continue;
        for (const auto& [w, c] : chains(set | (1U << u))) {
          Word nw;
          nw.reserve(w.size() + 1);
          nw.push_back(m.slots[u]);
          nw.insert(nw.end(), w.begin(), w.end());
          res[nw] += c;
        }
      }
      if (res.empty()) throw NotThinError("arrow relation among slots is cyclic");
    }
    return memo.emplace(set, std::move(res)).first->second;
  };
  ShuffleSeries out;
  for (const auto& [w, c] : chains(0)) out.add(w, BigRational(c));
  return out;
}

}  // namespace meshclust
