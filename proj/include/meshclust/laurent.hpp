#pragma once

// Exact multivariate Laurent polynomials over Z or Q.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "meshclust/errors.hpp"

namespace meshclust {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;
using Exponents = std::vector<int>;

/// Graded lexicographic order with the larger monomial first.
struct GrlexDescending {
  bool operator()(const Exponents& a, const Exponents& b) const {
    long da = std::accumulate(a.begin(), a.end(), 0L);
    long db = std::accumulate(b.begin(), b.end(), 0L);
    if (da != db) return da > db;
    return a > b;
  }
};

namespace detail {

inline bool divide_coeff(const BigInt& a, const BigInt& b, BigInt& q) {
  BigInt r;
  boost::multiprecision::divide_qr(a, b, q, r);
  return r == 0;
}

inline bool divide_coeff(const BigRational& a, const BigRational& b, BigRational& q) {
  q = a / b;
  return true;
}

inline std::string coeff_string(const BigInt& c) { return c.str(); }

inline std::string coeff_string(const BigRational& c) {
  auto num = boost::multiprecision::numerator(c);
  auto den = boost::multiprecision::denominator(c);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline bool is_one(const BigInt& c) { return c == 1; }
inline bool is_one(const BigRational& c) { return c == 1; }

template <class C>
C parse_coeff(const std::string& s);

template <>
inline BigInt parse_coeff<BigInt>(const std::string& s) {
  if (s.find('/') != std::string::npos) throw ParseError("rational coefficient '" + s + "' in integer polynomial");
  return BigInt(s);
}

template <>
inline BigRational parse_coeff<BigRational>(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return BigRational(BigInt(s));
  return BigRational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

}  // namespace detail

/// Default variable names y1, y2, ...
inline std::vector<std::string> default_names(std::size_t n, const std::string& stem = "y") {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back(stem + std::to_string(i + 1));
  return names;
}

/// A Laurent polynomial in a fixed number of variables.
///
/// Terms are kept in canonical form: no zero coefficients, graded
/// lexicographic order.  Two values are equal iff they are equal as
/// Laurent polynomials.
template <class C>
class Laurent {
 public:
  using Coeff = C;
  using Terms = std::map<Exponents, C, GrlexDescending>;

  Laurent() = default;
  explicit Laurent(std::size_t nvars) : nvars_(nvars) {}

  static Laurent constant(std::size_t nvars, const C& c) {
    Laurent p(nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
  }

  static Laurent one(std::size_t nvars) { return constant(nvars, C(1)); }

  static Laurent variable(std::size_t nvars, std::size_t i, int power = 1) {
    if (i >= nvars) throw IndexError("variable index " + std::to_string(i) + " out of range");
    Exponents e(nvars, 0);
    e[i] = power;
    return monomial(std::move(e));
  }

  static Laurent monomial(Exponents e, const C& c = C(1)) {
    Laurent p(e.size());
    p.add_term(e, c);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }

  bool is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
  }

  /// True when no variable occurs with a negative exponent.
  bool is_polynomial() const {
    for (const auto& [e, c] : terms_)
      for (int x : e)
        if (x < 0) return false;
    return true;
  }

  /// Coefficient of the given monomial (zero if absent).
  C coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? C(0) : it->second;
  }

  /// Componentwise minimum exponent over all terms.
  Exponents min_exponents() const {
    Exponents m(nvars_, 0);
    bool first = true;
    for (const auto& [e, c] : terms_) {
      for (std::size_t i = 0; i < nvars_; ++i) m[i] = first ? e[i] : std::min(m[i], e[i]);
      first = false;
    }
    return m;
  }

  void add_term(const Exponents& e, const C& c) {
    if (e.size() != nvars_) throw ArityMismatchError("term arity " + std::to_string(e.size()) + " vs " + std::to_string(nvars_));
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Laurent& operator+=(const Laurent& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  Laurent& operator-=(const Laurent& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

  friend Laurent operator-(const Laurent& a) {
    Laurent r(a.nvars_);
    for (const auto& [e, c] : a.terms_) r.terms_.emplace_hint(r.terms_.end(), e, -c);
    return r;
  }

  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    a.check_arity(b);
    Laurent r(a.nvars_);
    if (a.is_zero() || b.is_zero()) return r;
    Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }

  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  /// Multiply by the monomial x^shift.
  Laurent shifted(const Exponents& shift) const {
    if (shift.size() != nvars_) throw ArityMismatchError("shift arity");
    Laurent r(nvars_);
    for (const auto& [e, c] : terms_) {
      Exponents f = e;
      for (std::size_t i = 0; i < nvars_; ++i) f[i] += shift[i];
      r.terms_.emplace(std::move(f), c);
    }
    return r;
  }

  Laurent scaled(const C& s) const {
    Laurent r(nvars_);
    if (s == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, c * s);
    return r;
  }

  Laurent pow(unsigned k) const {
    Laurent result = one(nvars_);
    Laurent base = *this;
    while (k) {
      if (k & 1U) result = result * base;
      k >>= 1U;
      if (k) base = base * base;
    }
    return result;
  }

  std::string to_string(const std::vector<std::string>& names) const {
    if (names.size() < nvars_) throw ArityMismatchError("not enough variable names");
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      bool negative = c < 0;
      C mag = negative ? C(-c) : c;
      if (first) {
        if (negative) out += "-";
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      std::string mono;
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += names[i];
        if (e[i] != 1) mono += "^" + std::to_string(e[i]);
      }
      if (mono.empty()) {
        out += detail::coeff_string(mag);
      } else if (detail::is_one(mag)) {
        out += mono;
      } else {
        out += detail::coeff_string(mag) + "*" + mono;
      }
    }
    return out;
  }

  std::string to_string() const { return to_string(default_names(nvars_)); }

 private:
  void check_arity(const Laurent& o) const {
    if (o.nvars_ != nvars_)
      throw ArityMismatchError(std::to_string(nvars_) + " vs " + std::to_string(o.nvars_) + " variables");
  }

  std::size_t nvars_ = 0;
  Terms terms_;
};

using LaurentPoly = Laurent<BigInt>;
using RationalPoly = Laurent<BigRational>;

/// Exact quotient num/den in the Laurent ring; throws NotDivisibleError
/// when den does not divide num.
template <class C>
Laurent<C> exact_div(const Laurent<C>& num, const Laurent<C>& den) {
  if (num.nvars() != den.nvars())
    throw ArityMismatchError(std::to_string(num.nvars()) + " vs " + std::to_string(den.nvars()) + " variables");
  if (den.is_zero()) throw NotDivisibleError("division by zero");
  const std::size_t n = num.nvars();
  Laurent<C> q(n);
  if (num.is_zero()) return q;

  if (den.is_monomial()) {
    const auto& [de, dc] = *den.terms().begin();
    for (const auto& [e, c] : num.terms()) {
      C qc;
      if (!detail::divide_coeff(c, dc, qc)) throw NotDivisibleError("coefficient " + detail::coeff_string(c) + " not divisible");
      Exponents f = e;
      for (std::size_t i = 0; i < n; ++i) f[i] -= de[i];
      q.add_term(f, qc);
    }
    return q;
  }

  // Clear negative exponents, then divide as ordinary polynomials.
  Exponents mn = num.min_exponents();
  Exponents md = den.min_exponents();
  Exponents neg_mn(n), neg_md(n), back(n);
  for (std::size_t i = 0; i < n; ++i) {
    neg_mn[i] = -mn[i];
    neg_md[i] = -md[i];
    back[i] = mn[i] - md[i];
  }
  Laurent<C> r = num.shifted(neg_mn);
  Laurent<C> d = den.shifted(neg_md);
  const auto& [lde, ldc] = *d.terms().begin();
  Exponents f(n);
  while (!r.is_zero()) {
    const auto& [le, lc] = *r.terms().begin();
    for (std::size_t i = 0; i < n; ++i) {
      f[i] = le[i] - lde[i];
      if (f[i] < 0) throw NotDivisibleError("leading monomial not divisible");
    }
    C qc;
    if (!detail::divide_coeff(lc, ldc, qc)) throw NotDivisibleError("leading coefficient not divisible");
    q.add_term(f, qc);
    for (const auto& [de, dc] : d.terms()) {
      Exponents g(n);
      for (std::size_t i = 0; i < n; ++i) g[i] = de[i] + f[i];
      r.add_term(g, -(dc * qc));
    }
  }
  return q.shifted(back);
}

/// Substitute variables.  images[v], when set, replaces variable v; unset
/// variables map to the same-index variable of the target ring.
template <class C>
Laurent<C> substitute(const Laurent<C>& p, const std::vector<std::optional<Laurent<C>>>& images,
                      std::size_t target_nvars) {
  if (images.size() != p.nvars()) throw ArityMismatchError("substitution arity");
  for (const auto& img : images)
    if (img && img->nvars() != target_nvars) throw ArityMismatchError("image arity");

  std::vector<std::map<int, Laurent<C>>> cache(p.nvars());
  auto power = [&](std::size_t v, int e) -> const Laurent<C>& {
    auto it = cache[v].find(e);
    if (it != cache[v].end()) return it->second;
    Laurent<C> val;
    if (!images[v]) {
      if (v >= target_nvars) throw ArityMismatchError("unassigned variable outside target ring");
      val = Laurent<C>::variable(target_nvars, v, e);
    } else if (e >= 0) {
      val = images[v]->pow(static_cast<unsigned>(e));
    } else {
      const auto& img = *images[v];
      if (!img.is_monomial())
        throw NegativeExponentSubstitutionError("variable " + std::to_string(v + 1) + " has a negative exponent and a non-monomial image");
      const auto& [ie, ic] = *img.terms().begin();
      C inv;
      if (!detail::divide_coeff(C(1), ic, inv))
        throw NegativeExponentSubstitutionError("image of variable " + std::to_string(v + 1) + " is not a unit");
      Exponents f(ie.size());
      for (std::size_t i = 0; i < f.size(); ++i) f[i] = -ie[i];
      val = Laurent<C>::monomial(f, inv).pow(static_cast<unsigned>(-e));
    }
    return cache[v].emplace(e, std::move(val)).first->second;
  };

  Laurent<C> out(target_nvars);
  for (const auto& [e, c] : p.terms()) {
    Laurent<C> term = Laurent<C>::constant(target_nvars, c);
    for (std::size_t v = 0; v < e.size(); ++v)
      if (e[v] != 0) term = term * power(v, e[v]);
    out += term;
  }
  return out;
}

/// Convert integer coefficients to rationals.
inline RationalPoly to_rational(const LaurentPoly& p) {
  RationalPoly r(p.nvars());
  for (const auto& [e, c] : p.terms()) r.add_term(e, BigRational(c));
  return r;
}

/// Parse the text form produced by to_string with the given names.
template <class C>
Laurent<C> parse_laurent(const std::string& text, const std::vector<std::string>& names) {
  const std::size_t n = names.size();
  std::vector<std::size_t> by_length(n);
  std::iota(by_length.begin(), by_length.end(), 0);
  std::stable_sort(by_length.begin(), by_length.end(),
                   [&](std::size_t a, std::size_t b) { return names[a].size() > names[b].size(); });

  Laurent<C> out(n);
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& why) -> void {
    throw ParseError(why + " at offset " + std::to_string(pos) + " in '" + text + "'");
  };
  auto read_digits = [&] {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    return text.substr(start, pos - start);
  };

  skip();
  if (text.substr(pos) == "0") return out;
  bool first = true;
  while (true) {
    skip();
    if (pos >= text.size()) {
      if (first) fail("empty polynomial");
      break;
    }
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
      negative = text[pos] == '-';
      ++pos;
      skip();
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    first = false;

    C coeff(1);
    Exponents e(n, 0);
    bool have_factor = false;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      std::string num = read_digits();
      if (pos < text.size() && text[pos] == '/') {
        ++pos;
        num += "/" + read_digits();
      }
      coeff = detail::parse_coeff<C>(num);
      have_factor = true;
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        have_factor = false;
      } else {
        out.add_term(e, negative ? C(-coeff) : coeff);
        continue;
      }
    }
    while (true) {
      skip();
      bool matched = false;
      for (std::size_t v : by_length) {
        const auto& name = names[v];
        if (!name.empty() && text.compare(pos, name.size(), name) == 0) {
          pos += name.size();
          int exponent = 1;
          if (pos < text.size() && text[pos] == '^') {
            ++pos;
            bool eneg = false;
            if (pos < text.size() && text[pos] == '-') {
              eneg = true;
              ++pos;
            }
            std::string digits = read_digits();
            if (digits.empty()) fail("missing exponent");
            exponent = std::stoi(digits) * (eneg ? -1 : 1);
          }
          e[v] += exponent;
          matched = true;
          break;
        }
      }
      if (!matched) fail("unknown variable");
      have_factor = true;
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        continue;
      }
      break;
    }
    if (!have_factor) fail("dangling '*'");
    out.add_term(e, negative ? C(-coeff) : coeff);
  }
  return out;
}

}  // namespace meshclust
