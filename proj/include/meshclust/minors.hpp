#pragma once

// Symbolic minors of unitriangular matrices in type A.

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "meshclust/errors.hpp"
#include "meshclust/laurent.hpp"
#include "meshclust/quiver.hpp"

namespace meshclust {

using SymbolicMatrix = std::vector<std::vector<LaurentPoly>>;

/// Row and column sets, 1-based and sorted.
struct MinorKey {
  std::vector<int> I;
  std::vector<int> J;
  friend bool operator==(const MinorKey&, const MinorKey&) = default;
};

inline std::string to_string(const MinorKey& k) {
  auto join = [](const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return "{" + s + "}";
  };
  return "D" + join(k.I) + join(k.J);
}

/// Number of strictly-upper entries of an m x m matrix.
inline std::size_t upper_count(int m) { return static_cast<std::size_t>(m) * (m - 1) / 2; }

/// Unit upper triangular matrix with fresh variables x1, x2, ... filling
/// the strictly-upper entries row by row.
inline SymbolicMatrix unitriangular(int m) {
  if (m < 2) throw ShapeError("size must be at least 2");
  const std::size_t nv = upper_count(m);
  SymbolicMatrix x(m, std::vector<LaurentPoly>(m, LaurentPoly(nv)));
  std::size_t v = 0;
  for (int i = 0; i < m; ++i) {
    x[i][i] = LaurentPoly::one(nv);
    for (int j = i + 1; j < m; ++j) x[i][j] = LaurentPoly::variable(nv, v++);
  }
  return x;
}

namespace detail {

inline LaurentPoly cofactor_det(const SymbolicMatrix& a, std::vector<int>& cols, std::size_t row) {
  const std::size_t n = a.size();
  if (row == n) return LaurentPoly::one(a[0][0].nvars());
  LaurentPoly total(a[0][0].nvars());
  int sign = 1;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    int col = cols[c];
    if (!a[row][col].is_zero()) {
      cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(c));
      LaurentPoly sub = cofactor_det(a, cols, row + 1);
      cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(c), col);
      LaurentPoly term = a[row][col] * sub;
      if (sign > 0)
        total += term;
      else
        total -= term;
    }
    sign = -sign;
  }
  return total;
}

inline LaurentPoly bareiss_det(SymbolicMatrix a) {
  const std::size_t n = a.size();
  const std::size_t nv = a[0][0].nvars();
  LaurentPoly prev = LaurentPoly::one(nv);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a[p][k].is_zero()) ++p;
      if (p == n) return LaurentPoly(nv);
      std::swap(a[k], a[p]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = exact_div(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev);
      a[i][k] = LaurentPoly(nv);
    }
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

}  // namespace detail

/// Exact determinant: cofactor expansion below size 6, fraction-free
/// elimination from size 6 on.
inline LaurentPoly determinant(const SymbolicMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0) throw ShapeError("empty matrix");
  for (const auto& row : a)
    if (row.size() != n) throw ShapeError("matrix is not square");
  if (n < 6) {
    std::vector<int> cols(n);
    for (std::size_t c = 0; c < n; ++c) cols[c] = static_cast<int>(c);
    return detail::cofactor_det(a, cols, 0);
  }
  return detail::bareiss_det(a);
}

inline void check_key(const MinorKey& key, std::size_t m) {
  if (key.I.size() != key.J.size()) throw ShapeError("row and column sets differ in size");
  for (const auto* set : {&key.I, &key.J}) {
    for (std::size_t k = 0; k < set->size(); ++k) {
      int x = (*set)[k];
      if (x < 1 || static_cast<std::size_t>(x) > m) throw ShapeError("index " + std::to_string(x) + " out of range");
      if (k > 0 && (*set)[k - 1] >= x) throw ShapeError("index sets must be strictly increasing");
    }
  }
}

inline LaurentPoly minor(const SymbolicMatrix& x, const MinorKey& key) {
  check_key(key, x.size());
  const std::size_t nv = x[0][0].nvars();
  if (key.I.empty()) return LaurentPoly::one(nv);
  SymbolicMatrix sub;
  for (int i : key.I) {
    std::vector<LaurentPoly> row;
    for (int j : key.J) row.push_back(x[i - 1][j - 1]);
    sub.push_back(std::move(row));
  }
  return determinant(sub);
}

/// Remove the common initial segment [1,b] of I and J.
inline MinorKey strip_prefix(const MinorKey& key) {
  std::size_t b = 0;
  while (b < key.I.size() && key.I[b] == static_cast<int>(b + 1) && key.J[b] == static_cast<int>(b + 1)) ++b;
  MinorKey out;
  out.I.assign(key.I.begin() + static_cast<std::ptrdiff_t>(b), key.I.end());
  out.J.assign(key.J.begin() + static_cast<std::ptrdiff_t>(b), key.J.end());
  return out;
}

/// I = [1, i-a], J = [1, i-b-1] u [n-b+1, n-a+1], for 0 <= a <= b <= i-1.
inline MinorKey interval_minor_key(int i, int a, int b, int n) {
  if (i < 1 || i > n || a < 0 || a > b || b > i - 1)
    throw IndexError("need 1 <= i <= n and 0 <= a <= b <= i-1");
  MinorKey k;
  for (int x = 1; x <= i - a; ++x) k.I.push_back(x);
  for (int x = 1; x <= i - b - 1; ++x) k.J.push_back(x);
  for (int x = n - b + 1; x <= n - a + 1; ++x) k.J.push_back(x);
  return k;
}

/// x_{i_1}(t_1) ... x_{i_m}(t_m) with x_i(t) = 1 + t E_{i,i+1}.
inline SymbolicMatrix one_param_product(const std::vector<int>& word, int size) {
  const std::size_t m = word.size();
  SymbolicMatrix p(size, std::vector<LaurentPoly>(size, LaurentPoly(m)));
  for (int i = 0; i < size; ++i) p[i][i] = LaurentPoly::one(m);
  for (std::size_t l = 0; l < m; ++l) {
    int i = word[l];
    if (i < 1 || i >= size) throw IndexError("letter " + std::to_string(i) + " needs size > " + std::to_string(i));
    LaurentPoly t = LaurentPoly::variable(m, l);
    for (int r = 0; r < size; ++r)
      if (!p[r][i - 1].is_zero()) p[r][i] += p[r][i - 1] * t;
  }
  return p;
}

/// Rows [1,j]; columns the image of [1,j] under s_{i_1} ... s_{i_k}
/// (s_{i_k} acting first), s_i swapping i and i+1.
inline MinorKey w_minor(const std::vector<int>& word, std::size_t k, int j, int size) {
  if (k > word.size()) throw IndexError("prefix longer than word");
  if (j < 1 || j >= size) throw IndexError("j out of range");
  std::vector<int> set;
  for (int x = 1; x <= j; ++x) set.push_back(x);
  for (std::size_t l = k; l-- > 0;) {
    int i = word[l];
    if (i < 1 || i >= size) throw IndexError("letter out of range");
    for (int& x : set) {
      if (x == i)
        x = i + 1;
      else if (x == i + 1)
        x = i;
    }
  }
  std::sort(set.begin(), set.end());
  MinorKey key;
  for (int x = 1; x <= j; ++x) key.I.push_back(x);
  key.J = set;
  return key;
}

}  // namespace meshclust
