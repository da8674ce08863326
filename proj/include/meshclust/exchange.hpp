#pragma once

// Exchange matrices and matrix mutation.

#include <cstddef>
#include <cstdlib>
#include <string>
#include <vector>

#include "meshclust/errors.hpp"
#include "meshclust/quiver.hpp"

namespace meshclust {

/// Square integer matrix b with a frozen index set (0-based indices).
/// Entries between two frozen indices are carried along but are not
/// controlled by mutation; compare with equal_mod_frozen.
struct ExchangeMatrix {
  std::vector<std::vector<long long>> b;
  std::vector<bool> frozen;

  std::size_t size() const { return b.size(); }
  long long operator()(std::size_t i, std::size_t j) const { return b[i][j]; }
  bool is_frozen(std::size_t k) const { return frozen[k]; }

  std::vector<std::size_t> mutable_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < size(); ++k)
      if (!frozen[k]) out.push_back(k);
    return out;
  }

  friend bool operator==(const ExchangeMatrix&, const ExchangeMatrix&) = default;
};

/// b_ij = #arrows(j -> i) - #arrows(i -> j), vertex k+1 of g is index k.
inline ExchangeMatrix b_matrix(const Quiver& g, const std::vector<bool>& frozen) {
  const std::size_t r = static_cast<std::size_t>(g.n);
  if (frozen.size() != r) throw IndexError("frozen mask has wrong size");
  ExchangeMatrix m{std::vector<std::vector<long long>>(r, std::vector<long long>(r, 0)), frozen};
  std::vector<std::vector<long long>> count(r, std::vector<long long>(r, 0));
  for (const auto& [s, t] : g.arrows) {
    if (s == t) throw LoopError("loop at vertex " + std::to_string(s));
    ++count[s - 1][t - 1];
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      if (count[i][j] > 0 && count[j][i] > 0 && !(frozen[i] && frozen[j]))
        throw TwoCycleError("2-cycle between " + std::to_string(i + 1) + " and " + std::to_string(j + 1));
      m.b[i][j] = count[j][i] - count[i][j];
    }
  }
  return m;
}

/// Inverse of b_matrix: b_ij > 0 gives b_ij arrows j -> i.
inline Quiver matrix_to_quiver(const ExchangeMatrix& m) {
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      for (long long c = 0; c < m.b[i][j]; ++c)
        arrows.emplace_back(static_cast<int>(j + 1), static_cast<int>(i + 1));
  return make_quiver(static_cast<int>(m.size()), std::move(arrows));
}

inline bool principal_part_skew(const ExchangeMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (!m.frozen[i] && !m.frozen[j] && m.b[i][j] != -m.b[j][i]) return false;
  return true;
}

/// Matrix mutation in direction k.
inline ExchangeMatrix mutate_matrix(const ExchangeMatrix& m, std::size_t k) {
  if (k >= m.size()) throw IndexError("index " + std::to_string(k + 1) + " out of range");
  if (m.frozen[k]) throw FrozenMutationError("index " + std::to_string(k + 1) + " is frozen");
  ExchangeMatrix out = m;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (i == k || j == k) {
        out.b[i][j] = -m.b[i][j];
      } else {
        long long bik = m.b[i][k], bkj = m.b[k][j];
        out.b[i][j] = m.b[i][j] + (std::llabs(bik) * bkj + bik * std::llabs(bkj)) / 2;
      }
    }
  }
  return out;
}

/// Equality ignoring entries between two frozen indices.
inline bool equal_mod_frozen(const ExchangeMatrix& a, const ExchangeMatrix& b) {
  if (a.size() != b.size() || a.frozen != b.frozen) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (!(a.frozen[i] && a.frozen[j]) && a.b[i][j] != b.b[i][j]) return false;
  return true;
}

/// Rows over all indices, columns over mutable indices only.
inline std::vector<std::vector<long long>> reduced_part(const ExchangeMatrix& m) {
  auto cols = m.mutable_indices();
  std::vector<std::vector<long long>> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j : cols) out[i].push_back(m.b[i][j]);
  return out;
}

}  // namespace meshclust
