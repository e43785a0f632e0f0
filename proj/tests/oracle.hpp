#pragma once

// Slow reference implementations used to cross-check the library. They work
// on plain vectors of 0/1 ints and share no code with src/.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "z2cb/gf2.hpp"

namespace oracle {

using Bits = std::vector<int>;
using Matrix = std::vector<Bits>;

inline Matrix to_bits(const z2cb::GenMatrix& m) {
  Matrix out;
  for (const auto& row : m.rows()) {
    Bits b(static_cast<std::size_t>(m.n()));
    for (int j = 0; j < m.n(); ++j) b[static_cast<std::size_t>(j)] = row.get(j) ? 1 : 0;
    out.push_back(b);
  }
  return out;
}

inline int rank(Matrix m) {
  int r = 0;
  const int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
  for (int c = 0; c < cols && r < static_cast<int>(m.size()); ++c) {
    int p = r;
    while (p < static_cast<int>(m.size()) && m[p][c] == 0) ++p;
    if (p == static_cast<int>(m.size())) continue;
    std::swap(m[p], m[r]);
    for (int i = 0; i < static_cast<int>(m.size()); ++i) {
      if (i != r && m[i][c]) {
        for (int j = 0; j < cols; ++j) m[i][j] ^= m[r][j];
      }
    }
    ++r;
  }
  return r;
}

// Every message x in 0..2^k-1 encoded as the row combination x * G.
inline std::vector<Bits> codewords(const Matrix& g, int n) {
  const int k = static_cast<int>(g.size());
  std::vector<Bits> out;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << k); ++x) {
    Bits w(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < k; ++i) {
      if ((x >> i) & 1) {
        for (int j = 0; j < n; ++j) w[j] ^= g[i][j];
      }
    }
    out.push_back(w);
  }
  return out;
}

inline int weight(const Bits& w) { return static_cast<int>(std::count(w.begin(), w.end(), 1)); }

inline int min_distance(const z2cb::GenMatrix& m) {
  int best = m.n() + 1;
  for (const auto& w : codewords(to_bits(m), m.n())) {
    const int wt = weight(w);
    if (wt > 0) best = std::min(best, wt);
  }
  return best;
}

inline std::vector<std::uint64_t> weight_distribution(const z2cb::GenMatrix& m) {
  std::vector<std::uint64_t> a(static_cast<std::size_t>(m.n() + 1), 0);
  for (const auto& w : codewords(to_bits(m), m.n())) ++a[static_cast<std::size_t>(weight(w))];
  return a;
}

// Exact for every n <= 60 used by the tests.
inline unsigned __int128 binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  unsigned __int128 c = 1;
  for (int i = 1; i <= k; ++i) c = c * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  return c;
}

inline double entropy(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log(p) / std::log(2.0) - (1 - p) * std::log(1 - p) / std::log(2.0);
}

// Random full-rank k x n matrix drawn row by row with rejection.
inline z2cb::GenMatrix random_full_rank(std::mt19937_64& rng, int n, int k) {
  for (;;) {
    std::vector<z2cb::Gf2Word> rows;
    for (int i = 0; i < k; ++i) {
      z2cb::Gf2Word w(n);
      for (int j = 0; j < n; ++j) {
        if (rng() & 1) w.set(j);
      }
      rows.push_back(w);
    }
    z2cb::GenMatrix m(n, rows);
    if (rank(to_bits(m)) == k) return m;
  }
}

// Replaces the rows by random invertible combinations of themselves.
inline z2cb::GenMatrix random_basis_change(std::mt19937_64& rng, const z2cb::GenMatrix& m) {
  const int k = m.k();
  for (;;) {
    std::vector<z2cb::Gf2Word> rows;
    Matrix coeffs;
    for (int i = 0; i < k; ++i) {
      z2cb::Gf2Word w(m.n());
      Bits c(static_cast<std::size_t>(k));
      for (int j = 0; j < k; ++j) {
        c[j] = static_cast<int>(rng() & 1);
        if (c[j]) w ^= m.row(j);
      }
      rows.push_back(w);
      coeffs.push_back(c);
    }
    if (rank(coeffs) == k) return z2cb::GenMatrix(m.n(), rows);
  }
}

}  // namespace oracle
