#pragma once

// Independent reference implementations used to cross-check the library,
// plus small seeded generators for property tests. Nothing here calls the
// routines it is meant to check.

#include "swx/lattice.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using swx::IntMatrix;
using swx::Rational;
using RMat = std::vector<std::vector<Rational>>;

inline RMat to_rational(const IntMatrix& m) {
  RMat out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (auto v : m[i]) out[i].push_back(Rational(v));
  return out;
}

// Congruence diagonalization P^T A P over Q; counts signs of the pivots.
inline swx::Signature diagonal_signature(const IntMatrix& gram) {
  RMat a = to_rational(gram);
  const std::size_t n = a.size();
  swx::Signature sig;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][p] == 0) ++p;
      if (p < n) {
        std::swap(a[k], a[p]);
        for (auto& row : a) std::swap(row[k], row[p]);
      } else {
        std::size_t q = k + 1;
        while (q < n && a[k][q] == 0) ++q;
        if (q == n) continue;  // zero row; cannot happen for unimodular input
        // e_k += e_q gives a[k][k] = 2 a[k][q] != 0.
        for (std::size_t j = 0; j < n; ++j) a[k][j] += a[q][j];
        for (std::size_t i = 0; i < n; ++i) a[i][k] += a[i][q];
      }
    }
    const Rational piv = a[k][k];
    if (piv > 0) ++sig.positive;
    else ++sig.negative;
    for (std::size_t i = k + 1; i < n; ++i) {
      const Rational f = a[i][k] / piv;
      if (f == 0) continue;
      for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[k][j];
      for (std::size_t j = 0; j < n; ++j) a[j][i] -= f * a[j][k];
    }
  }
  return sig;
}

inline Rational gauss_determinant(RMat a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      det = -det;
    }
    det *= a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return det;
}

// Sum over all perfect matchings {(i1,j1),...,(in,jn)} of
// sgn(i1 j1 ... in jn) * prod a[ik][jk], the sign taken from the inversion
// count of the flattened permutation.
inline Rational matching_pfaffian(const RMat& a) {
  const std::size_t n = a.size();
  if (n % 2) return 0;
  Rational total = 0;
  std::vector<int> perm;
  std::vector<bool> used(n, false);
  std::function<void()> extend = [&] {
    std::size_t i = 0;
    while (i < n && used[i]) ++i;
    if (i == n) {
      int inv = 0;
      for (std::size_t p = 0; p < perm.size(); ++p)
        for (std::size_t q = p + 1; q < perm.size(); ++q)
          if (perm[p] > perm[q]) ++inv;
      Rational term = inv % 2 ? -1 : 1;
      for (std::size_t p = 0; p < perm.size(); p += 2) term *= a[perm[p]][perm[p + 1]];
      total += term;
      return;
    }
    used[i] = true;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (used[j]) continue;
      used[j] = true;
      perm.push_back(static_cast<int>(i));
      perm.push_back(static_cast<int>(j));
      extend();
      perm.resize(perm.size() - 2);
      used[j] = false;
    }
    used[i] = false;
  };
  extend();
  return total;
}

// Principal submatrix on the given indices.
inline RMat submatrix(const RMat& a, const std::vector<int>& idx) {
  RMat out(idx.size(), std::vector<Rational>(idx.size()));
  for (std::size_t p = 0; p < idx.size(); ++p)
    for (std::size_t q = 0; q < idx.size(); ++q) out[p][q] = a[idx[p]][idx[q]];
  return out;
}

// Sign of the permutation that sorts the concatenation of two index lists.
inline int shuffle_sign(const std::vector<int>& first, const std::vector<int>& second) {
  int inversions = 0;
  for (int a : first)
    for (int b : second)
      if (a > b) ++inversions;
  return inversions % 2 ? -1 : 1;
}

// Characteristic by scanning every x in {0,1}^n: c.x == x.x (mod 2).
inline bool brute_characteristic(const IntMatrix& q, const std::vector<std::int64_t>& c) {
  const std::size_t n = q.size();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::int64_t cx = 0, xx = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!(mask >> i & 1)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        cx += c[j] * q[j][i];
        if (mask >> j & 1) xx += q[i][j];
      }
    }
    if (((cx - xx) % 2 + 2) % 2 != 0) return false;
  }
  return true;
}

struct Gen {
  std::mt19937 rng;
  explicit Gen(std::uint32_t seed) : rng(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  Rational rational(int span = 9, int max_den = 5) {
    return Rational(integer(-span, span)) / Rational(integer(1, max_den));
  }

  // Random unimodular form: conjugate a diagonal ±1 / U sum by a random
  // elementary integer matrix.
  IntMatrix unimodular(std::size_t n, int steps = 4) {
    IntMatrix g(n, std::vector<std::int64_t>(n, 0));
    std::size_t i = 0;
    while (i < n) {
      if (i + 1 < n && integer(0, 2) == 0) {
        g[i][i + 1] = g[i + 1][i] = 1;
        i += 2;
      } else {
        g[i][i] = integer(0, 1) ? 1 : -1;
        ++i;
      }
    }
    for (int s = 0; s < steps && n > 1; ++s) {
      const std::size_t a = static_cast<std::size_t>(integer(0, static_cast<int>(n) - 1));
      std::size_t b = static_cast<std::size_t>(integer(0, static_cast<int>(n) - 2));
      if (b >= a) ++b;
      const int k = integer(-2, 2);
      // Row and column operation e_a += k e_b.
      for (std::size_t j = 0; j < n; ++j) g[a][j] += k * g[b][j];
      for (std::size_t j = 0; j < n; ++j) g[j][a] += k * g[j][b];
    }
    return g;
  }
};

}  // namespace oracle
