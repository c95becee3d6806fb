#pragma once

// Brute-force oracles used to validate the library. Everything here is
// computed from first principles, independently of the code under test:
// distances by Floyd-Warshall, determinants and inverses by pivoted LU,
// essentiality by integer divisor arithmetic, characteristic polynomials
// by Laplace expansion over polynomial entries.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "eigraph/poly.hpp"

namespace oracle {

inline std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// The ideal generated by g in Z_n meets the ideal generated by h in
// lcm(g, h); the intersection is zero exactly when lcm(g, h) = n.
inline bool essential_int(std::uint64_t g, std::uint64_t n) {
  if (g == 0 || n % g != 0) throw std::invalid_argument("g must divide n");
  for (std::uint64_t h : divisors(n)) {
    if (h == n) continue;
    std::uint64_t l = g / std::gcd(g, h) * h;
    if (l == n) return false;
  }
  return true;
}

inline bool adjacent_int(std::uint64_t x, std::uint64_t y, std::uint64_t n) {
  return essential_int(std::gcd(x, y), n);
}

// All-pairs shortest paths on an unweighted graph given by a flat
// adjacency matrix. Unreachable pairs keep the sentinel -1.
inline std::vector<int> floyd_warshall(const std::vector<char>& adj, std::size_t n) {
  const int inf = 1 << 28;
  std::vector<int> d(n * n, inf);
  for (std::size_t i = 0; i < n; ++i) {
    d[i * n + i] = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (adj[i * n + j]) d[i * n + j] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        d[i * n + j] = std::min(d[i * n + j], d[i * n + k] + d[k * n + j]);
  for (auto& v : d)
    if (v >= inf) v = -1;
  return d;
}

// Determinant by LU with partial pivoting.
inline double lu_det(std::vector<double> a, std::size_t n) {
  double det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::fabs(a[r * n + col]) > std::fabs(a[piv * n + col])) piv = r;
    if (a[piv * n + col] == 0.0) return 0.0;
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a[piv * n + c], a[col * n + c]);
      det = -det;
    }
    det *= a[col * n + col];
    for (std::size_t r = col + 1; r < n; ++r) {
      double f = a[r * n + col] / a[col * n + col];
      for (std::size_t c = col; c < n; ++c) a[r * n + c] -= f * a[col * n + c];
    }
  }
  return det;
}

// Inverse by Gauss-Jordan with partial pivoting.
inline std::vector<double> lu_inverse(std::vector<double> a, std::size_t n) {
  std::vector<double> inv(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) inv[i * n + i] = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::fabs(a[r * n + col]) > std::fabs(a[piv * n + col])) piv = r;
    if (a[piv * n + col] == 0.0) throw std::invalid_argument("singular matrix");
    if (piv != col)
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a[piv * n + c], a[col * n + c]);
        std::swap(inv[piv * n + c], inv[col * n + c]);
      }
    double p = a[col * n + col];
    for (std::size_t c = 0; c < n; ++c) {
      a[col * n + c] /= p;
      inv[col * n + c] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      double f = a[r * n + col];
      if (f == 0.0) continue;
      for (std::size_t c = 0; c < n; ++c) {
        a[r * n + c] -= f * a[col * n + c];
        inv[r * n + c] -= f * inv[col * n + c];
      }
    }
  }
  return inv;
}

// det(A - lambda I) by Laplace expansion over polynomial entries.
// Exponential in n, used only on small matrices.
inline eigraph::IntPoly charpoly_laplace(const std::vector<std::int64_t>& a, std::size_t n) {
  using eigraph::IntPoly;
  std::vector<IntPoly> m(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m[i * n + j] = IntPoly{eigraph::BigInt(a[i * n + j])};
      if (i == j) m[i * n + j] = eigraph::poly_sub(m[i * n + j], IntPoly{0, 1});
    }
  std::vector<std::size_t> cols(n);
  for (std::size_t j = 0; j < n; ++j) cols[j] = j;
  std::function<IntPoly(std::size_t, std::vector<std::size_t>)> det =
      [&](std::size_t row, std::vector<std::size_t> cs) -> IntPoly {
    if (cs.empty()) return IntPoly{1};
    IntPoly acc{0};
    for (std::size_t k = 0; k < cs.size(); ++k) {
      std::vector<std::size_t> rest;
      for (std::size_t t = 0; t < cs.size(); ++t)
        if (t != k) rest.push_back(cs[t]);
      IntPoly term = eigraph::poly_mul(m[row * n + cs[k]], det(row + 1, rest));
      if (k % 2 == 1) term = eigraph::poly_neg(term);
      acc = eigraph::poly_add(acc, term);
    }
    return acc;
  };
  return det(0, cols);
}

// Symmetric 0/1 matrix with edge probability one half, zero diagonal.
inline std::vector<std::int64_t> random_adjacency(std::mt19937& rng, std::size_t n) {
  std::vector<std::int64_t> a(n * n, 0);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      a[i * n + j] = a[j * n + i] = coin(rng) ? 1 : 0;
  return a;
}

inline std::vector<std::int64_t> random_int_matrix(std::mt19937& rng, std::size_t n,
                                                std::int64_t lo, std::int64_t hi,
                                                bool symmetric) {
  std::vector<std::int64_t> a(n * n, 0);
  std::uniform_int_distribution<std::int64_t> pick(lo, hi);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = symmetric ? i : 0; j < n; ++j) {
      a[i * n + j] = pick(rng);
      if (symmetric) a[j * n + i] = a[i * n + j];
    }
  return a;
}

inline std::vector<std::int64_t> complete_graph(std::size_t n) {
  std::vector<std::int64_t> a(n * n, 1);
  for (std::size_t i = 0; i < n; ++i) a[i * n + i] = 0;
  return a;
}

inline std::vector<std::int64_t> cycle_graph(std::size_t n) {
  std::vector<std::int64_t> a(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    a[i * n + (i + 1) % n] = 1;
    a[(i + 1) % n * n + i] = 1;
  }
  return a;
}

inline std::vector<double> to_double(const std::vector<std::int64_t>& a) {
  return std::vector<double>(a.begin(), a.end());
}

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace oracle
