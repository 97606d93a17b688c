#pragma once

// Inner-distance-aware square transformations: additions, symbol
// permutations, negation, the distance conjugate, the one-step distance
// reduction, and the closed-form odd-order construction.

#include "midls/core.hpp"
#include "midls/diffs.hpp"

namespace midls {

// Bijection on [1,n]; map[x-1] is the image of x.
using SymbolPermutation = std::vector<Symbol>;

inline void require_permutation(const SymbolPermutation& sigma, int n) {
  if (static_cast<int>(sigma.size()) != n)
    throw std::invalid_argument("symbol permutation: order mismatch");
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  for (Symbol s : sigma) {
    if (s < 1 || s > n || seen[static_cast<size_t>(s)])
      throw std::invalid_argument("symbol permutation: not a bijection on [1,n]");
    seen[static_cast<size_t>(s)] = 1;
  }
}

// Entrywise shift by i mod n; preserves inner distance, orbit size is n.
inline Square add(const Square& g, int i) {
  if (!g.is_square()) throw std::invalid_argument("add: not a square");
  Square out = g;
  for (Symbol& s : out.cells) s = mod(s - 1 + i, g.order) + 1;
  return out;
}

inline Square permute(const Square& g, const SymbolPermutation& sigma) {
  if (!g.is_square()) throw std::invalid_argument("permute: not a square");
  require_permutation(sigma, g.order);
  Square out = g;
  for (Symbol& s : out.cells) s = sigma[static_cast<size_t>(s) - 1];
  return out;
}

// x -> n-x with n fixed; a symbol permutation, so Latin and distance are kept.
inline Square negate_square(const Square& g) {
  if (!g.is_square()) throw std::invalid_argument("negate_square: not a square");
  Square out = g;
  for (Symbol& s : out.cells) s = s == g.order ? g.order : g.order - s;
  return out;
}

// The square with the same top-left symbol whose difference matrices are
// (-H,-V). An involution; preserves inner distance; pairs addition classes.
inline Square distance_conjugate(const Square& g) {
  if (!g.is_square()) throw std::invalid_argument("distance_conjugate: not a square");
  auto p = diff_matrices(g);
  return reconstruct(g.at(0, 0), negate_matrix(p.H, g.order), negate_matrix(p.V, g.order),
                     g.order);
}

// Lowers the inner distance m of a square to exactly m-1: shift so the first
// distance-m adjacency (row-major, right before down) becomes {n, m}, then
// swap symbols n and 1.
inline Square reduce_inner_distance(const Square& g) {
  if (!g.is_square()) throw std::invalid_argument("reduce_inner_distance: not a square");
  int n = g.order;
  int m = inner_distance(g);
  if (m <= 1) throw std::invalid_argument("reduce_inner_distance: inner distance already 1");
  int shift = -1;
  for (int i = 0; i < n && shift < 0; ++i)
    for (int j = 0; j < n && shift < 0; ++j) {
      for (auto [di, dj] : {std::pair{0, 1}, std::pair{1, 0}}) {
        if (i + di >= n || j + dj >= n) continue;
        Symbol a = g.at(i, j), b = g.at(i + di, j + dj);
        if (dist(a, b, n) != m) continue;
        // send the member whose partner sits m above it to n
        shift = mod(b - a, n) == m ? n - a : n - b;
        break;
      }
    }
  Square shifted = add(g, shift);
  SymbolPermutation swap_n1(static_cast<size_t>(n));
  for (int x = 1; x <= n; ++x) swap_n1[static_cast<size_t>(x) - 1] = x;
  swap_n1[0] = n;
  swap_n1[static_cast<size_t>(n) - 1] = 1;
  return permute(shifted, swap_n1);
}

// m_{i,j} = s + r*i + c*j (mod n) with 0-based i,j, so cell (1,1) holds s.
// For r,c = +-(n-1)/2 the result attains the odd-order maximum (n-1)/2.
inline Square odd_construction(int n, Symbol s, int r, int c) {
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("odd_construction: order must be odd and >= 3");
  if (s < 1 || s > n) throw std::invalid_argument("odd_construction: seed symbol out of range");
  int half = (n - 1) / 2;
  if (std::abs(r) != half || std::abs(c) != half)
    throw std::invalid_argument("odd_construction: r and c must be +-(n-1)/2");
  Square g;
  g.rows = g.cols = g.order = n;
  g.cells.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.at(i, j) = mod(s - 1 + r * i + c * j, n) + 1;
  return g;
}

}  // namespace midls
