#pragma once

// Distance-k graphs on the symbols [1,n] and exact Hamiltonian path/cycle
// enumeration on them. This is the independent oracle the closed-form row
// classification is checked against. Also: the reverse/negate/rotate
// symmetries on extended difference rows.

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <set>
#include <thread>

#include "midls/core.hpp"
#include "midls/diffs.hpp"

namespace midls {

// Vertices are symbols; x ~ y iff dist(x,y) >= k. Vertex-transitive since
// adjacency depends only on x-y mod n. Bitmask adjacency caps n at 64.
struct DistanceGraph {
  int n = 0;
  int k = 0;
  std::vector<uint64_t> adj;  // adj[v] over 0-based vertices

  bool edge(Symbol x, Symbol y) const {
    return (adj[static_cast<size_t>(x) - 1] >> (y - 1)) & 1u;
  }
  int degree(Symbol x) const {
    return std::popcount(adj[static_cast<size_t>(x) - 1]);
  }
};

inline DistanceGraph build_graph(int n, int k) {
  if (n < 2 || n > 64) throw std::invalid_argument("build_graph: order must be in [2,64]");
  if (k < 1 || k > n / 2)
    throw std::invalid_argument("build_graph: threshold must be in [1, n/2]");
  DistanceGraph g;
  g.n = n;
  g.k = k;
  g.adj.assign(static_cast<size_t>(n), 0);
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      if (dist(x, y, n) >= k) g.adj[static_cast<size_t>(x) - 1] |= 1ull << (y - 1);
  return g;
}

namespace detail {

// Depth-first over neighbors in increasing symbol order; emits paths in
// lexicographic order. sink returns void; counting callers pass a counter.
template <typename Sink>
inline void ham_dfs(const DistanceGraph& g, int v, uint64_t visited, Row& path, Sink&& sink) {
  if (static_cast<int>(path.size()) == g.n) {
    sink(path);
    return;
  }
  uint64_t cand = g.adj[static_cast<size_t>(v)] & ~visited;
  while (cand) {
    int u = std::countr_zero(cand);
    cand &= cand - 1;
    path.push_back(u + 1);
    ham_dfs(g, u, visited | (1ull << u), path, sink);
    path.pop_back();
  }
}

}  // namespace detail

// All Hamiltonian paths beginning at `start`, as rows over [1,n], in
// lexicographic order. With start=1 these are exactly the normal rows of
// inner distance >= k.
inline std::vector<Row> ham_paths(const DistanceGraph& g, Symbol start) {
  if (start < 1 || start > g.n) throw std::invalid_argument("ham_paths: start out of range");
  std::vector<Row> out;
  Row path{start};
  detail::ham_dfs(g, start - 1, 1ull << (start - 1), path,
                  [&](const Row& p) { out.push_back(p); });
  return out;
}

// Count without materializing. With threads > 1 the search is split by the
// second vertex; counts are summed, so the result is schedule-independent.
inline uint64_t ham_path_count(const DistanceGraph& g, Symbol start, int threads = 1) {
  if (start < 1 || start > g.n) throw std::invalid_argument("ham_path_count: start out of range");
  int v0 = start - 1;
  std::vector<int> seconds;
  {
    uint64_t cand = g.adj[static_cast<size_t>(v0)];
    while (cand) {
      seconds.push_back(std::countr_zero(cand));
      cand &= cand - 1;
    }
  }
  auto count_from = [&](int u) {
    uint64_t local = 0;
    Row path{start, u + 1};
    detail::ham_dfs(g, u, (1ull << v0) | (1ull << u), path, [&](const Row&) { ++local; });
    return local;
  };
  if (threads <= 1) {
    uint64_t total = 0;
    for (int u : seconds) total += count_from(u);
    return total;
  }
  std::atomic<size_t> next{0};
  std::vector<uint64_t> partial(seconds.size(), 0);
  std::vector<std::thread> pool;
  int workers = std::min<int>(threads, static_cast<int>(seconds.size()));
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (;;) {
        size_t idx = next.fetch_add(1);
        if (idx >= seconds.size()) return;
        partial[idx] = count_from(seconds[idx]);
      }
    });
  for (auto& t : pool) t.join();
  uint64_t total = 0;
  for (uint64_t c : partial) total += c;
  return total;
}

// Paths whose two endpoints are also adjacent, i.e. dist(s_1, s_n) >= k.
inline std::vector<Row> ham_cycles(const DistanceGraph& g, Symbol start) {
  std::vector<Row> out;
  for (auto& p : ham_paths(g, start))
    if (g.edge(p.back(), p.front())) out.push_back(std::move(p));
  return out;
}

// --- symmetries on extended difference rows ---

enum SymOps : unsigned {
  SymReverse = 1u,
  SymNegate = 2u,
  SymRotate = 4u,
};

// Reversal of the underlying row composed with negation: eps reversed, h kept.
inline ExtDiffRow reverse_ext(const ExtDiffRow& e) {
  ExtDiffRow out = e;
  std::reverse(out.eps.begin(), out.eps.end());
  return out;
}

inline ExtDiffRow negate_ext(const ExtDiffRow& e) {
  ExtDiffRow out = e;
  for (int& x : out.eps) x = -x;
  out.h = -e.h;
  return out;
}

// Right-rotation of the full n-entry sequence (eps_1..eps_{n-1}, h); starts
// the induced cycle one step earlier. Only cycles may rotate.
inline ExtDiffRow rotate_ext(const ExtDiffRow& e, int by = 1) {
  require_ext_diff_row(e);
  if (!is_cycle_ext(e))
    throw std::invalid_argument("rotate_ext: not a cycle (|h| exceeds n/2 - k)");
  std::vector<int> full = e.eps;
  full.push_back(e.h);
  std::rotate(full.begin(), full.end() - static_cast<size_t>(mod(by, e.n)), full.end());
  ExtDiffRow out;
  out.n = e.n;
  out.h = full.back();
  full.pop_back();
  out.eps = std::move(full);
  return out;
}

// Closure of e under the chosen symmetry generators, sorted.
inline std::vector<ExtDiffRow> symmetry_orbit(const ExtDiffRow& e, unsigned ops) {
  require_ext_diff_row(e);
  if ((ops & SymRotate) && !is_cycle_ext(e))
    throw std::invalid_argument("symmetry_orbit: rotation requested on a non-cycle");
  std::set<ExtDiffRow> seen{e};
  std::vector<ExtDiffRow> frontier{e};
  while (!frontier.empty()) {
    std::vector<ExtDiffRow> next;
    for (const auto& cur : frontier) {
      std::vector<ExtDiffRow> images;
      if (ops & SymReverse) images.push_back(reverse_ext(cur));
      if (ops & SymNegate) images.push_back(negate_ext(cur));
      if (ops & SymRotate) images.push_back(rotate_ext(cur));
      for (auto& img : images)
        if (seen.insert(img).second) next.push_back(std::move(img));
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace midls
