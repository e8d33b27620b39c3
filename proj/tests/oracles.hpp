#pragma once

// Independent reference computations used to check the library.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <limits>
#include <queue>
#include <vector>

#include "gograph/graph.hpp"
#include "gograph/ordering.hpp"

namespace oracle {

using gograph::Graph;
using gograph::VertexId;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Positive edges by scanning every (vertex, out-arc) pair and comparing slots in the raw sequence.
inline std::uint64_t naive_m(const Graph& g, const std::vector<VertexId>& seq) {
  std::vector<std::size_t> slot(seq.size());
  for (std::size_t i = 0; i < seq.size(); ++i) slot[seq[i]] = i;
  std::uint64_t m = 0;
  for (VertexId u = 0; u < g.num_vertices(); ++u)
    for (const auto& arc : g.out(u))
      if (slot[u] < slot[arc.vertex]) ++m;
  return m;
}

inline std::uint64_t self_loops(const Graph& g) {
  std::uint64_t s = 0;
  for (VertexId u = 0; u < g.num_vertices(); ++u)
    for (const auto& arc : g.out(u)) s += arc.vertex == u;
  return s;
}

// Best M over all permutations, computed with plain recursion (no next_permutation).
inline std::uint64_t exhaustive_max_m(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<VertexId> seq;
  std::vector<char> used(n, 0);
  std::uint64_t best = 0;
  auto rec = [&](auto&& self) -> void {
    if (seq.size() == n) {
      best = std::max(best, naive_m(g, seq));
      return;
    }
    for (VertexId v = 0; v < n; ++v) {
      if (used[v]) continue;
      used[v] = 1;
      seq.push_back(v);
      self(self);
      seq.pop_back();
      used[v] = 0;
    }
  };
  rec(rec);
  return best;
}

inline std::vector<double> dijkstra(const Graph& g, VertexId source) {
  std::vector<double> dist(g.num_vertices(), kInf);
  using Item = std::pair<double, VertexId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[source] = 0;
  pq.push({0.0, source});
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (d > dist[u]) continue;
    for (const auto& arc : g.out(u))
      if (d + arc.weight < dist[arc.vertex]) {
        dist[arc.vertex] = d + arc.weight;
        pq.push({dist[arc.vertex], arc.vertex});
      }
  }
  return dist;
}

inline std::vector<double> bfs_levels(const Graph& g, VertexId source) {
  std::vector<double> level(g.num_vertices(), kInf);
  std::deque<VertexId> q{source};
  level[source] = 0;
  while (!q.empty()) {
    const VertexId u = q.front();
    q.pop_front();
    for (const auto& arc : g.out(u))
      if (level[arc.vertex] == kInf) {
        level[arc.vertex] = level[u] + 1;
        q.push_back(arc.vertex);
      }
  }
  return level;
}

// Jacobi PageRank run to a tight tolerance, pushing along out-arcs.
inline std::vector<double> pagerank_fixed_point(const Graph& g, double d) {
  const std::size_t n = g.num_vertices();
  std::vector<double> x(n, 0.0), next(n);
  for (int it = 0; it < 100000; ++it) {
    std::fill(next.begin(), next.end(), 1.0 - d);
    for (VertexId u = 0; u < n; ++u) {
      const auto deg = g.out_degree(u);
      for (const auto& arc : g.out(u)) next[arc.vertex] += d * x[u] / static_cast<double>(deg);
    }
    double diff = 0;
    for (std::size_t v = 0; v < n; ++v) diff = std::max(diff, std::abs(next[v] - x[v]));
    x.swap(next);
    if (diff < 1e-13) break;
  }
  return x;
}

// Penalized hitting probability by Jacobi iteration, source pinned to 1.
inline std::vector<double> php_fixed_point(const Graph& g, VertexId s, double c) {
  const std::size_t n = g.num_vertices();
  std::vector<double> win(n, 0.0);
  for (VertexId u = 0; u < n; ++u)
    for (const auto& arc : g.out(u)) win[arc.vertex] += arc.weight;
  std::vector<double> x(n, 0.0), next(n);
  x[s] = 1.0;
  for (int it = 0; it < 100000; ++it) {
    std::fill(next.begin(), next.end(), 0.0);
    for (VertexId u = 0; u < n; ++u)
      for (const auto& arc : g.out(u)) next[arc.vertex] += c * arc.weight / win[arc.vertex] * x[u];
    next[s] = 1.0;
    double diff = 0;
    for (std::size_t v = 0; v < n; ++v) diff = std::max(diff, std::abs(next[v] - x[v]));
    x.swap(next);
    if (diff < 1e-13) break;
  }
  return x;
}

inline bool is_permutation_of_n(const std::vector<VertexId>& seq, std::size_t n) {
  if (seq.size() != n) return false;
  std::vector<char> seen(n, 0);
  for (VertexId v : seq) {
    if (v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

inline std::vector<VertexId> to_vector(const gograph::Ordering& o) { return {o.seq().begin(), o.seq().end()}; }

}  // namespace oracle
