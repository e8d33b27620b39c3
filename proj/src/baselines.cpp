#include "gograph/baselines.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <random>

#include "gograph/errors.hpp"

namespace gograph {

Ordering identity_order(const Graph& g) { return Ordering::identity(g.num_vertices()); }

Ordering random_order(const Graph& g, std::uint64_t seed) {
  std::vector<VertexId> seq(g.num_vertices());
  std::iota(seq.begin(), seq.end(), VertexId{0});
  std::mt19937_64 rng(seed);
  std::shuffle(seq.begin(), seq.end(), rng);
  return Ordering::from_sequence(std::move(seq));
}

Ordering degree_sort_order(const Graph& g) {
  std::vector<VertexId> seq(g.num_vertices());
  std::iota(seq.begin(), seq.end(), VertexId{0});
  std::stable_sort(seq.begin(), seq.end(), [&](VertexId a, VertexId b) { return g.degree(a) > g.degree(b); });
  return Ordering::from_sequence(std::move(seq));
}

std::vector<VertexId> hub_vertices(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<VertexId> hubs;
  if (n == 0) return hubs;
  // degree > sum/n, compared in integers
  const std::size_t sum = 2 * g.num_edges();
  for (VertexId v = 0; v < n; ++v)
    if (g.degree(v) * n > sum) hubs.push_back(v);
  return hubs;
}

namespace {

Ordering hubs_then_rest(const Graph& g, std::vector<VertexId> hubs) {
  std::vector<char> is_hub(g.num_vertices(), 0);
  for (VertexId h : hubs) is_hub[h] = 1;
  std::vector<VertexId> seq = std::move(hubs);
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (!is_hub[v]) seq.push_back(v);
  return Ordering::from_sequence(std::move(seq));
}

}  // namespace

Ordering hub_sort_order(const Graph& g) {
  std::vector<VertexId> hubs = hub_vertices(g);
  std::stable_sort(hubs.begin(), hubs.end(), [&](VertexId a, VertexId b) { return g.degree(a) > g.degree(b); });
  return hubs_then_rest(g, std::move(hubs));
}

Ordering hub_cluster_order(const Graph& g) { return hubs_then_rest(g, hub_vertices(g)); }

Ordering topological_order(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> indeg(n);
  for (VertexId v = 0; v < n; ++v) indeg[v] = g.in_degree(v);
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
  for (VertexId v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push(v);

  std::vector<VertexId> seq;
  seq.reserve(n);
  while (!ready.empty()) {
    VertexId u = ready.top();
    ready.pop();
    seq.push_back(u);
    for (const Arc& a : g.out(u))
      if (--indeg[a.vertex] == 0) ready.push(a.vertex);
  }
  if (seq.size() == n) return Ordering::from_sequence(std::move(seq));

  // Every leftover vertex still has a leftover in-neighbor, so walking
  // backwards must revisit something; the first repeat lies on a cycle.
  VertexId v = 0;
  while (indeg[v] == 0) ++v;
  std::vector<char> on_walk(n, 0);
  while (!on_walk[v]) {
    on_walk[v] = 1;
    for (const Arc& a : g.in(v)) {
      if (indeg[a.vertex] > 0) {
        v = a.vertex;
        break;
      }
    }
  }
  throw CyclicGraphError(v, "graph has a cycle through vertex " + std::to_string(g.original_id(v)));
}

}  // namespace gograph
