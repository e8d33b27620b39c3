#include "gograph/metric.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "gograph/errors.hpp"

namespace gograph {
namespace {

void require_cover(std::size_t n, const Ordering& order) {
  if (order.size() != n)
    throw std::invalid_argument("ordering has " + std::to_string(order.size()) + " slots but graph has " +
                                std::to_string(n) + " vertices");
}

MetricReport finish(std::uint64_t positive, std::uint64_t negative, std::uint64_t loops) {
  MetricReport r;
  r.m_value = positive;
  r.positive = positive;
  r.negative = negative;
  r.skipped_self_loops = loops;
  r.edges_considered = positive + negative;
  r.ratio = r.edges_considered ? static_cast<double>(positive) / static_cast<double>(r.edges_considered) : 1.0;
  return r;
}

struct Counts {
  std::uint64_t positive = 0;
  std::uint64_t negative = 0;
  std::uint64_t loops = 0;
};

inline void count_vertex(const Graph& g, std::span<const std::size_t> pos, VertexId u, Counts& c) {
  const std::size_t pu = pos[u];
  for (const Arc& a : g.out(u)) {
    if (a.vertex == u)
      ++c.loops;
    else if (pu < pos[a.vertex])
      ++c.positive;
    else
      ++c.negative;
  }
}

// M of a small dense graph under `pos`, used inside the enumeration.
std::uint64_t small_m(const std::vector<std::pair<VertexId, VertexId>>& edges, const std::vector<std::size_t>& pos) {
  std::uint64_t m = 0;
  for (auto [u, v] : edges) m += pos[u] < pos[v];
  return m;
}

std::vector<std::pair<VertexId, VertexId>> non_loop_edges(const Graph& g) {
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId u = 0; u < g.num_vertices(); ++u)
    for (const Arc& a : g.out(u))
      if (a.vertex != u) edges.emplace_back(u, a.vertex);
  return edges;
}

struct Candidate {
  std::vector<VertexId> seq;
  std::uint64_t m = 0;
  bool valid = false;
};

// Enumerate all orders whose first slot is `head`, in lexicographic order.
Candidate best_with_head(std::size_t n, VertexId head, const std::vector<std::pair<VertexId, VertexId>>& edges) {
  std::vector<VertexId> seq;
  seq.push_back(head);
  for (VertexId v = 0; v < n; ++v)
    if (v != head) seq.push_back(v);
  std::vector<std::size_t> pos(n);
  Candidate best;
  do {
    for (std::size_t i = 0; i < n; ++i) pos[seq[i]] = i;
    std::uint64_t m = small_m(edges, pos);
    if (!best.valid || m > best.m) {
      best.seq = seq;
      best.m = m;
      best.valid = true;
    }
  } while (std::next_permutation(seq.begin() + 1, seq.end()));
  return best;
}

void guard(const Graph& g) {
  if (g.num_vertices() > kMaxBestOrderVertices)
    throw SizeGuardError("exhaustive order search is limited to " + std::to_string(kMaxBestOrderVertices) +
                         " vertices, graph has " + std::to_string(g.num_vertices()));
}

BestOrder reduce(std::vector<Candidate>& per_head) {
  // Heads are visited in increasing order, so the first strict maximum is
  // the lexicographically smallest optimal sequence.
  const Candidate* best = nullptr;
  for (const Candidate& c : per_head)
    if (c.valid && (!best || c.m > best->m)) best = &c;
  BestOrder result;
  if (best) {
    result.order = Ordering::from_sequence(best->seq);
    result.max_m = best->m;
  }
  return result;
}

}  // namespace

EdgeClass classify_edge(const Ordering& order, VertexId u, VertexId v) {
  if (u >= order.size() || v >= order.size()) throw std::out_of_range("edge endpoint out of range");
  if (u == v) return EdgeClass::self_loop;
  return order.position(u) < order.position(v) ? EdgeClass::positive : EdgeClass::negative;
}

MetricReport evaluate_m_serial(const Graph& g, const Ordering& order) {
  require_cover(g.num_vertices(), order);
  Counts c;
  auto pos = order.positions();
  for (VertexId u = 0; u < g.num_vertices(); ++u) count_vertex(g, pos, u, c);
  return finish(c.positive, c.negative, c.loops);
}

MetricReport evaluate_m(const Graph& g, const Ordering& order) {
  require_cover(g.num_vertices(), order);
  auto pos = order.positions();
  const auto n = static_cast<std::int64_t>(g.num_vertices());
  std::uint64_t positive = 0, negative = 0, loops = 0;
#pragma omp parallel for schedule(static) reduction(+ : positive, negative, loops)
  for (std::int64_t u = 0; u < n; ++u) {
    Counts c;
    count_vertex(g, pos, static_cast<VertexId>(u), c);
    positive += c.positive;
    negative += c.negative;
    loops += c.loops;
  }
  return finish(positive, negative, loops);
}

MetricReport evaluate_weighted_m(const WeightedDigraph& g, const Ordering& order) {
  require_cover(g.num_vertices(), order);
  std::uint64_t positive = 0, negative = 0;
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    for (const WeightedArc& a : g.out(u)) {
      if (order.position(u) < order.position(a.vertex))
        positive += a.weight;
      else
        negative += a.weight;
    }
  }
  return finish(positive, negative, 0);
}

BestOrder brute_force_best_order_serial(const Graph& g) {
  guard(g);
  const std::size_t n = g.num_vertices();
  if (n == 0) return {};
  auto edges = non_loop_edges(g);
  std::vector<Candidate> per_head(n);
  for (std::size_t h = 0; h < n; ++h) per_head[h] = best_with_head(n, static_cast<VertexId>(h), edges);
  return reduce(per_head);
}

BestOrder brute_force_best_order(const Graph& g) {
  guard(g);
  const std::size_t n = g.num_vertices();
  if (n == 0) return {};
  auto edges = non_loop_edges(g);
  std::vector<Candidate> per_head(n);
  const auto heads = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t h = 0; h < heads; ++h)
    per_head[static_cast<std::size_t>(h)] = best_with_head(n, static_cast<VertexId>(h), edges);
  return reduce(per_head);
}

}  // namespace gograph
