#include "gograph/weighted_digraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace gograph {

WeightedDigraph::WeightedDigraph(std::size_t n, std::span<const WeightedEdge> edges) {
  std::vector<WeightedEdge> sorted;
  sorted.reserve(edges.size());
  for (const WeightedEdge& e : edges) {
    if (e.src >= n || e.dst >= n) throw std::out_of_range("weighted edge endpoint out of range");
    if (e.weight == 0) throw std::invalid_argument("weighted edge must have positive weight");
    if (e.src != e.dst) sorted.push_back(e);
  }
  std::sort(sorted.begin(), sorted.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
    return a.src != b.src ? a.src < b.src : a.dst < b.dst;
  });
  std::vector<WeightedEdge> merged;
  for (const WeightedEdge& e : sorted) {
    if (!merged.empty() && merged.back().src == e.src && merged.back().dst == e.dst)
      merged.back().weight += e.weight;
    else
      merged.push_back(e);
  }

  out_offsets_.assign(n + 1, 0);
  in_offsets_.assign(n + 1, 0);
  out_weight_.assign(n, 0);
  in_weight_.assign(n, 0);
  for (const WeightedEdge& e : merged) {
    ++out_offsets_[e.src + 1];
    ++in_offsets_[e.dst + 1];
    out_weight_[e.src] += e.weight;
    in_weight_[e.dst] += e.weight;
    total_weight_ += e.weight;
  }
  for (std::size_t v = 0; v < n; ++v) {
    out_offsets_[v + 1] += out_offsets_[v];
    in_offsets_[v + 1] += in_offsets_[v];
  }
  out_.resize(merged.size());
  in_.resize(merged.size());
  std::vector<std::size_t> in_fill(in_offsets_.begin(), in_offsets_.end() - 1);
  // merged is sorted by (src, dst), so both views come out sorted by neighbor id.
  for (std::size_t i = 0; i < merged.size(); ++i) {
    const WeightedEdge& e = merged[i];
    out_[i] = {e.dst, e.weight};
    in_[in_fill[e.dst]++] = {e.src, e.weight};
  }
}

WeightedDigraph WeightedDigraph::from_multigraph(const Graph& g) {
  std::vector<WeightedEdge> edges;
  edges.reserve(g.num_edges());
  for (VertexId u = 0; u < g.num_vertices(); ++u)
    for (const Arc& a : g.out(u)) edges.push_back({u, a.vertex, 1});
  return WeightedDigraph(g.num_vertices(), edges);
}

std::vector<WeightedEdge> WeightedDigraph::edges() const {
  std::vector<WeightedEdge> result;
  result.reserve(num_arcs());
  for (VertexId u = 0; u < num_vertices(); ++u)
    for (const WeightedArc& a : out(u)) result.push_back({u, a.vertex, a.weight});
  return result;
}

}  // namespace gograph
