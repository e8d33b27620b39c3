#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gograph/graph.hpp"

namespace gograph {

struct WeightedArc {
  VertexId vertex;
  std::uint64_t weight;

  friend bool operator==(const WeightedArc&, const WeightedArc&) = default;
};

struct WeightedEdge {
  VertexId src;
  VertexId dst;
  std::uint64_t weight;
};

// Simple directed graph with positive integer arc weights. Duplicate
// (src, dst) pairs are merged by summing weights; self-edges are dropped.
// Used for contracted super graphs and for multiplicity-collapsed
// subgraphs during ordering.
class WeightedDigraph {
public:
  WeightedDigraph() = default;
  WeightedDigraph(std::size_t n, std::span<const WeightedEdge> edges);

  // Collapse a multigraph: parallel arcs become one arc weighted by multiplicity.
  static WeightedDigraph from_multigraph(const Graph& g);

  std::size_t num_vertices() const noexcept { return out_offsets_.size() - 1; }
  std::size_t num_arcs() const noexcept { return out_.size(); }
  std::uint64_t total_weight() const noexcept { return total_weight_; }

  std::span<const WeightedArc> out(VertexId v) const {
    return {out_.data() + out_offsets_[v], out_.data() + out_offsets_[v + 1]};
  }
  std::span<const WeightedArc> in(VertexId v) const {
    return {in_.data() + in_offsets_[v], in_.data() + in_offsets_[v + 1]};
  }
  std::uint64_t out_weight(VertexId v) const { return out_weight_[v]; }
  std::uint64_t in_weight(VertexId v) const { return in_weight_[v]; }

  std::vector<WeightedEdge> edges() const;

private:
  std::vector<std::size_t> out_offsets_{0};
  std::vector<WeightedArc> out_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<WeightedArc> in_;
  std::vector<std::uint64_t> out_weight_;
  std::vector<std::uint64_t> in_weight_;
  std::uint64_t total_weight_ = 0;
};

}  // namespace gograph
