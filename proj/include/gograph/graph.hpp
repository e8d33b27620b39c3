#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace gograph {

using VertexId = std::uint32_t;

struct Edge {
  VertexId src;
  VertexId dst;
  double weight = 1.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// One adjacency entry: the neighbor on the other end and the arc weight.
struct Arc {
  VertexId vertex;
  double weight;

  friend bool operator==(const Arc&, const Arc&) = default;
};

// Edge multiset over dense ids 0..n-1 plus the original file id of every dense id.
struct EdgeList {
  std::size_t num_vertices = 0;
  std::vector<Edge> edges;
  std::vector<std::uint64_t> original_ids;  // empty means identity
  bool weighted = false;
};

struct ParseOptions {
  double default_weight = 1.0;  // weight given to two-column lines
  bool allow_comments = true;
};

EdgeList parse_edge_list(std::istream& in, const ParseOptions& options = {});
EdgeList parse_edge_list_file(const std::string& path, const ParseOptions& options = {});

// Immutable directed multigraph in CSR form, with both out- and in-adjacency.
// Self-loops and parallel edges are retained. Each adjacency list is sorted
// by (neighbor id, weight).
class Graph {
public:
  Graph() = default;

  std::size_t num_vertices() const noexcept { return original_ids_.size(); }
  std::size_t num_edges() const noexcept { return out_arcs_.size(); }
  bool weighted() const noexcept { return weighted_; }

  std::span<const Arc> out(VertexId v) const {
    return {out_arcs_.data() + out_offsets_[v], out_arcs_.data() + out_offsets_[v + 1]};
  }
  std::span<const Arc> in(VertexId v) const {
    return {in_arcs_.data() + in_offsets_[v], in_arcs_.data() + in_offsets_[v + 1]};
  }
  std::size_t out_degree(VertexId v) const { return out_offsets_[v + 1] - out_offsets_[v]; }
  std::size_t in_degree(VertexId v) const { return in_offsets_[v + 1] - in_offsets_[v]; }
  std::size_t degree(VertexId v) const { return out_degree(v) + in_degree(v); }

  std::uint64_t original_id(VertexId v) const { return original_ids_[v]; }
  std::span<const std::uint64_t> original_ids() const { return original_ids_; }

  // All edges in (source, adjacency) order.
  std::vector<Edge> edges() const;

  friend Graph build_graph(const EdgeList& list);

private:
  std::vector<std::size_t> out_offsets_{0};
  std::vector<Arc> out_arcs_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<Arc> in_arcs_;
  std::vector<std::uint64_t> original_ids_;
  bool weighted_ = false;
};

Graph build_graph(const EdgeList& list);
Graph load_graph(const std::string& path, const ParseOptions& options = {});

// Convenience for tests and generators: dense ids, identity original ids.
Graph make_graph(std::size_t n, const std::vector<Edge>& edges);

struct DegreeStats {
  std::vector<std::size_t> in_degree;
  std::vector<std::size_t> out_degree;
  std::vector<std::size_t> total_degree;
  std::size_t max_degree = 0;
  double mean_degree = 0.0;  // mean total degree
};

DegreeStats degree_stats(const Graph& g);

// Induced subgraph on the vertices not in `removed`. `to_parent[i]` is the
// id in `g` of vertex i of the result; original ids are carried over.
struct Subgraph {
  Graph graph;
  std::vector<VertexId> to_parent;
};

Subgraph subgraph_without(const Graph& g, std::span<const VertexId> removed);
Subgraph induced_subgraph(const Graph& g, std::span<const VertexId> keep);

// One "u v w" line per edge with original ids.
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace gograph
