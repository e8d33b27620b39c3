#pragma once

// Divide-and-conquer vertex reordering that maximizes the number of
// positive edges (edges whose source is processed before their target).
//
// Pipeline:
//   1. pull out the highest-degree vertices and the vertices they leave
//      without any other edge (extract_hubs);
//   2. partition the rest into communities (partition_remaining);
//   3. order every part by greedy insertion (order_subgraph);
//   4. contract parts to weighted super vertices and order those the same
//      way (build_super_graph, order_supers);
//   5. lay the parts out contiguously (flatten_global_vals), insert hubs
//      then isolated vertices at their best gaps (insert_external), and
//      sort by rank (finalize).
//
// Every insertion goes through get_opt_val, which scans only the gaps
// between v's already-placed neighbors; at least half of the edges joining
// v to placed vertices end up positive, so the final order has M >= |E|/2.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gograph/graph.hpp"
#include "gograph/metric.hpp"
#include "gograph/ordering.hpp"
#include "gograph/weighted_digraph.hpp"

namespace gograph {

// Fractional ranks of the vertices placed so far. Ties in `val` are broken
// by insertion counter, so (val, tiebreak) is a strict total order and the
// sorted sequence is the current processing order.
class OrderBuilder {
public:
  struct Key {
    double val;
    std::uint64_t tiebreak;
    friend auto operator<=>(const Key&, const Key&) = default;
  };

  OrderBuilder() = default;
  explicit OrderBuilder(std::size_t capacity);

  std::size_t capacity() const noexcept { return placed_.size(); }
  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(VertexId v) const { return placed_.at(v) != 0; }
  double val(VertexId v) const { return val_.at(v); }
  Key key(VertexId v) const { return {val_.at(v), tiebreak_.at(v)}; }
  double max_val() const noexcept { return max_val_; }
  std::size_t rerank_count() const noexcept { return reranks_; }

  // Throws std::logic_error if `v` is already placed.
  void place(VertexId v, double val);

  // Replace every val by its rank in the current order. Order is unchanged.
  void rerank();

  std::vector<VertexId> sorted() const;

private:
  std::vector<double> val_;
  std::vector<std::uint64_t> tiebreak_;
  std::vector<char> placed_;
  std::vector<VertexId> members_;
  std::uint64_t next_tiebreak_ = 0;
  double max_val_ = 0.0;
  std::size_t reranks_ = 0;
};

// A placed neighbor of the vertex being inserted. `out_weight` counts arcs
// from the new vertex to it, `in_weight` arcs from it to the new vertex
// (multiplicities for plain vertices, edge weights for super vertices).
struct PlacedNeighbor {
  VertexId vertex;
  std::uint64_t out_weight = 0;
  std::uint64_t in_weight = 0;
};

// Result of sweeping the |N|+1 gaps around the placed neighbors.
// pe_by_gap[0] is "before the first neighbor", pe_by_gap[i] "right after N[i-1]".
struct GapScan {
  std::vector<VertexId> neighbors_by_key;
  std::vector<std::int64_t> pe_by_gap;
  std::size_t best_gap = 0;
  std::int64_t best_pe = 0;
  std::uint64_t incident_weight = 0;
  double val = 0.0;
  bool underflow = false;  // midpoint collapsed onto a bound
};

GapScan scan_gaps(const OrderBuilder& builder, std::span<const PlacedNeighbor> neighbors);

// Value to give a new vertex so that its positive-edge count against the
// placed neighbors is maximal (earliest gap on ties). Re-ranks `builder`
// first if the midpoint would collide with a neighbor.
double get_opt_val(OrderBuilder& builder, std::span<const PlacedNeighbor> neighbors);

enum class InsertionPhase { intra, super, hub, isolated };

struct InsertionEvent {
  InsertionPhase phase;
  std::size_t part = 0;  // part id for intra events
  VertexId item = 0;     // id inside the builder it went into
  std::int64_t pe = 0;   // positive weight claimed by the gap scan
  std::uint64_t incident_weight = 0;
  std::int64_t recount = 0;  // positive weight recounted from keys after placing
};

// Places `item` at get_opt_val and reports what the insertion achieved.
InsertionEvent insert_item(OrderBuilder& builder, VertexId item, std::span<const PlacedNeighbor> neighbors,
                           InsertionPhase phase);

struct HubSplit {
  std::vector<VertexId> hubs;      // by descending degree rank
  std::vector<VertexId> isolated;  // ascending id
  Subgraph residual;               // G' with map back to the input graph
};

// Hubs are the ceil(fraction * n) vertices of largest total degree (ties:
// larger out-degree, then smaller id). Isolated vertices are the remaining
// ones with no edge to a non-hub vertex other than self-loops.
HubSplit extract_hubs(const Graph& g, double hub_fraction);

struct PartitionResult {
  std::vector<std::uint32_t> assignment;      // residual vertex -> part id
  std::vector<std::vector<VertexId>> parts;   // ascending residual ids per part
  std::vector<Subgraph> subgraphs;            // induced G_i, to_parent maps into the residual graph

  std::size_t num_parts() const noexcept { return parts.size(); }
};

// Asynchronous label propagation on the undirected view (at most 20 sweeps,
// ties to the smaller label), singleton communities merged into their
// best-connected neighbor community, oversized communities cut into
// consecutive chunks of `max_part_size` along their own greedy insertion
// order (order_subgraph). Part ids follow their smallest vertex id.
// seed 0 scans vertices in id order, any other seed in a shuffled order.
PartitionResult partition_remaining(const Graph& residual, std::size_t max_part_size, std::uint64_t seed = 0);

// Greedy insertion order of one part: minimum in-degree seed, layered BFS
// over the undirected view with each layer ranked by (out - in) descending
// then id, every vertex placed with get_opt_val. Parallel arcs count with
// their multiplicity, self-loops are ignored.
OrderBuilder order_subgraph(const Graph& part, std::vector<InsertionEvent>* events = nullptr);
OrderBuilder order_weighted(const WeightedDigraph& g, InsertionPhase phase, std::vector<InsertionEvent>* events);

// Super graph: one vertex per part, w(i, j) = number of residual edges from part i to part j.
using SuperGraph = WeightedDigraph;
SuperGraph build_super_graph(const PartitionResult& partition, const Graph& residual);

OrderBuilder order_supers(const SuperGraph& supers, std::vector<InsertionEvent>* events = nullptr);

// Lays the parts out in super order: a part's vertices keep their local
// relative order and all of them rank above every vertex of earlier parts.
// Result is indexed by vertex id of `g` (the full input graph).
OrderBuilder flatten_global_vals(const OrderBuilder& super_order, std::span<const OrderBuilder> local_orders,
                                 const PartitionResult& partition, const Subgraph& residual, std::size_t n);

// Inserts a hub or isolated vertex of `g` against everything placed so far,
// using its full adjacency in `g`.
InsertionEvent insert_external(OrderBuilder& global, const Graph& g, VertexId v, InsertionPhase phase);

// Throws std::logic_error if some vertex was never placed.
Ordering finalize(const OrderBuilder& global);

struct GoGraphConfig {
  double hub_fraction = 0.002;
  std::size_t max_part_size = 1024;
  std::uint64_t seed = 0;
  bool parallel = true;  // order parts concurrently
  bool audit = false;    // recount every insertion and keep the events
};

struct PipelineReport {
  std::size_t hub_count = 0;
  std::size_t isolated_count = 0;
  std::size_t part_count = 0;
  std::uint64_t m_intra = 0;     // positive edges inside parts
  std::uint64_t m_inter = 0;     // positive edges between parts
  std::uint64_t m_hub = 0;       // positive edges claimed by hub insertions
  std::uint64_t m_isolated = 0;  // positive edges claimed by isolated insertions
  std::uint64_t m_total = 0;
  std::size_t reranks = 0;
  std::vector<VertexId> residual_order;  // residual vertices (input ids) before hub insertion
  std::vector<std::uint32_t> part_of;    // input id -> part id, UINT32_MAX for hubs/isolated
  std::vector<InsertionEvent> events;    // only with audit
};

struct ReorderResult {
  Ordering order;
  PipelineReport report;
};

ReorderResult reorder_with_report(const Graph& g, const GoGraphConfig& config = {});
Ordering reorder(const Graph& g, const GoGraphConfig& config = {});

}  // namespace gograph
