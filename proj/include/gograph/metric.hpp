#pragma once

#include <cstdint>

#include "gograph/graph.hpp"
#include "gograph/ordering.hpp"
#include "gograph/weighted_digraph.hpp"

namespace gograph {

enum class EdgeClass { positive, negative, self_loop };

// positive iff p(u) < p(v). Throws std::out_of_range on bad ids.
EdgeClass classify_edge(const Ordering& order, VertexId u, VertexId v);

// Positive-edge count of an order. Self-loops are never positive or
// negative and are left out of `edges_considered`; each parallel edge
// counts on its own. For the weighted variant every count is a weight sum.
struct MetricReport {
  std::uint64_t m_value = 0;
  std::uint64_t positive = 0;
  std::uint64_t negative = 0;
  std::uint64_t skipped_self_loops = 0;
  std::uint64_t edges_considered = 0;
  double ratio = 1.0;  // m_value / edges_considered, 1 when nothing is considered
};

MetricReport evaluate_m(const Graph& g, const Ordering& order);         // OpenMP
MetricReport evaluate_m_serial(const Graph& g, const Ordering& order);  // reference kernel
MetricReport evaluate_weighted_m(const WeightedDigraph& g, const Ordering& order);

inline constexpr std::size_t kMaxBestOrderVertices = 10;

struct BestOrder {
  Ordering order;
  std::uint64_t max_m = 0;
};

// Exhaustive search over all n! orders. Ties go to the lexicographically
// smallest sequence. Throws SizeGuardError for n > kMaxBestOrderVertices.
BestOrder brute_force_best_order(const Graph& g);         // OpenMP over the first slot
BestOrder brute_force_best_order_serial(const Graph& g);  // reference kernel

}  // namespace gograph
