#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gograph/graph.hpp"
#include "gograph/ordering.hpp"

namespace gograph {

Ordering identity_order(const Graph& g);
Ordering random_order(const Graph& g, std::uint64_t seed);

// Descending total degree, ties to the smaller id.
Ordering degree_sort_order(const Graph& g);

// Hubs have total degree strictly above the mean.
std::vector<VertexId> hub_vertices(const Graph& g);

// Hubs first by descending degree (ties: smaller id), then the rest by id.
Ordering hub_sort_order(const Graph& g);

// Hubs first in id order, then the rest by id.
Ordering hub_cluster_order(const Graph& g);

// Kahn's algorithm taking the smallest ready id first. Throws
// CyclicGraphError naming a vertex on a cycle (self-loops included).
Ordering topological_order(const Graph& g);

}  // namespace gograph
