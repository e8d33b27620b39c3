#pragma once

#include <cstdint>
#include <string_view>

#include "gograph/graph.hpp"

namespace gograph {

enum class GraphModel { chain, dag, er, ba };

GraphModel parse_graph_model(std::string_view name);

struct GeneratorParams {
  GraphModel model = GraphModel::chain;
  std::size_t n = 0;
  double param = 0.0;       // dag: edge probability; er: edge count; ba: attachment degree
  std::uint64_t seed = 0;
  bool random_weights = false;  // uniform integer weights in [1, 10]
};

// chain: 0->1->...->n-1.
// dag: each pair i<j independently with probability p, arcs low -> high id.
// er: exactly m distinct non-loop arcs drawn uniformly.
// ba: preferential attachment, each new vertex sends `param` arcs to distinct earlier vertices.
// Throws std::invalid_argument on bad parameters.
EdgeList generate(const GeneratorParams& params);

}  // namespace gograph
