#include "gograph/algos.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <stdexcept>

namespace gograph {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_source(const Graph& g, VertexId source, const std::string& name) {
  if (source >= g.num_vertices())
    throw std::invalid_argument(name + ": source " + std::to_string(source) + " is not a vertex of a graph with " +
                                std::to_string(g.num_vertices()) + " vertices");
}

AlgorithmSpec shortest_path_spec(std::string name, VertexId source, bool unit_weights) {
  AlgorithmSpec spec;
  spec.name = name;
  spec.direction = Direction::non_increasing;
  spec.rule = ChangeRule::exact;
  spec.allow_infinite = true;
  spec.bind = [name, source, unit_weights](const Graph& g) {
    check_source(g, source, name);
    if (!unit_weights) {
      for (VertexId u = 0; u < g.num_vertices(); ++u)
        for (const Arc& a : g.out(u))
          if (!(a.weight > 0.0) || !std::isfinite(a.weight))
            throw std::invalid_argument(name + ": arc weights must be finite and positive");
    }
    BoundAlgorithm bound;
    bound.initial.assign(g.num_vertices(), kInf);
    bound.initial[source] = 0.0;
    const Graph* graph = &g;
    bound.update = [graph, unit_weights](VertexId v, std::span<const double> x) {
      double best = x[v];
      for (const Arc& a : graph->in(v)) best = std::min(best, x[a.vertex] + (unit_weights ? 1.0 : a.weight));
      return best;
    };
    return bound;
  };
  return spec;
}

}  // namespace

AlgorithmKind parse_algorithm_kind(std::string_view name) {
  if (name == "pagerank") return AlgorithmKind::pagerank;
  if (name == "sssp") return AlgorithmKind::sssp;
  if (name == "bfs") return AlgorithmKind::bfs;
  if (name == "php") return AlgorithmKind::php;
  throw std::invalid_argument("unknown algorithm '" + std::string(name) + "' (expected pagerank|sssp|bfs|php)");
}

std::string to_string(AlgorithmKind kind) {
  switch (kind) {
    case AlgorithmKind::pagerank: return "pagerank";
    case AlgorithmKind::sssp: return "sssp";
    case AlgorithmKind::bfs: return "bfs";
    case AlgorithmKind::php: return "php";
  }
  return "unknown";
}

AlgorithmSpec pagerank_spec(double damping) {
  if (!(damping > 0.0 && damping < 1.0)) throw std::invalid_argument("pagerank: damping must lie in (0, 1)");
  AlgorithmSpec spec;
  spec.name = "pagerank";
  spec.direction = Direction::non_decreasing;
  spec.rule = ChangeRule::sum_below_epsilon;
  spec.bind = [damping](const Graph& g) {
    BoundAlgorithm bound;
    bound.initial.assign(g.num_vertices(), 0.0);
    auto inv_out = std::make_shared<std::vector<double>>(g.num_vertices(), 0.0);
    for (VertexId u = 0; u < g.num_vertices(); ++u)
      if (g.out_degree(u)) (*inv_out)[u] = 1.0 / static_cast<double>(g.out_degree(u));
    const Graph* graph = &g;
    bound.update = [graph, inv_out, damping](VertexId v, std::span<const double> x) {
      double sum = 0.0;
      for (const Arc& a : graph->in(v)) sum += x[a.vertex] * (*inv_out)[a.vertex];
      return (1.0 - damping) + damping * sum;
    };
    return bound;
  };
  return spec;
}

AlgorithmSpec sssp_spec(VertexId source) { return shortest_path_spec("sssp", source, false); }

AlgorithmSpec bfs_spec(VertexId source) { return shortest_path_spec("bfs", source, true); }

AlgorithmSpec php_spec(VertexId source, double penalty) {
  if (!(penalty > 0.0 && penalty < 1.0)) throw std::invalid_argument("php: penalty must lie in (0, 1)");
  AlgorithmSpec spec;
  spec.name = "php";
  spec.direction = Direction::non_decreasing;
  spec.rule = ChangeRule::sum_below_epsilon;
  spec.bind = [source, penalty](const Graph& g) {
    check_source(g, source, "php");
    BoundAlgorithm bound;
    bound.initial.assign(g.num_vertices(), 0.0);
    bound.initial[source] = 1.0;
    // Normalizing by the receiver's in-weight keeps every state a decayed
    // average of in-neighbors, hence inside [0, 1] even on cyclic graphs.
    auto in_weight = std::make_shared<std::vector<double>>(g.num_vertices(), 0.0);
    for (VertexId v = 0; v < g.num_vertices(); ++v)
      for (const Arc& a : g.in(v)) (*in_weight)[v] += a.weight;
    const Graph* graph = &g;
    bound.update = [graph, in_weight, source, penalty](VertexId v, std::span<const double> x) {
      if (v == source) return 1.0;
      double sum = 0.0;
      for (const Arc& a : graph->in(v)) sum += a.weight * x[a.vertex];
      return sum == 0.0 ? 0.0 : penalty * sum / (*in_weight)[v];
    };
    return bound;
  };
  return spec;
}

AlgorithmSpec make_algorithm(AlgorithmKind kind, const EngineConfig& config) {
  switch (kind) {
    case AlgorithmKind::pagerank: return pagerank_spec(config.damping);
    case AlgorithmKind::sssp: return sssp_spec(config.source);
    case AlgorithmKind::bfs: return bfs_spec(config.source);
    case AlgorithmKind::php: return php_spec(config.source, config.penalty);
  }
  throw std::invalid_argument("unknown algorithm kind");
}

}  // namespace gograph
