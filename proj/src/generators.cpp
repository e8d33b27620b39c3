#include "gograph/generators.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace gograph {

GraphModel parse_graph_model(std::string_view name) {
  if (name == "chain") return GraphModel::chain;
  if (name == "dag") return GraphModel::dag;
  if (name == "er") return GraphModel::er;
  if (name == "ba") return GraphModel::ba;
  throw std::invalid_argument("unknown graph model '" + std::string(name) + "' (expected chain|dag|er|ba)");
}

EdgeList generate(const GeneratorParams& params) {
  const std::size_t n = params.n;
  std::mt19937_64 rng(params.seed);
  EdgeList list;
  list.num_vertices = n;

  switch (params.model) {
    case GraphModel::chain:
      for (std::size_t v = 0; v + 1 < n; ++v)
        list.edges.push_back({static_cast<VertexId>(v), static_cast<VertexId>(v + 1), 1.0});
      break;

    case GraphModel::dag: {
      const double p = params.param;
      if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("dag: edge probability must lie in [0, 1]");
      std::bernoulli_distribution coin(p);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (coin(rng)) list.edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(j), 1.0});
      break;
    }

    case GraphModel::er: {
      if (!(params.param >= 0.0) || params.param != std::floor(params.param))
        throw std::invalid_argument("er: edge count must be a non-negative integer");
      const auto m = static_cast<std::uint64_t>(params.param);
      const std::uint64_t capacity = n < 2 ? 0 : static_cast<std::uint64_t>(n) * (n - 1);
      if (m > capacity) throw std::invalid_argument("er: more edges requested than distinct arcs exist");
      std::uniform_int_distribution<std::uint64_t> pick(0, n ? n - 1 : 0);
      std::unordered_set<std::uint64_t> seen;
      seen.reserve(m);
      while (list.edges.size() < m) {
        const std::uint64_t u = pick(rng), v = pick(rng);
        if (u == v || !seen.insert(u * n + v).second) continue;
        list.edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v), 1.0});
      }
      break;
    }

    case GraphModel::ba: {
      if (!(params.param >= 1.0) || params.param != std::floor(params.param))
        throw std::invalid_argument("ba: attachment degree must be a positive integer");
      const auto deg = static_cast<std::size_t>(params.param);
      if (deg >= n) throw std::invalid_argument("ba: attachment degree must be smaller than n");
      // Targets are drawn from a list holding each vertex once per unit of degree.
      std::vector<VertexId> repeated;
      std::vector<VertexId> targets(deg);
      for (std::size_t i = 0; i < deg; ++i) targets[i] = static_cast<VertexId>(i);
      for (std::size_t source = deg; source < n; ++source) {
        for (VertexId t : targets) list.edges.push_back({static_cast<VertexId>(source), t, 1.0});
        repeated.insert(repeated.end(), targets.begin(), targets.end());
        repeated.insert(repeated.end(), deg, static_cast<VertexId>(source));
        std::unordered_set<VertexId> chosen;
        targets.clear();
        std::uniform_int_distribution<std::size_t> pick(0, repeated.size() - 1);
        while (targets.size() < deg) {
          const VertexId t = repeated[pick(rng)];
          if (chosen.insert(t).second) targets.push_back(t);
        }
      }
      break;
    }
  }

  if (params.random_weights) {
    std::uniform_int_distribution<int> weight(1, 10);
    for (Edge& e : list.edges) e.weight = weight(rng);
    list.weighted = true;
  }
  return list;
}

}  // namespace gograph
