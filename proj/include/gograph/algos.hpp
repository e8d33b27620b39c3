#pragma once

#include <string>
#include <string_view>

#include "gograph/engine.hpp"

namespace gograph {

enum class AlgorithmKind { pagerank, sssp, bfs, php };

AlgorithmKind parse_algorithm_kind(std::string_view name);  // throws std::invalid_argument
std::string to_string(AlgorithmKind kind);

// x_v = (1-d) + d * sum_{u in IN(v)} x_u / |OUT(u)|, zero init.
AlgorithmSpec pagerank_spec(double damping = 0.85);

// x_v = min(x_v, min_{u in IN(v)} x_u + w(u,v)); source 0, others +inf.
AlgorithmSpec sssp_spec(VertexId source);

// SSSP with every arc weight taken as 1.
AlgorithmSpec bfs_spec(VertexId source);

// Penalized hitting probability: x_s pinned to 1,
// x_v = c * sum_{u in IN(v)} (w(u,v) / W_in(v)) * x_u for v != s.
AlgorithmSpec php_spec(VertexId source, double penalty = 0.85);

// Picks source/damping/penalty out of the engine config.
AlgorithmSpec make_algorithm(AlgorithmKind kind, const EngineConfig& config);

}  // namespace gograph
