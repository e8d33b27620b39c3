#pragma once

#include <cstddef>

#include "gograph/engine.hpp"
#include "gograph/graph.hpp"
#include "gograph/ordering.hpp"

namespace gograph {

inline constexpr std::size_t kMaxMinRoundsVertices = 8;

struct MinRounds {
  Ordering order;
  std::size_t rounds = 0;  // changing sweeps of the async run under `order`
};

// Runs the async engine under all n! orders and keeps one with the fewest
// changing sweeps (lexicographically smallest on ties). Orders that hit
// max_sweeps without converging never win. Throws SizeGuardError for
// n > kMaxMinRoundsVertices.
MinRounds brute_force_min_rounds(const Graph& g, const AlgorithmSpec& spec, const EngineConfig& config);
MinRounds brute_force_min_rounds_serial(const Graph& g, const AlgorithmSpec& spec, const EngineConfig& config);

}  // namespace gograph
