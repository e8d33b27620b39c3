#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "gograph/graph.hpp"
#include "gograph/ordering.hpp"

namespace gograph {

enum class Mode { sync, async };

// Direction in which per-vertex states move from their initial values.
enum class Direction { non_increasing, non_decreasing };

// How a sweep decides whether anything changed.
//   exact: any state differs from its previous value (BFS/SSSP).
//   sum_below_epsilon: sum of |delta| over all vertices is >= epsilon (PageRank/PHP).
enum class ChangeRule { exact, sum_below_epsilon };

// An algorithm instantiated on one graph: initial states plus the update
// F(v, states) that reads v's in-neighbor entries of `states`.
struct BoundAlgorithm {
  std::vector<double> initial;
  std::function<double(VertexId, std::span<const double>)> update;
};

// A monotone iterative algorithm. `bind` validates the graph and returns
// the per-graph kernel. States may be +inf only when `allow_infinite`.
struct AlgorithmSpec {
  std::string name;
  Direction direction = Direction::non_decreasing;
  ChangeRule rule = ChangeRule::sum_below_epsilon;
  bool allow_infinite = false;
  std::function<BoundAlgorithm(const Graph&)> bind;
};

struct EngineConfig {
  Mode mode = Mode::async;
  double epsilon = 1e-6;
  std::size_t max_sweeps = 10000;
  VertexId source = 0;
  double damping = 0.85;
  double penalty = 0.85;
  bool trace = false;   // fill dist_trace and per-sweep timing
  bool timing = true;   // false zeroes every wall-time field

  void validate() const;
};

struct RunReport {
  std::size_t changing_sweeps = 0;
  std::size_t total_sweeps = 0;  // changing_sweeps + 1 when converged
  bool converged = false;
  std::vector<double> final_states;
  std::vector<double> residual_trace;    // per sweep: sum |delta| (sum rule) or #changed vertices (exact rule)
  std::vector<double> dist_trace;        // per sweep, only with trace
  std::vector<double> sweep_time_trace;  // cumulative ms per sweep, only with trace
  double wall_time_ms = 0.0;
};

// Called with sweep index 0 for the initial states, then after each sweep.
using SweepObserver = std::function<void(std::size_t sweep, std::span<const double> states)>;

// Jacobi-style: every update reads the previous sweep's states. The vertex
// loop runs under OpenMP and is bit-identical to run_sync_serial.
RunReport run_sync(const Graph& g, const AlgorithmSpec& spec, const EngineConfig& config,
                   const SweepObserver& observer = {});

// Reference kernel. `visit_order` (default identity) changes nothing but the
// order in which next-sweep values are computed.
RunReport run_sync_serial(const Graph& g, const AlgorithmSpec& spec, const EngineConfig& config,
                          std::span<const VertexId> visit_order = {}, const SweepObserver& observer = {});

// Gauss-Seidel style: one in-place state vector, vertices visited in
// `order.seq()` each sweep. Strictly sequential.
RunReport run_async(const Graph& g, const Ordering& order, const AlgorithmSpec& spec, const EngineConfig& config,
                    const SweepObserver& observer = {});

// Dispatches on config.mode; `order` is ignored in sync mode.
RunReport run(const Graph& g, const Ordering* order, const AlgorithmSpec& spec, const EngineConfig& config,
              const SweepObserver& observer = {});

// |sum(reference) - sum(states)| over vertices whose reference value is
// finite; +inf if such a vertex is still infinite in `states`.
double distance_to_convergence(std::span<const double> reference, std::span<const double> states);

}  // namespace gograph
