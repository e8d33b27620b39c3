#include "gograph/engine.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "gograph/errors.hpp"

namespace gograph {
namespace {

using Clock = std::chrono::steady_clock;

inline double change_of(double prev, double next, ChangeRule rule) {
  if (rule == ChangeRule::exact) return prev != next ? 1.0 : 0.0;
  return std::abs(next - prev);
}

inline bool bad_value(double x, const AlgorithmSpec& spec) {
  return std::isnan(x) || (!spec.allow_infinite && !std::isfinite(x));
}

[[noreturn]] void numeric_failure(const AlgorithmSpec& spec, VertexId v, std::size_t sweep) {
  throw NumericError(spec.name + ": non-finite state at vertex " + std::to_string(v) + " in sweep " +
                     std::to_string(sweep));
}

BoundAlgorithm bind_checked(const Graph& g, const AlgorithmSpec& spec, const EngineConfig& config) {
  config.validate();
  if (!spec.bind) throw std::invalid_argument("algorithm '" + spec.name + "' has no kernel");
  BoundAlgorithm bound = spec.bind(g);
  if (bound.initial.size() != g.num_vertices())
    throw std::logic_error(spec.name + ": initial state vector has wrong size");
  return bound;
}

// Shared sweep loop. `sweep(states, k)` advances `states` by one full sweep
// and returns its aggregate change.
template <class SweepFn>
RunReport drive(const AlgorithmSpec& spec, const EngineConfig& config, std::vector<double> states,
                const SweepObserver& observer, SweepFn&& sweep) {
  RunReport report;
  const auto start = Clock::now();
  std::vector<double> finite_sum;
  std::vector<std::size_t> finite_count;

  if (observer) observer(0, states);
  for (std::size_t k = 1; k <= config.max_sweeps; ++k) {
    const double residual = sweep(states, k);
    report.residual_trace.push_back(residual);
    ++report.total_sweeps;
    if (config.trace) {
      double sum = 0.0;
      std::size_t count = 0;
      for (double x : states) {
        if (std::isfinite(x)) {
          sum += x;
          ++count;
        }
      }
      finite_sum.push_back(sum);
      finite_count.push_back(count);
      report.sweep_time_trace.push_back(
          config.timing ? std::chrono::duration<double, std::milli>(Clock::now() - start).count() : 0.0);
    }
    if (observer) observer(k, states);

    const bool changing = spec.rule == ChangeRule::exact ? residual > 0.0 : residual >= config.epsilon;
    if (!changing) {
      report.converged = true;
      break;
    }
    ++report.changing_sweeps;
  }

  if (config.trace) {
    double final_sum = 0.0;
    std::size_t final_count = 0;
    for (double x : states) {
      if (std::isfinite(x)) {
        final_sum += x;
        ++final_count;
      }
    }
    // States only ever turn finite (never back), so a sweep with fewer
    // finite entries than the end state is still infinitely far away.
    for (std::size_t t = 0; t < finite_sum.size(); ++t) {
      report.dist_trace.push_back(finite_count[t] < final_count ? std::numeric_limits<double>::infinity()
                                                                 : std::abs(final_sum - finite_sum[t]));
    }
  }
  report.final_states = std::move(states);
  report.wall_time_ms = config.timing ? std::chrono::duration<double, std::milli>(Clock::now() - start).count() : 0.0;
  return report;
}

double sum_changes(const std::vector<double>& change) {
  double residual = 0.0;
  for (double c : change) residual += c;
  return residual;
}

}  // namespace

void EngineConfig::validate() const {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be > 0");
  if (max_sweeps < 1) throw std::invalid_argument("max_sweeps must be >= 1");
}

RunReport run_sync_serial(const Graph& g, const AlgorithmSpec& spec, const EngineConfig& config,
                          std::span<const VertexId> visit_order, const SweepObserver& observer) {
  BoundAlgorithm bound = bind_checked(g, spec, config);
  const std::size_t n = g.num_vertices();
  if (!visit_order.empty()) {
    if (visit_order.size() != n) throw std::invalid_argument("visit order does not cover graph");
    Ordering::from_sequence({visit_order.begin(), visit_order.end()});  // validates the permutation
  }
  std::vector<double> next(n), change(n);
  auto sweep = [&](std::vector<double>& states, std::size_t k) {
    for (std::size_t i = 0; i < n; ++i) {
      const VertexId v = visit_order.empty() ? static_cast<VertexId>(i) : visit_order[i];
      const double x = bound.update(v, states);
      if (bad_value(x, spec)) numeric_failure(spec, v, k);
      next[v] = x;
      change[v] = change_of(states[v], x, spec.rule);
    }
    states.swap(next);
    return sum_changes(change);
  };
  return drive(spec, config, std::move(bound.initial), observer, sweep);
}

RunReport run_sync(const Graph& g, const AlgorithmSpec& spec, const EngineConfig& config,
                   const SweepObserver& observer) {
  BoundAlgorithm bound = bind_checked(g, spec, config);
  const std::size_t n = g.num_vertices();
  std::vector<double> next(n), change(n);
  auto sweep = [&](std::vector<double>& states, std::size_t k) {
    std::atomic<std::int64_t> failed{-1};
    const auto count = static_cast<std::int64_t>(n);
    const std::vector<double>& prev = states;
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
      const auto v = static_cast<VertexId>(i);
      const double x = bound.update(v, prev);
      if (bad_value(x, spec)) failed.store(i, std::memory_order_relaxed);
      next[v] = x;
      change[v] = change_of(prev[v], x, spec.rule);
    }
    if (failed.load() >= 0) numeric_failure(spec, static_cast<VertexId>(failed.load()), k);
    states.swap(next);
    return sum_changes(change);
  };
  return drive(spec, config, std::move(bound.initial), observer, sweep);
}

RunReport run_async(const Graph& g, const Ordering& order, const AlgorithmSpec& spec, const EngineConfig& config,
                    const SweepObserver& observer) {
  if (order.size() != g.num_vertices()) throw std::invalid_argument("ordering does not cover graph");
  BoundAlgorithm bound = bind_checked(g, spec, config);
  auto seq = order.seq();
  auto sweep = [&](std::vector<double>& states, std::size_t k) {
    double residual = 0.0;
    for (VertexId v : seq) {
      const double x = bound.update(v, states);
      if (bad_value(x, spec)) numeric_failure(spec, v, k);
      residual += change_of(states[v], x, spec.rule);
      states[v] = x;
    }
    return residual;
  };
  return drive(spec, config, std::move(bound.initial), observer, sweep);
}

RunReport run(const Graph& g, const Ordering* order, const AlgorithmSpec& spec, const EngineConfig& config,
              const SweepObserver& observer) {
  if (config.mode == Mode::sync) return run_sync(g, spec, config, observer);
  if (!order) throw std::invalid_argument("async mode requires a processing order");
  return run_async(g, *order, spec, config, observer);
}

double distance_to_convergence(std::span<const double> reference, std::span<const double> states) {
  if (reference.size() != states.size()) throw std::invalid_argument("state vectors differ in length");
  double ref_sum = 0.0, sum = 0.0;
  for (std::size_t i = 0; i < reference.size(); ++i) {
    if (!std::isfinite(reference[i])) continue;
    if (!std::isfinite(states[i])) return std::numeric_limits<double>::infinity();
    ref_sum += reference[i];
    sum += states[i];
  }
  return std::abs(ref_sum - sum);
}

}  // namespace gograph
