#include "gograph/oracle.hpp"

#include <algorithm>
#include <limits>
#include <exception>
#include <optional>

#include "gograph/errors.hpp"

namespace gograph {
namespace {

struct Best {
  std::vector<VertexId> seq;
  std::size_t rounds = std::numeric_limits<std::size_t>::max();
};

Best best_with_head(const Graph& g, const AlgorithmSpec& spec, const EngineConfig& config, VertexId head) {
  const std::size_t n = g.num_vertices();
  std::vector<VertexId> seq{head};
  for (VertexId v = 0; v < n; ++v)
    if (v != head) seq.push_back(v);
  Best best;
  do {
    const RunReport r = run_async(g, Ordering::from_sequence(seq), spec, config);
    if (r.converged && r.changing_sweeps < best.rounds) {
      best.rounds = r.changing_sweeps;
      best.seq = seq;
    }
  } while (std::next_permutation(seq.begin() + 1, seq.end()));
  return best;
}

EngineConfig async_config(const Graph& g, const EngineConfig& config) {
  if (g.num_vertices() > kMaxMinRoundsVertices)
    throw SizeGuardError("exhaustive rounds search is limited to " + std::to_string(kMaxMinRoundsVertices) +
                         " vertices, graph has " + std::to_string(g.num_vertices()));
  EngineConfig c = config;
  c.mode = Mode::async;
  c.trace = false;
  c.timing = false;
  return c;
}

MinRounds reduce(const std::vector<Best>& per_head) {
  const Best* best = nullptr;
  for (const Best& b : per_head)
    if (!b.seq.empty() && (!best || b.rounds < best->rounds)) best = &b;
  if (!best) throw NumericError("no order converged within max_sweeps");
  return {Ordering::from_sequence(best->seq), best->rounds};
}

}  // namespace

MinRounds brute_force_min_rounds_serial(const Graph& g, const AlgorithmSpec& spec, const EngineConfig& config) {
  const EngineConfig c = async_config(g, config);
  const std::size_t n = g.num_vertices();
  if (n == 0) return {};
  std::vector<Best> per_head(n);
  for (std::size_t h = 0; h < n; ++h) per_head[h] = best_with_head(g, spec, c, static_cast<VertexId>(h));
  return reduce(per_head);
}

MinRounds brute_force_min_rounds(const Graph& g, const AlgorithmSpec& spec, const EngineConfig& config) {
  const EngineConfig c = async_config(g, config);
  const std::size_t n = g.num_vertices();
  if (n == 0) return {};
  std::vector<Best> per_head(n);
  std::optional<std::exception_ptr> failure;
  const auto heads = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t h = 0; h < heads; ++h) {
    try {
      per_head[static_cast<std::size_t>(h)] = best_with_head(g, spec, c, static_cast<VertexId>(h));
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(*failure);
  return reduce(per_head);
}

}  // namespace gograph
