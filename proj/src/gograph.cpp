#include "gograph/gograph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

namespace gograph {

// ---------------------------------------------------------------------------
// OrderBuilder

OrderBuilder::OrderBuilder(std::size_t capacity)
    : val_(capacity, std::numeric_limits<double>::quiet_NaN()), tiebreak_(capacity, 0), placed_(capacity, 0) {
  members_.reserve(capacity);
}

void OrderBuilder::place(VertexId v, double val) {
  if (placed_.at(v)) throw std::logic_error("vertex " + std::to_string(v) + " placed twice");
  if (!std::isfinite(val)) throw std::logic_error("non-finite rank");
  placed_[v] = 1;
  val_[v] = val;
  tiebreak_[v] = next_tiebreak_++;
  max_val_ = members_.empty() ? val : std::max(max_val_, val);
  members_.push_back(v);
}

std::vector<VertexId> OrderBuilder::sorted() const {
  std::vector<VertexId> seq = members_;
  std::sort(seq.begin(), seq.end(), [this](VertexId a, VertexId b) { return key(a) < key(b); });
  return seq;
}

void OrderBuilder::rerank() {
  std::vector<VertexId> seq = sorted();
  for (std::size_t i = 0; i < seq.size(); ++i) val_[seq[i]] = static_cast<double>(i);
  max_val_ = seq.empty() ? 0.0 : static_cast<double>(seq.size() - 1);
  ++reranks_;
}

// ---------------------------------------------------------------------------
// Insertion

GapScan scan_gaps(const OrderBuilder& builder, std::span<const PlacedNeighbor> neighbors) {
  std::vector<PlacedNeighbor> sorted(neighbors.begin(), neighbors.end());
  std::sort(sorted.begin(), sorted.end(),
            [&](const PlacedNeighbor& a, const PlacedNeighbor& b) { return builder.key(a.vertex) < builder.key(b.vertex); });

  GapScan scan;
  scan.neighbors_by_key.reserve(sorted.size());
  scan.pe_by_gap.reserve(sorted.size() + 1);
  std::int64_t pe = 0;
  for (const PlacedNeighbor& nb : sorted) {
    scan.neighbors_by_key.push_back(nb.vertex);
    scan.incident_weight += nb.out_weight + nb.in_weight;
    pe += static_cast<std::int64_t>(nb.out_weight);
  }
  // At the head every out-arc is positive. Moving past a neighbor turns
  // its arcs around: in-arcs become positive, out-arcs negative.
  scan.pe_by_gap.push_back(pe);
  scan.best_pe = pe;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    pe += static_cast<std::int64_t>(sorted[i].in_weight) - static_cast<std::int64_t>(sorted[i].out_weight);
    scan.pe_by_gap.push_back(pe);
    if (pe > scan.best_pe) {
      scan.best_pe = pe;
      scan.best_gap = i + 1;
    }
  }

  const std::size_t k = sorted.size();
  if (k == 0) {
    scan.val = builder.empty() ? 0.0 : builder.max_val() + 1.0;
  } else if (scan.best_gap == 0) {
    const double hi = builder.val(sorted.front().vertex);
    scan.val = hi - 1.0;
    scan.underflow = !(scan.val < hi);
  } else if (scan.best_gap == k) {
    const double lo = builder.val(sorted.back().vertex);
    scan.val = lo + 1.0;
    scan.underflow = !(scan.val > lo);
  } else {
    const double lo = builder.val(sorted[scan.best_gap - 1].vertex);
    const double hi = builder.val(sorted[scan.best_gap].vertex);
    scan.val = lo + (hi - lo) / 2.0;
    scan.underflow = !(scan.val > lo && scan.val < hi);
  }
  return scan;
}

namespace {

GapScan scan_with_rerank(OrderBuilder& builder, std::span<const PlacedNeighbor> neighbors) {
  GapScan scan = scan_gaps(builder, neighbors);
  if (scan.underflow) {
    builder.rerank();
    scan = scan_gaps(builder, neighbors);
    if (scan.underflow) throw std::logic_error("rank underflow persists after re-ranking");
  }
  return scan;
}

}  // namespace

double get_opt_val(OrderBuilder& builder, std::span<const PlacedNeighbor> neighbors) {
  return scan_with_rerank(builder, neighbors).val;
}

InsertionEvent insert_item(OrderBuilder& builder, VertexId item, std::span<const PlacedNeighbor> neighbors,
                           InsertionPhase phase) {
  const GapScan scan = scan_with_rerank(builder, neighbors);
  builder.place(item, scan.val);

  InsertionEvent ev;
  ev.phase = phase;
  ev.item = item;
  ev.pe = scan.best_pe;
  ev.incident_weight = scan.incident_weight;
  const auto self = builder.key(item);
  for (const PlacedNeighbor& nb : neighbors)
    ev.recount += static_cast<std::int64_t>(self < builder.key(nb.vertex) ? nb.out_weight : nb.in_weight);
  return ev;
}

namespace {

// Placed neighbors of `v` in a multigraph, multiplicities aggregated, self-loops skipped.
std::vector<PlacedNeighbor> placed_neighbors(const Graph& g, VertexId v, const OrderBuilder& builder) {
  std::vector<PlacedNeighbor> result;
  auto out = g.out(v);
  auto in = g.in(v);
  std::size_t i = 0, j = 0;
  while (i < out.size() || j < in.size()) {
    const VertexId next = std::min(i < out.size() ? out[i].vertex : std::numeric_limits<VertexId>::max(),
                                   j < in.size() ? in[j].vertex : std::numeric_limits<VertexId>::max());
    PlacedNeighbor nb{next, 0, 0};
    while (i < out.size() && out[i].vertex == next) ++nb.out_weight, ++i;
    while (j < in.size() && in[j].vertex == next) ++nb.in_weight, ++j;
    if (next != v && builder.contains(next)) result.push_back(nb);
  }
  return result;
}

std::vector<PlacedNeighbor> placed_neighbors(const WeightedDigraph& g, VertexId v, const OrderBuilder& builder) {
  std::vector<PlacedNeighbor> result;
  auto out = g.out(v);
  auto in = g.in(v);
  std::size_t i = 0, j = 0;
  while (i < out.size() || j < in.size()) {
    const VertexId next = std::min(i < out.size() ? out[i].vertex : std::numeric_limits<VertexId>::max(),
                                   j < in.size() ? in[j].vertex : std::numeric_limits<VertexId>::max());
    PlacedNeighbor nb{next, 0, 0};
    if (i < out.size() && out[i].vertex == next) nb.out_weight = out[i++].weight;
    if (j < in.size() && in[j].vertex == next) nb.in_weight = in[j++].weight;
    if (builder.contains(next)) result.push_back(nb);
  }
  return result;
}

// Distinct neighbors over the undirected view, ascending id.
template <class G>
std::vector<VertexId> undirected_neighbors(const G& g, VertexId v) {
  std::vector<VertexId> ids;
  for (const auto& a : g.out(v)) ids.push_back(a.vertex);
  for (const auto& a : g.in(v)) ids.push_back(a.vertex);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::erase(ids, v);
  return ids;
}

}  // namespace

// ---------------------------------------------------------------------------
// Hub extraction

HubSplit extract_hubs(const Graph& g, double hub_fraction) {
  if (!(hub_fraction >= 0.0 && hub_fraction < 1.0)) throw std::invalid_argument("hub fraction must lie in [0, 1)");
  const std::size_t n = g.num_vertices();
  // The small slack keeps products like 0.002 * 1000 from rounding up to 3.
  const double raw = hub_fraction * static_cast<double>(n);
  const auto count = std::min<std::size_t>(n, raw > 0.0 ? static_cast<std::size_t>(std::ceil(raw - 1e-9)) : 0);

  std::vector<VertexId> rank(n);
  std::iota(rank.begin(), rank.end(), VertexId{0});
  std::stable_sort(rank.begin(), rank.end(), [&](VertexId a, VertexId b) {
    if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
    if (g.out_degree(a) != g.out_degree(b)) return g.out_degree(a) > g.out_degree(b);
    return a < b;
  });

  HubSplit split;
  split.hubs.assign(rank.begin(), rank.begin() + static_cast<std::ptrdiff_t>(count));
  std::vector<char> is_hub(n, 0);
  for (VertexId h : split.hubs) is_hub[h] = 1;

  std::vector<VertexId> removed = split.hubs;
  for (VertexId v = 0; v < n; ++v) {
    if (is_hub[v]) continue;
    bool connected = false;
    for (const Arc& a : g.out(v)) connected |= a.vertex != v && !is_hub[a.vertex];
    for (const Arc& a : g.in(v)) connected |= a.vertex != v && !is_hub[a.vertex];
    if (!connected) split.isolated.push_back(v);
  }
  removed.insert(removed.end(), split.isolated.begin(), split.isolated.end());
  split.residual = subgraph_without(g, removed);
  return split;
}

// ---------------------------------------------------------------------------
// Partitioning

PartitionResult partition_remaining(const Graph& residual, std::size_t max_part_size, std::uint64_t seed) {
  if (max_part_size < 1) throw std::invalid_argument("max part size must be >= 1");
  constexpr int kMaxSweeps = 20;
  const std::size_t n = residual.num_vertices();

  // Undirected view with arc multiplicities; self-loops dropped.
  std::vector<std::vector<std::pair<VertexId, std::uint32_t>>> adj(n);
  for (VertexId v = 0; v < n; ++v) {
    std::vector<VertexId> ids;
    for (const Arc& a : residual.out(v)) ids.push_back(a.vertex);
    for (const Arc& a : residual.in(v)) ids.push_back(a.vertex);
    std::sort(ids.begin(), ids.end());
    for (std::size_t i = 0; i < ids.size();) {
      std::size_t j = i;
      while (j < ids.size() && ids[j] == ids[i]) ++j;
      if (ids[i] != v) adj[v].emplace_back(ids[i], static_cast<std::uint32_t>(j - i));
      i = j;
    }
  }

  std::vector<VertexId> scan(n);
  std::iota(scan.begin(), scan.end(), VertexId{0});
  if (seed != 0) {
    std::mt19937_64 rng(seed);
    std::shuffle(scan.begin(), scan.end(), rng);
  }

  std::vector<VertexId> label(n);
  std::iota(label.begin(), label.end(), VertexId{0});
  std::vector<std::uint64_t> tally(n, 0);
  std::vector<VertexId> touched;

  // Most frequent label around v (ties: smaller label); v itself if isolated.
  auto best_label = [&](VertexId v) {
    touched.clear();
    for (auto [u, mult] : adj[v]) {
      if (tally[label[u]] == 0) touched.push_back(label[u]);
      tally[label[u]] += mult;
    }
    VertexId best = label[v];
    std::uint64_t best_count = 0;
    for (VertexId l : touched) {
      if (tally[l] > best_count || (tally[l] == best_count && l < best)) {
        best = l;
        best_count = tally[l];
      }
    }
    for (VertexId l : touched) tally[l] = 0;
    return best;
  };

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool changed = false;
    for (VertexId v : scan) {
      if (adj[v].empty()) continue;
      VertexId l = best_label(v);
      if (l != label[v]) {
        label[v] = l;
        changed = true;
      }
    }
    if (!changed) break;
  }

  std::vector<std::size_t> community_size(n, 0);
  for (VertexId v = 0; v < n; ++v) ++community_size[label[v]];
  for (VertexId v = 0; v < n; ++v) {
    if (community_size[label[v]] != 1 || adj[v].empty()) continue;
    VertexId l = best_label(v);
    if (l != label[v]) {
      --community_size[label[v]];
      label[v] = l;
      ++community_size[l];
    }
  }

  // Group by label; communities listed in order of their smallest member.
  std::vector<std::vector<VertexId>> communities;
  {
    std::vector<std::int64_t> slot(n, -1);
    for (VertexId v = 0; v < n; ++v) {
      if (slot[label[v]] < 0) {
        slot[label[v]] = static_cast<std::int64_t>(communities.size());
        communities.emplace_back();
      }
      communities[static_cast<std::size_t>(slot[label[v]])].push_back(v);
    }
  }

  PartitionResult result;
  result.assignment.assign(n, 0);
  for (auto& community : communities) {
    if (community.size() <= max_part_size) {
      result.parts.push_back(std::move(community));
      continue;
    }
    // Cut an oversized community along its own greedy insertion order, so
    // consecutive chunks keep the forward direction of most crossing edges.
    // Plain BFS chunks leave those edges at about one half positive.
    const Subgraph sub = induced_subgraph(residual, community);
    const std::vector<VertexId> local = order_subgraph(sub.graph).sorted();
    for (std::size_t i = 0; i < local.size(); i += max_part_size) {
      std::vector<VertexId> chunk;
      for (std::size_t j = i; j < std::min(local.size(), i + max_part_size); ++j) chunk.push_back(sub.to_parent[local[j]]);
      std::sort(chunk.begin(), chunk.end());
      result.parts.push_back(std::move(chunk));
    }
  }
  std::sort(result.parts.begin(), result.parts.end(),
            [](const std::vector<VertexId>& a, const std::vector<VertexId>& b) { return a.front() < b.front(); });

  result.subgraphs.reserve(result.parts.size());
  for (std::size_t p = 0; p < result.parts.size(); ++p) {
    for (VertexId v : result.parts[p]) result.assignment[v] = static_cast<std::uint32_t>(p);
    result.subgraphs.push_back(induced_subgraph(residual, result.parts[p]));
  }
  return result;
}

// ---------------------------------------------------------------------------
// Ordering parts and super vertices

OrderBuilder order_weighted(const WeightedDigraph& g, InsertionPhase phase, std::vector<InsertionEvent>* events) {
  const std::size_t n = g.num_vertices();
  OrderBuilder builder(n);
  if (n == 0) return builder;

  auto score = [&](VertexId v) {
    return static_cast<std::int64_t>(g.out_weight(v)) - static_cast<std::int64_t>(g.in_weight(v));
  };
  std::vector<VertexId> seeds(n);
  std::iota(seeds.begin(), seeds.end(), VertexId{0});
  std::sort(seeds.begin(), seeds.end(), [&](VertexId a, VertexId b) {
    if (g.in_weight(a) != g.in_weight(b)) return g.in_weight(a) < g.in_weight(b);
    if (score(a) != score(b)) return score(a) > score(b);
    return a < b;
  });

  std::vector<char> visited(n, 0);
  auto insert = [&](VertexId v) {
    auto neighbors = placed_neighbors(g, v, builder);
    InsertionEvent ev = insert_item(builder, v, neighbors, phase);
    if (events) events->push_back(ev);
  };

  std::size_t next_seed = 0;
  std::vector<VertexId> frontier, layer;
  while (builder.size() < n) {
    while (visited[seeds[next_seed]]) ++next_seed;
    const VertexId seed = seeds[next_seed];
    visited[seed] = 1;
    insert(seed);
    frontier.assign(1, seed);
    while (!frontier.empty()) {
      layer.clear();
      for (VertexId u : frontier) {
        for (VertexId w : undirected_neighbors(g, u)) {
          if (!visited[w]) {
            visited[w] = 1;
            layer.push_back(w);
          }
        }
      }
      std::sort(layer.begin(), layer.end(), [&](VertexId a, VertexId b) {
        return score(a) != score(b) ? score(a) > score(b) : a < b;
      });
      for (VertexId w : layer) insert(w);
      frontier.swap(layer);
    }
  }
  return builder;
}

OrderBuilder order_subgraph(const Graph& part, std::vector<InsertionEvent>* events) {
  return order_weighted(WeightedDigraph::from_multigraph(part), InsertionPhase::intra, events);
}

SuperGraph build_super_graph(const PartitionResult& partition, const Graph& residual) {
  std::vector<WeightedEdge> edges;
  for (VertexId u = 0; u < residual.num_vertices(); ++u) {
    for (const Arc& a : residual.out(u)) {
      const auto pu = partition.assignment[u];
      const auto pv = partition.assignment[a.vertex];
      if (pu != pv) edges.push_back({pu, pv, 1});
    }
  }
  return SuperGraph(partition.num_parts(), edges);
}

OrderBuilder order_supers(const SuperGraph& supers, std::vector<InsertionEvent>* events) {
  return order_weighted(supers, InsertionPhase::super, events);
}

OrderBuilder flatten_global_vals(const OrderBuilder& super_order, std::span<const OrderBuilder> local_orders,
                                 const PartitionResult& partition, const Subgraph& residual, std::size_t n) {
  if (local_orders.size() != partition.num_parts()) throw std::invalid_argument("one local order per part expected");
  OrderBuilder global(n);
  bool first = true;
  double prev_max = 0.0;
  for (VertexId p : super_order.sorted()) {
    const OrderBuilder& local = local_orders[p];
    const std::vector<VertexId> seq = local.sorted();
    if (seq.empty()) continue;
    // Shift so this part starts strictly above everything emitted so far;
    // local vals can be negative after head insertions.
    const double offset = (first ? 0.0 : prev_max + 1.0) - local.val(seq.front());
    double cur_max = prev_max;
    for (VertexId lv : seq) {
      const VertexId vertex = residual.to_parent[partition.subgraphs[p].to_parent[lv]];
      const double val = local.val(lv) + offset;
      global.place(vertex, val);
      cur_max = first ? val : std::max(cur_max, val);
      first = false;
    }
    prev_max = cur_max;
  }
  return global;
}

InsertionEvent insert_external(OrderBuilder& global, const Graph& g, VertexId v, InsertionPhase phase) {
  auto neighbors = placed_neighbors(g, v, global);
  return insert_item(global, v, neighbors, phase);
}

Ordering finalize(const OrderBuilder& global) {
  if (global.size() != global.capacity())
    throw std::logic_error("finalize: " + std::to_string(global.capacity() - global.size()) +
                           " vertices were never placed");
  return Ordering::from_sequence(global.sorted());
}

// ---------------------------------------------------------------------------
// Whole pipeline

ReorderResult reorder_with_report(const Graph& g, const GoGraphConfig& config) {
  if (config.max_part_size < 1) throw std::invalid_argument("max part size must be >= 1");
  const std::size_t n = g.num_vertices();
  ReorderResult result;
  PipelineReport& report = result.report;
  if (n == 0) return result;

  HubSplit split = extract_hubs(g, config.hub_fraction);
  const Graph& residual = split.residual.graph;
  PartitionResult partition = partition_remaining(residual, config.max_part_size, config.seed);
  const std::size_t parts = partition.num_parts();

  std::vector<OrderBuilder> local(parts);
  std::vector<std::vector<InsertionEvent>> part_events(parts);
  const auto part_count = static_cast<std::int64_t>(parts);
#pragma omp parallel for schedule(dynamic, 1) if (config.parallel)
  for (std::int64_t p = 0; p < part_count; ++p) {
    const auto idx = static_cast<std::size_t>(p);
    local[idx] = order_subgraph(partition.subgraphs[idx].graph, &part_events[idx]);
    for (InsertionEvent& ev : part_events[idx]) ev.part = idx;
  }

  std::vector<InsertionEvent> super_events;
  const SuperGraph supers = build_super_graph(partition, residual);
  const OrderBuilder super_order = order_supers(supers, &super_events);

  OrderBuilder global = flatten_global_vals(super_order, local, partition, split.residual, n);
  report.residual_order = global.sorted();

  std::vector<InsertionEvent> tail_events;
  // Hubs go in by ascending degree. A hub with no placed neighbor yet is
  // deferred to a later pass so it can be placed next to its neighbors.
  std::vector<VertexId> pending = split.hubs;
  std::sort(pending.begin(), pending.end(), [&](VertexId a, VertexId b) {
    return g.degree(a) != g.degree(b) ? g.degree(a) < g.degree(b) : a < b;
  });
  bool progress = true;
  while (!pending.empty() && progress) {
    progress = false;
    std::vector<VertexId> deferred;
    for (VertexId h : pending) {
      if (placed_neighbors(g, h, global).empty()) {
        deferred.push_back(h);
        continue;
      }
      tail_events.push_back(insert_external(global, g, h, InsertionPhase::hub));
      progress = true;
    }
    pending.swap(deferred);
  }
  for (VertexId h : pending) tail_events.push_back(insert_external(global, g, h, InsertionPhase::hub));
  for (VertexId v : split.isolated) tail_events.push_back(insert_external(global, g, v, InsertionPhase::isolated));

  result.order = finalize(global);

  report.hub_count = split.hubs.size();
  report.isolated_count = split.isolated.size();
  report.part_count = parts;
  report.reranks = global.rerank_count() + super_order.rerank_count();
  for (const OrderBuilder& b : local) report.reranks += b.rerank_count();
  report.part_of.assign(n, std::numeric_limits<std::uint32_t>::max());
  for (VertexId r = 0; r < residual.num_vertices(); ++r)
    report.part_of[split.residual.to_parent[r]] = partition.assignment[r];

  auto add = [&](const std::vector<InsertionEvent>& events) {
    for (const InsertionEvent& ev : events) {
      const auto pe = static_cast<std::uint64_t>(ev.pe);
      switch (ev.phase) {
        case InsertionPhase::intra: report.m_intra += pe; break;
        case InsertionPhase::super: report.m_inter += pe; break;
        case InsertionPhase::hub: report.m_hub += pe; break;
        case InsertionPhase::isolated: report.m_isolated += pe; break;
      }
    }
    if (config.audit) report.events.insert(report.events.end(), events.begin(), events.end());
  };
  for (const auto& events : part_events) add(events);
  add(super_events);
  add(tail_events);
  report.m_total = report.m_intra + report.m_inter + report.m_hub + report.m_isolated;
  return result;
}

Ordering reorder(const Graph& g, const GoGraphConfig& config) { return reorder_with_report(g, config).order; }

}  // namespace gograph
