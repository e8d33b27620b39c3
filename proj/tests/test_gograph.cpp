#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "doctest.h"

#include "corpus.hpp"
#include "gograph/algos.hpp"
#include "gograph/engine.hpp"
#include "gograph/gograph.hpp"
#include "gograph/metric.hpp"
#include "oracles.hpp"

using namespace gograph;

namespace {

Ordering seq(std::vector<VertexId> s) { return Ordering::from_sequence(std::move(s)); }

std::vector<VertexId> sorted_ids(std::vector<VertexId> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Builder with vertices 0..k-1 placed at vals 0..k-1.
OrderBuilder placed_prefix(std::size_t capacity, std::size_t k) {
  OrderBuilder b(capacity);
  for (VertexId v = 0; v < k; ++v) b.place(v, static_cast<double>(v));
  return b;
}

}  // namespace

TEST_CASE("extract_hubs") {
  SUBCASE("worked 8-vertex example: hubs a and b leave c and h isolated") {
    const HubSplit s = extract_hubs(corpus::eight_vertex(), 0.25);
    CHECK(sorted_ids(s.hubs) == std::vector<VertexId>{0, 1});
    CHECK(s.isolated == std::vector<VertexId>{2, 7});
    CHECK(s.residual.graph.num_vertices() == 4);
  }
  SUBCASE("fraction 0 keeps every vertex except originally isolated ones") {
    const Graph g = make_graph(4, {{0, 1, 1}, {1, 2, 1}});
    const HubSplit s = extract_hubs(g, 0.0);
    CHECK(s.hubs.empty());
    CHECK(s.isolated == std::vector<VertexId>{3});
    CHECK(s.residual.to_parent == std::vector<VertexId>{0, 1, 2});
  }
  SUBCASE("star center is the hub and every leaf becomes isolated") {
    std::vector<Edge> e;
    for (VertexId v = 1; v < 100; ++v) e.push_back({0, v, 1});
    const HubSplit s = extract_hubs(make_graph(100, e), 0.01);
    CHECK(s.hubs == std::vector<VertexId>{0});
    CHECK(s.isolated.size() == 99);
    CHECK(s.residual.graph.num_vertices() == 0);
  }
  SUBCASE("hub ties go to higher out-degree, then lower id") {
    // 0 and 1 both have degree 2, 1 has more out-arcs.
    const Graph g = make_graph(4, {{2, 0, 1}, {3, 0, 1}, {1, 2, 1}, {1, 3, 1}});
    CHECK(extract_hubs(g, 0.25).hubs == std::vector<VertexId>{1});
    const Graph tie = make_graph(4, {{0, 2, 1}, {1, 3, 1}});
    CHECK(extract_hubs(tie, 0.25).hubs == std::vector<VertexId>{0});
  }
  SUBCASE("hubs, isolated and residual partition V") {
    for (const auto& entry : corpus::build(false)) {
      CAPTURE(entry.name);
      const HubSplit s = extract_hubs(entry.graph, 0.05);
      std::vector<VertexId> all = s.hubs;
      all.insert(all.end(), s.isolated.begin(), s.isolated.end());
      all.insert(all.end(), s.residual.to_parent.begin(), s.residual.to_parent.end());
      CHECK(oracle::is_permutation_of_n(all, entry.graph.num_vertices()));
    }
  }
}

TEST_CASE("partition_remaining") {
  SUBCASE("two bidirected 4-cliques joined by one arc split into the cliques") {
    const PartitionResult p = partition_remaining(corpus::two_cliques(), 8);
    REQUIRE(p.num_parts() == 2);
    CHECK(p.parts[0] == std::vector<VertexId>{0, 1, 2, 3});
    CHECK(p.parts[1] == std::vector<VertexId>{4, 5, 6, 7});
  }
  SUBCASE("components become parts when they fit") {
    const Graph g = make_graph(9, {{0, 1, 1}, {1, 2, 1}, {2, 0, 1}, {3, 4, 1}, {4, 5, 1}, {5, 6, 1},
                                   {7, 8, 1}, {8, 7, 1}});
    const PartitionResult p = partition_remaining(g, 10);
    REQUIRE(p.num_parts() == 3);
    CHECK(p.parts[0] == std::vector<VertexId>{0, 1, 2});
    CHECK(p.parts[1] == std::vector<VertexId>{3, 4, 5, 6});
    CHECK(p.parts[2] == std::vector<VertexId>{7, 8});
  }
  SUBCASE("chain of 10 with cap 5 is cut into two contiguous chunks") {
    const Graph g = corpus::chain(10);
    const PartitionResult p = partition_remaining(g, 5);
    REQUIRE(p.num_parts() == 2);
    CHECK(p.parts[0] == std::vector<VertexId>{0, 1, 2, 3, 4});
    CHECK(p.parts[1] == std::vector<VertexId>{5, 6, 7, 8, 9});
    std::size_t intra = 0;
    for (const Edge& e : g.edges()) intra += p.assignment[e.src] == p.assignment[e.dst];
    CHECK(intra == 8);
  }
  SUBCASE("caps hold, assignment is total and deterministic per seed") {
    for (const auto& entry : corpus::build(false)) {
      CAPTURE(entry.name);
      for (std::uint64_t seed : {0u, 7u}) {
        const PartitionResult p = partition_remaining(entry.graph, 16, seed);
        const PartitionResult again = partition_remaining(entry.graph, 16, seed);
        CHECK(p.assignment == again.assignment);
        CHECK(p.assignment.size() == entry.graph.num_vertices());
        std::size_t total = 0;
        for (std::size_t i = 0; i < p.num_parts(); ++i) {
          CHECK(!p.parts[i].empty());
          CHECK(p.parts[i].size() <= 16);
          CHECK(p.subgraphs[i].graph.num_vertices() == p.parts[i].size());
          for (VertexId v : p.parts[i]) CHECK(p.assignment[v] == i);
          total += p.parts[i].size();
        }
        CHECK(total == entry.graph.num_vertices());
        // Every edge inside a part appears in that part's induced graph.
        std::vector<std::size_t> intra(p.num_parts(), 0);
        for (const Edge& e : entry.graph.edges())
          if (p.assignment[e.src] == p.assignment[e.dst]) ++intra[p.assignment[e.src]];
        for (std::size_t i = 0; i < p.num_parts(); ++i) CHECK(p.subgraphs[i].graph.num_edges() == intra[i]);
      }
    }
  }
}

TEST_CASE("get_opt_val") {
  SUBCASE("worked gap sweep: pe trace 2,1,2,1 and the head gap wins") {
    // p=0, q=1, u=2 placed in that order; v=3 has v->p, q->v, v->u.
    OrderBuilder b = placed_prefix(4, 3);
    const std::vector<PlacedNeighbor> nbrs{{0, 1, 0}, {1, 0, 1}, {2, 1, 0}};
    const GapScan scan = scan_gaps(b, nbrs);
    CHECK(scan.pe_by_gap == std::vector<std::int64_t>{2, 1, 2, 1});
    CHECK(scan.best_gap == 0);
    CHECK(scan.best_pe == 2);
    CHECK(scan.incident_weight == 3);
    CHECK(get_opt_val(b, nbrs) == -1.0);
  }
  SUBCASE("only in-neighbors placed: tail, all positive") {
    OrderBuilder b = placed_prefix(4, 3);
    const std::vector<PlacedNeighbor> nbrs{{0, 0, 1}, {2, 0, 1}};
    const GapScan scan = scan_gaps(b, nbrs);
    CHECK(scan.best_gap == 2);
    CHECK(scan.best_pe == 2);
    CHECK(get_opt_val(b, nbrs) == 3.0);
  }
  SUBCASE("only out-neighbors placed: head, all positive") {
    OrderBuilder b = placed_prefix(4, 3);
    const std::vector<PlacedNeighbor> nbrs{{1, 1, 0}, {2, 2, 0}};
    const GapScan scan = scan_gaps(b, nbrs);
    CHECK(scan.best_gap == 0);
    CHECK(scan.best_pe == 3);
    CHECK(get_opt_val(b, nbrs) == 0.0);
  }
  SUBCASE("middle gap takes the midpoint of its bounding neighbors") {
    OrderBuilder b = placed_prefix(4, 3);
    const std::vector<PlacedNeighbor> nbrs{{0, 0, 1}, {2, 1, 0}};
    CHECK(get_opt_val(b, nbrs) == 1.0);
  }
  SUBCASE("a neighbor on both sides applies the net change") {
    OrderBuilder b = placed_prefix(3, 2);
    // 0 -> v twice, v -> 0 once: after 0 wins with pe 2.
    const std::vector<PlacedNeighbor> nbrs{{0, 1, 2}};
    const GapScan scan = scan_gaps(b, nbrs);
    CHECK(scan.pe_by_gap == std::vector<std::int64_t>{1, 2});
    CHECK(scan.best_gap == 1);
  }
  SUBCASE("no placed neighbor: 0 on an empty builder, max + 1 otherwise") {
    OrderBuilder empty(2);
    CHECK(get_opt_val(empty, {}) == 0.0);
    OrderBuilder b = placed_prefix(4, 3);
    CHECK(get_opt_val(b, {}) == 3.0);
  }
  SUBCASE("midpoint underflow re-ranks the builder and recomputes") {
    OrderBuilder b(3);
    b.place(0, 0.0);
    b.place(1, std::nextafter(0.0, 1.0));
    const std::vector<PlacedNeighbor> nbrs{{0, 0, 1}, {1, 1, 0}};
    const double v = get_opt_val(b, nbrs);
    CHECK(b.rerank_count() == 1);
    CHECK(b.val(0) < v);
    CHECK(v < b.val(1));
    b.place(2, v);
    CHECK(b.sorted() == std::vector<VertexId>{0, 2, 1});
  }
  SUBCASE("the chosen gap is at least half of the incident weight") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 500; ++t) {
      const std::size_t k = 1 + t % 9;
      OrderBuilder b = placed_prefix(k + 1, k);
      std::vector<PlacedNeighbor> nbrs;
      std::uniform_int_distribution<int> w(0, 3);
      for (VertexId u = 0; u < k; ++u) {
        PlacedNeighbor nb{u, static_cast<std::uint64_t>(w(rng)), static_cast<std::uint64_t>(w(rng))};
        if (nb.out_weight + nb.in_weight > 0) nbrs.push_back(nb);
      }
      const GapScan scan = scan_gaps(b, nbrs);
      CHECK(2 * scan.best_pe >= static_cast<std::int64_t>(scan.incident_weight));
      // The scan maximum is the true maximum over every gap.
      CHECK(scan.best_pe == *std::max_element(scan.pe_by_gap.begin(), scan.pe_by_gap.end()));
    }
  }
}

TEST_CASE("OrderBuilder and finalize") {
  OrderBuilder b(3);
  b.place(0, 0.0);
  b.place(1, 2.0);
  b.place(2, 1.0);
  CHECK(oracle::to_vector(finalize(b)) == std::vector<VertexId>{0, 2, 1});
  CHECK_THROWS_AS(b.place(1, 5.0), std::logic_error);

  OrderBuilder ties(3);
  ties.place(2, 1.0);
  ties.place(0, 1.0);
  ties.place(1, 1.0);
  CHECK(oracle::to_vector(finalize(ties)) == std::vector<VertexId>{2, 0, 1});

  OrderBuilder one(1);
  one.place(0, 0.0);
  CHECK(oracle::to_vector(finalize(one)) == std::vector<VertexId>{0});

  OrderBuilder missing(2);
  missing.place(0, 0.0);
  CHECK_THROWS_AS(finalize(missing), std::logic_error);

  OrderBuilder r(3);
  r.place(0, -4.5);
  r.place(1, 10.25);
  r.place(2, 3.0);
  r.rerank();
  CHECK(r.val(0) == 0.0);
  CHECK(r.val(2) == 1.0);
  CHECK(r.val(1) == 2.0);
}

TEST_CASE("order_subgraph") {
  SUBCASE("chain: vals increase along the chain") {
    const Graph g = corpus::chain(4);
    const OrderBuilder b = order_subgraph(g);
    for (VertexId v = 0; v + 1 < 4; ++v) CHECK(b.key(v) < b.key(v + 1));
    CHECK(evaluate_m(g, finalize(b)).m_value == 3);
    CHECK(brute_force_best_order(g).max_m == 3);
  }
  SUBCASE("single vertex") {
    const OrderBuilder b = order_subgraph(make_graph(1, {}));
    CHECK(b.size() == 1);
    CHECK(oracle::to_vector(finalize(b)) == std::vector<VertexId>{0});
  }
  SUBCASE("3-cycle reaches the optimum") {
    const Graph g = corpus::cycle(3);
    CHECK(evaluate_m(g, finalize(order_subgraph(g))).m_value == brute_force_best_order(g).max_m);
  }
  SUBCASE("seed is the minimum in-degree vertex") {
    // 2 is the only source, so it is inserted first and lands at val 0.
    const Graph g = make_graph(3, {{2, 0, 1}, {0, 1, 1}, {1, 0, 1}});
    std::vector<InsertionEvent> events;
    order_subgraph(g, &events);
    REQUIRE(events.size() == 3);
    CHECK(events[0].item == 2);
  }
  SUBCASE("disconnected parts are re-seeded") {
    const Graph g = make_graph(4, {{0, 1, 1}, {3, 2, 1}});
    const Ordering o = finalize(order_subgraph(g));
    CHECK(evaluate_m(g, o).m_value == 2);
  }
}

TEST_CASE("super graph and its ordering") {
  SUBCASE("weights count arcs between parts") {
    const Graph g = make_graph(4, {{0, 2, 1}, {0, 3, 1}, {1, 3, 1}, {3, 1, 1}, {0, 1, 1}, {2, 3, 1}});
    PartitionResult p;
    p.assignment = {0, 1, 0, 1};
    p.parts = {{0, 2}, {1, 3}};
    // 0->3, 0->1, 2->3 go left to right, 3->1 stays in part 1, nothing goes back.
    const SuperGraph s = build_super_graph(p, g);
    CHECK(s.num_vertices() == 2);
    CHECK(s.out_weight(0) == 3);
    CHECK(s.out_weight(1) == 0);
  }
  SUBCASE("three arcs one way and one back") {
    const Graph g = make_graph(4, {{0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {3, 0, 1}});
    PartitionResult p;
    p.assignment = {0, 0, 1, 1};
    p.parts = {{0, 1}, {2, 3}};
    const SuperGraph s = build_super_graph(p, g);
    CHECK(s.out_weight(0) == 3);
    CHECK(s.out_weight(1) == 1);
  }
  SUBCASE("single part gives one super vertex and no edges") {
    const Graph g = corpus::cycle(4);
    const PartitionResult p = partition_remaining(g, 100);
    REQUIRE(p.num_parts() == 1);
    const SuperGraph s = build_super_graph(p, g);
    CHECK(s.num_vertices() == 1);
    CHECK(s.num_arcs() == 0);
    CHECK(oracle::to_vector(finalize(order_supers(s))) == std::vector<VertexId>{0});
  }
  SUBCASE("worked example: the arc e->g joins the two parts with weight 1") {
    // Residual of the 8-vertex example after removing a, b, c, h is d->e->g->f.
    const HubSplit split = extract_hubs(corpus::eight_vertex(), 0.25);
    const Graph& r = split.residual.graph;
    PartitionResult p;
    p.assignment.resize(r.num_vertices());
    for (VertexId i = 0; i < r.num_vertices(); ++i) {
      const VertexId parent = split.residual.to_parent[i];
      p.assignment[i] = (parent == 3 || parent == 4) ? 0 : 1;  // {d,e} and {f,g}
    }
    p.parts.resize(2);
    for (VertexId i = 0; i < r.num_vertices(); ++i) p.parts[p.assignment[i]].push_back(i);
    const SuperGraph s = build_super_graph(p, r);
    CHECK(s.out_weight(0) == 1);
    CHECK(s.in_weight(1) == 1);
    CHECK(s.total_weight() == 1);
  }
  SUBCASE("heavier direction first") {
    const std::vector<WeightedEdge> e{{0, 1, 5}, {1, 0, 1}};
    const SuperGraph s(2, e);
    const Ordering o = finalize(order_supers(s));
    CHECK(oracle::to_vector(o) == std::vector<VertexId>{0, 1});
    CHECK(evaluate_weighted_m(s, o).m_value == 5);
    const std::vector<WeightedEdge> rev{{1, 0, 5}, {0, 1, 1}};
    CHECK(oracle::to_vector(finalize(order_supers(SuperGraph(2, rev)))) == std::vector<VertexId>{1, 0});
  }
  SUBCASE("weighted DAG of three supers is ordered topologically") {
    const std::vector<WeightedEdge> e{{2, 0, 4}, {0, 1, 2}, {2, 1, 7}};
    const SuperGraph s(3, e);
    const Ordering o = finalize(order_supers(s));
    std::uint64_t best = 0;
    std::vector<VertexId> perm{0, 1, 2};
    do best = std::max(best, evaluate_weighted_m(s, seq(perm)).m_value);
    while (std::next_permutation(perm.begin(), perm.end()));
    CHECK(best == 13);
    CHECK(evaluate_weighted_m(s, o).m_value == 13);
    CHECK(oracle::to_vector(o) == std::vector<VertexId>{2, 0, 1});
  }
}

TEST_CASE("flatten_global_vals keeps parts contiguous") {
  const Graph g = make_graph(6, {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {4, 5, 1}, {5, 3, 1}});
  const Subgraph residual = subgraph_without(g, {});
  PartitionResult p;
  p.assignment = {0, 1, 1, 2, 2, 2};
  p.parts = {{0}, {1, 2}, {3, 4, 5}};
  for (const auto& part : p.parts) p.subgraphs.push_back(induced_subgraph(residual.graph, part));
  std::vector<OrderBuilder> locals;
  for (const auto& sg : p.subgraphs) locals.push_back(order_subgraph(sg.graph));
  const OrderBuilder supers = order_supers(build_super_graph(p, residual.graph));
  const OrderBuilder global = flatten_global_vals(supers, locals, p, residual, 6);
  const Ordering o = finalize(global);
  CHECK(o.size() == 6);
  CHECK(oracle::is_permutation_of_n(oracle::to_vector(o), 6));
  // Supers form the chain P0 -> P1 -> P2, so the parts appear in that order.
  CHECK(o.at(0) == 0);
  CHECK(sorted_ids({o.at(1), o.at(2)}) == std::vector<VertexId>{1, 2});
  CHECK(sorted_ids({o.at(3), o.at(4), o.at(5)}) == std::vector<VertexId>{3, 4, 5});
  // Relative local order survives.
  for (std::size_t i = 0; i < 3; ++i)
    for (VertexId a : p.parts[i])
      for (VertexId b : p.parts[i]) {
        const VertexId la = static_cast<VertexId>(std::find(p.parts[i].begin(), p.parts[i].end(), a) - p.parts[i].begin());
        const VertexId lb = static_cast<VertexId>(std::find(p.parts[i].begin(), p.parts[i].end(), b) - p.parts[i].begin());
        if (locals[i].key(la) < locals[i].key(lb)) CHECK(o.position(a) < o.position(b));
      }

  SUBCASE("single part keeps its local vals") {
    PartitionResult one;
    one.assignment.assign(6, 0);
    one.parts = {{0, 1, 2, 3, 4, 5}};
    one.subgraphs = {induced_subgraph(residual.graph, one.parts[0])};
    const std::vector<OrderBuilder> local{order_subgraph(one.subgraphs[0].graph)};
    const OrderBuilder flat = flatten_global_vals(order_supers(build_super_graph(one, residual.graph)), local, one,
                                                  residual, 6);
    for (VertexId v = 0; v < 6; ++v) CHECK(flat.val(v) == local[0].val(v));
  }
}

TEST_CASE("insert_external") {
  SUBCASE("hub fed by ten placed sources lands after them") {
    std::vector<Edge> e;
    for (VertexId u = 0; u < 10; ++u) e.push_back({u, 12, 1});
    e.push_back({12, 10, 1});
    e.push_back({12, 11, 1});
    const Graph g = make_graph(13, e);
    OrderBuilder global = placed_prefix(13, 10);
    const InsertionEvent ev = insert_external(global, g, 12, InsertionPhase::hub);
    CHECK(ev.pe == 10);
    CHECK(ev.recount == 10);
    CHECK(ev.incident_weight == 10);
    for (VertexId u = 0; u < 10; ++u) CHECK(global.key(u) < global.key(12));
  }
  SUBCASE("isolated vertex tied to one hub both ways claims one edge") {
    const Graph g = make_graph(3, {{0, 2, 1}, {2, 0, 1}, {0, 1, 1}});
    OrderBuilder global = placed_prefix(3, 2);
    const InsertionEvent ev = insert_external(global, g, 2, InsertionPhase::isolated);
    CHECK(ev.pe == 1);
    CHECK(ev.recount == 1);
    CHECK(ev.incident_weight == 2);
  }
}

TEST_CASE("reorder: worked 8-vertex example") {
  const Graph g = corpus::eight_vertex();
  enum { a, b, c, d, e, f, g_, h };
  // The two orders quoted for this example.
  const std::uint64_t m1 = evaluate_m(g, seq({d, e, c, b, h, a, g_, f})).m_value;
  const std::uint64_t m2 = evaluate_m(g, seq({h, a, c, d, e, g_, f, b})).m_value;
  CHECK(m1 == 10);
  CHECK(m2 == 14);
  GoGraphConfig cfg;
  cfg.hub_fraction = 0.25;
  const ReorderResult r = reorder_with_report(g, cfg);
  CHECK(r.report.hub_count == 2);
  CHECK(r.report.isolated_count == 2);
  CHECK(evaluate_m(g, r.order).m_value >= m1);
  CHECK(evaluate_m(g, r.order).m_value == r.report.m_total);
}

TEST_CASE("reorder: chain of 1000 becomes the forward order") {
  const Graph g = corpus::chain(1000);
  const Ordering o = reorder(g);
  CHECK(evaluate_m(g, o).ratio == 1.0);
  EngineConfig cfg;
  cfg.timing = false;
  CHECK(run_async(g, o, sssp_spec(0), cfg).changing_sweeps == 1);
}

TEST_CASE("reorder: small-example orders") {
  GoGraphConfig cfg;
  cfg.hub_fraction = 0.0;
  CHECK(oracle::to_vector(reorder(corpus::five_vertex(), cfg)) == std::vector<VertexId>{0, 1, 4, 2, 3});
  CHECK(evaluate_m(corpus::cycle(3), reorder(corpus::cycle(3), cfg)).m_value == 2);
}

TEST_CASE("reorder on the corpus: half the edges, contiguity, recount, determinism") {
  for (const auto& entry : corpus::build(false)) {
    CAPTURE(entry.name);
    const Graph& g = entry.graph;
    GoGraphConfig cfg;
    cfg.audit = true;
    cfg.max_part_size = 32;
    const ReorderResult r = reorder_with_report(g, cfg);
    const MetricReport m = evaluate_m(g, r.order);
    CHECK(2 * m.m_value >= m.edges_considered);
    CHECK(m.m_value == r.report.m_total);
    CHECK(r.report.m_intra + r.report.m_inter + r.report.m_hub + r.report.m_isolated == r.report.m_total);

    std::int64_t recount = 0;
    for (const InsertionEvent& ev : r.report.events) {
      CHECK(2 * ev.recount >= static_cast<std::int64_t>(ev.incident_weight));
      CHECK(ev.recount == ev.pe);
      recount += ev.recount;
    }
    CHECK(recount == static_cast<std::int64_t>(m.m_value));

    // Each part occupies one slice of the residual order.
    std::set<std::uint32_t> closed;
    std::uint32_t current = UINT32_MAX;
    for (VertexId v : r.report.residual_order) {
      const std::uint32_t part = r.report.part_of[v];
      if (part != current) {
        CHECK(closed.count(part) == 0);
        if (current != UINT32_MAX) closed.insert(current);
        current = part;
      }
    }

    GoGraphConfig serial = cfg;
    serial.parallel = false;
    CHECK(reorder(g, serial) == r.order);
    CHECK(reorder(g, cfg) == r.order);
  }
}

TEST_CASE("reorder: DAG as one part without hubs keeps at least half") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const Graph g = corpus::generated(GraphModel::dag, 60, 0.1, 40 + s);
    GoGraphConfig cfg;
    cfg.hub_fraction = 0.0;
    cfg.max_part_size = 1000;
    const MetricReport m = evaluate_m(g, reorder(g, cfg));
    CHECK(2 * m.m_value >= g.num_edges());
  }
}
