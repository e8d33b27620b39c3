#include "gograph/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "gograph/algos.hpp"
#include "gograph/errors.hpp"
#include "gograph/generators.hpp"
#include "gograph/methods.hpp"
#include "gograph/metric.hpp"
#include "gograph/oracle.hpp"
#include "gograph/report.hpp"
#include "gograph/stats.hpp"

namespace gograph {
namespace {

struct NotConverged : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string order;
  std::string method = "gograph";
  std::string methods = "identity,random,degsort,hubsort,hubcluster,topo,gograph";
  std::string algo = "pagerank";
  std::string algos = "pagerank,sssp,bfs,php";
  std::string mode = "async";
  std::string kind = "m-opt";
  std::string model = "chain";
  std::string out;
  std::string summary;
  std::string trace;
  std::uint64_t seed = 0;
  std::uint64_t source = 0;
  std::size_t n = 0;
  double param = 0.0;
  double epsilon = 1e-6;
  double damping = 0.85;
  double penalty = 0.85;
  std::size_t max_sweeps = 10000;
  double hub_frac = 0.002;
  std::size_t max_part_size = 1024;
  bool weighted = false;
  bool no_timing = false;
  bool require_converged = false;
};

// Writes to `path`, or to `fallback` when the path is empty or "-".
template <class Fn>
void emit(const std::string& path, std::ostream& fallback, Fn&& fn) {
  if (path.empty() || path == "-") {
    fn(fallback);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open '" + path + "' for writing");
  fn(file);
  if (!file) throw std::invalid_argument("failed writing '" + path + "'");
}

std::vector<std::string> split_list(const std::string& list) {
  std::vector<std::string> items;
  std::stringstream ss(list);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) items.push_back(item);
  return items;
}

Mode parse_mode(const std::string& s) {
  if (s == "sync") return Mode::sync;
  if (s == "async") return Mode::async;
  throw std::invalid_argument("unknown mode '" + s + "' (expected sync|async)");
}

VertexId dense_id(const Graph& g, std::uint64_t original) {
  const auto ids = g.original_ids();
  const auto it = std::find(ids.begin(), ids.end(), original);
  if (it == ids.end()) throw std::invalid_argument("source " + std::to_string(original) + " is not a vertex of the input");
  return static_cast<VertexId>(it - ids.begin());
}

EngineConfig engine_config(const Options& o, const Graph& g) {
  EngineConfig c;
  c.mode = parse_mode(o.mode);
  c.epsilon = o.epsilon;
  c.max_sweeps = o.max_sweeps;
  c.damping = o.damping;
  c.penalty = o.penalty;
  c.timing = !o.no_timing;
  c.source = g.num_vertices() == 0 ? 0 : dense_id(g, o.source);
  c.validate();
  return c;
}

MethodOptions method_options(const Options& o) {
  if (!(o.hub_frac >= 0.0 && o.hub_frac <= 1.0)) throw std::invalid_argument("--hub-frac must be in [0, 1]");
  if (o.max_part_size == 0) throw std::invalid_argument("--max-part-size must be positive");
  MethodOptions m;
  m.seed = o.seed;
  m.gograph.hub_fraction = o.hub_frac;
  m.gograph.max_part_size = o.max_part_size;
  m.gograph.seed = o.seed;
  return m;
}

json original_sequence(const Ordering& order, const Graph& g) {
  json arr = json::array();
  for (VertexId v : order.seq()) arr.push_back(g.original_id(v));
  return arr;
}

void cmd_gen(const Options& o, std::ostream& out) {
  GeneratorParams p;
  p.model = parse_graph_model(o.model);
  p.n = o.n;
  p.param = o.param;
  p.seed = o.seed;
  p.random_weights = o.weighted;
  const Graph g = build_graph(generate(p));
  emit(o.out, out, [&](std::ostream& s) { write_edge_list(s, g); });
}

void cmd_reorder(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.input);
  const Method method = parse_method(o.method);
  PipelineReport pipeline;
  const Ordering order = compute_order(method, g, method_options(o), &pipeline);
  emit(o.out, out, [&](std::ostream& s) { write_order(s, order, g); });

  json summary{{"method", to_string(method)}, {"metric", to_json(evaluate_m(g, order))}};
  if (method == Method::gograph) summary["pipeline"] = to_json(pipeline);
  // With the order on stdout the summary only goes to an explicit file.
  if (!o.summary.empty() || !(o.out.empty() || o.out == "-"))
    emit(o.summary, out, [&](std::ostream& s) { s << summary.dump(2) << '\n'; });
}

void cmd_metric(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.input);
  const Ordering order = o.order.empty() ? Ordering::identity(g.num_vertices()) : read_order_file(o.order, g);
  emit(o.out, out, [&](std::ostream& s) { s << to_json(evaluate_m(g, order)).dump(2) << '\n'; });
}

void cmd_run(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.input);
  EngineConfig config = engine_config(o, g);
  config.trace = !o.trace.empty();
  const AlgorithmSpec spec = make_algorithm(parse_algorithm_kind(o.algo), config);

  RunReport report;
  if (config.mode == Mode::async) {
    if (o.order.empty()) throw std::invalid_argument("async mode needs --order");
    report = run_async(g, read_order_file(o.order, g), spec, config);
  } else {
    report = run_sync(g, spec, config);
  }
  emit(o.out, out, [&](std::ostream& s) { s << to_json(report, config.timing).dump(2) << '\n'; });
  if (!o.trace.empty()) emit(o.trace, out, [&](std::ostream& s) { write_trace_csv(s, report); });
  if (o.require_converged && !report.converged)
    throw NotConverged("no convergence within " + std::to_string(config.max_sweeps) + " sweeps");
}

struct BenchRow {
  Method method;
  MetricReport metric;
  std::vector<RunReport> runs;  // one per algorithm
};

void cmd_bench(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.input);
  const EngineConfig config = engine_config(o, g);
  const MethodOptions mopts = method_options(o);

  std::vector<Method> methods;
  for (const auto& name : split_list(o.methods)) methods.push_back(parse_method(name));
  std::vector<AlgorithmKind> kinds;
  for (const auto& name : split_list(o.algos)) kinds.push_back(parse_algorithm_kind(name));
  if (methods.empty() || kinds.empty()) throw std::invalid_argument("bench needs at least one method and one algorithm");

  std::vector<BenchRow> rows;
  std::vector<Ordering> orders;
  json skipped = json::array();
  for (Method m : methods) {
    try {
      orders.push_back(compute_order(m, g, mopts));
      rows.push_back({m, evaluate_m(g, orders.back()), std::vector<RunReport>(kinds.size())});
    } catch (const CyclicGraphError& e) {
      skipped.push_back({{"method", to_string(m)}, {"reason", e.what()}});
    }
  }

  std::vector<AlgorithmSpec> specs;
  for (AlgorithmKind k : kinds) specs.push_back(make_algorithm(k, config));

  const auto cells = static_cast<std::int64_t>(rows.size() * kinds.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t c = 0; c < cells; ++c) {
    const std::size_t r = static_cast<std::size_t>(c) / kinds.size();
    const std::size_t a = static_cast<std::size_t>(c) % kinds.size();
    try {
      rows[r].runs[a] = run(g, &orders[r], specs[a], config);
    } catch (...) {
#pragma omp critical
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  std::stable_sort(rows.begin(), rows.end(),
                   [](const BenchRow& a, const BenchRow& b) { return a.metric.m_value < b.metric.m_value; });

  emit(o.out, out, [&](std::ostream& s) {
    s << "method,m_value,ratio";
    for (AlgorithmKind k : kinds) s << ',' << to_string(k) << "_sweeps";
    for (AlgorithmKind k : kinds) s << ',' << to_string(k) << "_time_ms";
    s << '\n' << std::setprecision(6) << std::fixed;
    for (const BenchRow& row : rows) {
      s << to_string(row.method) << ',' << row.metric.m_value << ',' << row.metric.ratio;
      for (const RunReport& r : row.runs) s << ',' << r.changing_sweeps;
      for (const RunReport& r : row.runs) s << ',' << (config.timing ? r.wall_time_ms : 0.0);
      s << '\n';
    }
  });

  json spearman_by_algo = json::object();
  std::vector<double> ms;
  for (const BenchRow& row : rows) ms.push_back(static_cast<double>(row.metric.m_value));
  for (std::size_t a = 0; a < kinds.size(); ++a) {
    std::vector<double> sweeps;
    for (const BenchRow& row : rows) sweeps.push_back(static_cast<double>(row.runs[a].changing_sweeps));
    const double rho = spearman(ms, sweeps);
    spearman_by_algo[to_string(kinds[a])] = std::isnan(rho) ? json(nullptr) : json(rho);
  }
  json row_json = json::array();
  for (const BenchRow& row : rows) {
    json converged = json::object();
    for (std::size_t a = 0; a < kinds.size(); ++a) converged[to_string(kinds[a])] = row.runs[a].converged;
    row_json.push_back({{"method", to_string(row.method)},
                        {"m_value", row.metric.m_value},
                        {"ratio", row.metric.ratio},
                        {"converged", converged}});
  }
  const json summary{{"mode", o.mode},       {"vertices", g.num_vertices()}, {"edges", g.num_edges()},
                     {"rows", row_json},     {"skipped", skipped},           {"spearman", spearman_by_algo}};
  if (!o.summary.empty()) emit(o.summary, out, [&](std::ostream& s) { s << summary.dump(2) << '\n'; });

  if (o.require_converged)
    for (const BenchRow& row : rows)
      for (const RunReport& r : row.runs)
        if (!r.converged) throw NotConverged("a bench cell did not converge");
}

void cmd_oracle(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.input);
  const MethodOptions mopts = method_options(o);
  json result;
  if (o.kind == "m-opt") {
    if (g.num_vertices() > kMaxBestOrderVertices)
      throw SizeGuardError("m-opt is limited to " + std::to_string(kMaxBestOrderVertices) + " vertices");
    const BestOrder best = brute_force_best_order(g);
    const std::uint64_t ours = evaluate_m(g, reorder(g, mopts.gograph)).m_value;
    result = {{"kind", o.kind},
              {"best_order", original_sequence(best.order, g)},
              {"value", best.max_m},
              {"gograph_value", ours},
              {"gap", best.max_m - ours}};
  } else if (o.kind == "rounds-opt") {
    if (g.num_vertices() > kMaxMinRoundsVertices)
      throw SizeGuardError("rounds-opt is limited to " + std::to_string(kMaxMinRoundsVertices) + " vertices");
    EngineConfig config = engine_config(o, g);
    config.mode = Mode::async;
    config.timing = false;
    const AlgorithmSpec spec = make_algorithm(parse_algorithm_kind(o.algo), config);
    const MinRounds best = brute_force_min_rounds(g, spec, config);
    const RunReport ours = run_async(g, reorder(g, mopts.gograph), spec, config);
    result = {{"kind", o.kind},
              {"algo", o.algo},
              {"best_order", original_sequence(best.order, g)},
              {"value", best.rounds},
              {"gograph_value", ours.changing_sweeps},
              {"gograph_converged", ours.converged},
              {"gap", static_cast<std::int64_t>(ours.changing_sweeps) - static_cast<std::int64_t>(best.rounds)}};
  } else {
    throw std::invalid_argument("unknown oracle kind '" + o.kind + "' (expected m-opt|rounds-opt)");
  }
  emit(o.out, out, [&](std::ostream& s) { s << result.dump(2) << '\n'; });
}

void add_engine_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--mode", o.mode, "sync or async")->capture_default_str();
  cmd->add_option("--epsilon", o.epsilon, "convergence threshold for PageRank/PHP")->capture_default_str();
  cmd->add_option("--damping", o.damping, "PageRank damping")->capture_default_str();
  cmd->add_option("--penalty", o.penalty, "PHP penalty")->capture_default_str();
  cmd->add_option("--source", o.source, "source vertex (file id) for SSSP/BFS/PHP")->capture_default_str();
  cmd->add_option("--max-sweeps", o.max_sweeps, "sweep cap")->capture_default_str();
  cmd->add_flag("--no-timing", o.no_timing, "zero all wall-time fields");
  cmd->add_flag("--require-converged", o.require_converged, "exit 4 unless every run converged");
}

void add_method_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--seed", o.seed, "seed for random order and partitioning")->capture_default_str();
  cmd->add_option("--hub-frac", o.hub_frac, "fraction of vertices treated as hubs")->capture_default_str();
  cmd->add_option("--max-part-size", o.max_part_size, "largest partition")->capture_default_str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph processing-order toolkit"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("gen", "generate a synthetic edge list");
  gen->add_option("--model", o.model, "chain|dag|er|ba")->required();
  gen->add_option("--n", o.n, "vertex count")->required();
  gen->add_option("--param", o.param, "dag: edge probability, er: edge count, ba: attachment degree");
  gen->add_option("--seed", o.seed)->capture_default_str();
  gen->add_flag("--weighted", o.weighted, "random integer weights in [1,10]");
  gen->add_option("--out", o.out, "output edge list (default stdout)");

  auto* reorder_cmd = app.add_subcommand("reorder", "compute a processing order");
  reorder_cmd->add_option("--input", o.input)->required();
  reorder_cmd->add_option("--method", o.method, "identity|random|degsort|hubsort|hubcluster|topo|gograph")
      ->capture_default_str();
  add_method_flags(reorder_cmd, o);
  reorder_cmd->add_option("--out", o.out, "order file (default stdout)");
  reorder_cmd->add_option("--summary", o.summary, "JSON summary file (default stdout when --out is a file)");

  auto* metric_cmd = app.add_subcommand("metric", "count positive edges of an order");
  metric_cmd->add_option("--input", o.input)->required();
  metric_cmd->add_option("--order", o.order, "order file (default identity)");
  metric_cmd->add_option("--out", o.out);

  auto* run_cmd = app.add_subcommand("run", "run an iterative algorithm");
  run_cmd->add_option("--input", o.input)->required();
  run_cmd->add_option("--order", o.order, "order file, required for async");
  run_cmd->add_option("--algo", o.algo, "pagerank|sssp|bfs|php")->capture_default_str();
  add_engine_flags(run_cmd, o);
  run_cmd->add_option("--trace", o.trace, "per-sweep CSV trace file");
  run_cmd->add_option("--out", o.out, "JSON report (default stdout)");

  auto* bench_cmd = app.add_subcommand("bench", "methods x algorithms matrix");
  bench_cmd->add_option("--input", o.input)->required();
  bench_cmd->add_option("--method,--methods", o.methods, "comma-separated methods")->capture_default_str();
  bench_cmd->add_option("--algo,--algos", o.algos, "comma-separated algorithms")->capture_default_str();
  add_engine_flags(bench_cmd, o);
  add_method_flags(bench_cmd, o);
  bench_cmd->add_option("--out", o.out, "CSV matrix (default stdout)");
  bench_cmd->add_option("--summary", o.summary, "JSON summary with rank correlations");

  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive optimum on a tiny graph");
  oracle_cmd->add_option("--input", o.input)->required();
  oracle_cmd->add_option("--kind", o.kind, "m-opt|rounds-opt")->capture_default_str();
  oracle_cmd->add_option("--algo", o.algo, "algorithm for rounds-opt")->capture_default_str();
  add_engine_flags(oracle_cmd, o);
  add_method_flags(oracle_cmd, o);
  oracle_cmd->add_option("--out", o.out);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) cmd_gen(o, out);
    else if (*reorder_cmd) cmd_reorder(o, out);
    else if (*metric_cmd) cmd_metric(o, out);
    else if (*run_cmd) cmd_run(o, out);
    else if (*bench_cmd) cmd_bench(o, out);
    else if (*oracle_cmd) cmd_oracle(o, out);
    return kExitOk;
  } catch (const SizeGuardError& e) {
    err << "error: " << e.what() << '\n';
    return kExitGuard;
  } catch (const CyclicGraphError& e) {
    err << "error: " << e.what() << '\n';
    return kExitGuard;
  } catch (const NotConverged& e) {
    err << "error: " << e.what() << '\n';
    return kExitNotConverged;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace gograph
