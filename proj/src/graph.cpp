#include "gograph/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "gograph/errors.hpp"

namespace gograph {
namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && !(line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

std::uint64_t parse_id(std::string_view tok, std::size_t line_no) {
  if (!tok.empty() && tok.front() == '-') throw ParseError(line_no, "negative vertex id '" + std::string(tok) + "'");
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line_no, "invalid vertex id '" + std::string(tok) + "'");
  return value;
}

double parse_weight(std::string_view tok, std::size_t line_no) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line_no, "invalid weight '" + std::string(tok) + "'");
  if (!std::isfinite(value) || value <= 0.0)
    throw ParseError(line_no, "weight must be finite and positive, got '" + std::string(tok) + "'");
  return value;
}

void sort_adjacency(std::vector<std::size_t>& offsets, std::vector<Arc>& arcs) {
  for (std::size_t v = 0; v + 1 < offsets.size(); ++v) {
    std::sort(arcs.begin() + static_cast<std::ptrdiff_t>(offsets[v]),
              arcs.begin() + static_cast<std::ptrdiff_t>(offsets[v + 1]),
              [](const Arc& a, const Arc& b) { return a.vertex != b.vertex ? a.vertex < b.vertex : a.weight < b.weight; });
  }
}

}  // namespace

EdgeList parse_edge_list(std::istream& in, const ParseOptions& options) {
  EdgeList list;
  std::unordered_map<std::uint64_t, VertexId> dense;
  auto densify = [&](std::uint64_t id) {
    auto [it, inserted] = dense.try_emplace(id, static_cast<VertexId>(list.original_ids.size()));
    if (inserted) list.original_ids.push_back(id);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    auto first = view.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    if (view[first] == '#') {
      if (!options.allow_comments) throw ParseError(line_no, "comment lines are not allowed");
      continue;
    }
    auto fields = split_fields(view);
    if (fields.size() != 2 && fields.size() != 3)
      throw ParseError(line_no, "expected 'u v' or 'u v w', got " + std::to_string(fields.size()) + " fields");
    std::uint64_t u = parse_id(fields[0], line_no);
    std::uint64_t v = parse_id(fields[1], line_no);
    double w = options.default_weight;
    if (fields.size() == 3) {
      w = parse_weight(fields[2], line_no);
      list.weighted = true;
    }
    VertexId du = densify(u);
    VertexId dv = densify(v);
    list.edges.push_back({du, dv, w});
  }
  if (in.bad()) throw ParseError(0, "read failure");
  list.num_vertices = list.original_ids.size();
  return list;
}

EdgeList parse_edge_list_file(const std::string& path, const ParseOptions& options) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return parse_edge_list(in, options);
}

Graph build_graph(const EdgeList& list) {
  Graph g;
  const std::size_t n = list.num_vertices;
  g.weighted_ = list.weighted;
  if (list.original_ids.empty()) {
    g.original_ids_.resize(n);
    for (std::size_t v = 0; v < n; ++v) g.original_ids_[v] = v;
  } else {
    g.original_ids_ = list.original_ids;
  }

  g.out_offsets_.assign(n + 1, 0);
  g.in_offsets_.assign(n + 1, 0);
  for (const Edge& e : list.edges) {
    ++g.out_offsets_[e.src + 1];
    ++g.in_offsets_[e.dst + 1];
  }
  for (std::size_t v = 0; v < n; ++v) {
    g.out_offsets_[v + 1] += g.out_offsets_[v];
    g.in_offsets_[v + 1] += g.in_offsets_[v];
  }
  g.out_arcs_.resize(list.edges.size());
  g.in_arcs_.resize(list.edges.size());
  std::vector<std::size_t> out_fill(g.out_offsets_.begin(), g.out_offsets_.end() - 1);
  std::vector<std::size_t> in_fill(g.in_offsets_.begin(), g.in_offsets_.end() - 1);
  for (const Edge& e : list.edges) {
    g.out_arcs_[out_fill[e.src]++] = {e.dst, e.weight};
    g.in_arcs_[in_fill[e.dst]++] = {e.src, e.weight};
  }
  sort_adjacency(g.out_offsets_, g.out_arcs_);
  sort_adjacency(g.in_offsets_, g.in_arcs_);
  return g;
}

Graph load_graph(const std::string& path, const ParseOptions& options) {
  return build_graph(parse_edge_list_file(path, options));
}

Graph make_graph(std::size_t n, const std::vector<Edge>& edges) {
  EdgeList list;
  list.num_vertices = n;
  list.edges = edges;
  list.weighted = std::any_of(edges.begin(), edges.end(), [](const Edge& e) { return e.weight != 1.0; });
  return build_graph(list);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> result;
  result.reserve(num_edges());
  for (VertexId u = 0; u < num_vertices(); ++u)
    for (const Arc& a : out(u)) result.push_back({u, a.vertex, a.weight});
  return result;
}

DegreeStats degree_stats(const Graph& g) {
  DegreeStats s;
  const std::size_t n = g.num_vertices();
  s.in_degree.resize(n);
  s.out_degree.resize(n);
  s.total_degree.resize(n);
  std::size_t sum = 0;
  for (VertexId v = 0; v < n; ++v) {
    s.in_degree[v] = g.in_degree(v);
    s.out_degree[v] = g.out_degree(v);
    s.total_degree[v] = s.in_degree[v] + s.out_degree[v];
    s.max_degree = std::max(s.max_degree, s.total_degree[v]);
    sum += s.total_degree[v];
  }
  s.mean_degree = n ? static_cast<double>(sum) / static_cast<double>(n) : 0.0;
  return s;
}

Subgraph induced_subgraph(const Graph& g, std::span<const VertexId> keep) {
  constexpr VertexId kAbsent = ~VertexId{0};
  std::vector<VertexId> local(g.num_vertices(), kAbsent);
  Subgraph sub;
  sub.to_parent.assign(keep.begin(), keep.end());
  EdgeList list;
  list.num_vertices = keep.size();
  list.weighted = g.weighted();
  list.original_ids.reserve(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    local[keep[i]] = static_cast<VertexId>(i);
    list.original_ids.push_back(g.original_id(keep[i]));
  }
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (const Arc& a : g.out(keep[i])) {
      if (local[a.vertex] != kAbsent) list.edges.push_back({static_cast<VertexId>(i), local[a.vertex], a.weight});
    }
  }
  sub.graph = build_graph(list);
  return sub;
}

Subgraph subgraph_without(const Graph& g, std::span<const VertexId> removed) {
  std::vector<char> drop(g.num_vertices(), 0);
  for (VertexId v : removed) drop.at(v) = 1;
  std::vector<VertexId> keep;
  keep.reserve(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (!drop[v]) keep.push_back(v);
  return induced_subgraph(g, keep);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  char buf[64];
  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    for (const Arc& a : g.out(u)) {
      auto res = std::to_chars(buf, buf + sizeof buf, a.weight);
      out << g.original_id(u) << ' ' << g.original_id(a.vertex) << ' ' << std::string_view(buf, res.ptr - buf) << '\n';
    }
  }
}

}  // namespace gograph
