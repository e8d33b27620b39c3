#include "gograph/ordering.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <unordered_map>

#include "gograph/errors.hpp"

namespace gograph {

Ordering Ordering::from_sequence(std::vector<VertexId> seq) {
  Ordering o;
  constexpr std::size_t kUnset = ~std::size_t{0};
  o.pos_.assign(seq.size(), kUnset);
  for (std::size_t i = 0; i < seq.size(); ++i) {
    VertexId v = seq[i];
    if (v >= seq.size()) throw std::invalid_argument("order entry " + std::to_string(v) + " out of range");
    if (o.pos_[v] != kUnset) throw std::invalid_argument("vertex " + std::to_string(v) + " appears twice in order");
    o.pos_[v] = i;
  }
  o.seq_ = std::move(seq);
  return o;
}

Ordering Ordering::identity(std::size_t n) {
  std::vector<VertexId> seq(n);
  for (std::size_t i = 0; i < n; ++i) seq[i] = static_cast<VertexId>(i);
  return from_sequence(std::move(seq));
}

Ordering Ordering::reversed() const {
  return from_sequence(std::vector<VertexId>(seq_.rbegin(), seq_.rend()));
}

void write_order(std::ostream& out, const Ordering& order, const Graph& g) {
  if (order.size() != g.num_vertices()) throw std::invalid_argument("order does not cover graph");
  for (VertexId v : order.seq()) out << g.original_id(v) << '\n';
}

Ordering read_order(std::istream& in, const Graph& g) {
  std::unordered_map<std::uint64_t, VertexId> dense;
  dense.reserve(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) dense.emplace(g.original_id(v), v);

  std::vector<VertexId> seq;
  seq.reserve(g.num_vertices());
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto last = line.find_last_not_of(" \t\r");
    std::string_view tok(line.data() + first, last - first + 1);
    std::uint64_t id = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), id);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      throw ParseError(line_no, "invalid vertex id '" + std::string(tok) + "' in order file");
    auto it = dense.find(id);
    if (it == dense.end()) throw ParseError(line_no, "order names unknown vertex " + std::to_string(id));
    seq.push_back(it->second);
  }
  if (seq.size() != g.num_vertices())
    throw ParseError(0, "order has " + std::to_string(seq.size()) + " entries, graph has " +
                            std::to_string(g.num_vertices()) + " vertices");
  try {
    return Ordering::from_sequence(std::move(seq));
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

Ordering read_order_file(const std::string& path, const Graph& g) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return read_order(in, g);
}

}  // namespace gograph
