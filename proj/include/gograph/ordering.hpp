#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "gograph/graph.hpp"

namespace gograph {

// A processing order: seq()[i] is the vertex handled in slot i and
// position(v) is its ordinal number. Always a bijection over 0..n-1.
class Ordering {
public:
  Ordering() = default;

  // Throws std::invalid_argument unless `seq` is a permutation of 0..n-1.
  static Ordering from_sequence(std::vector<VertexId> seq);
  static Ordering identity(std::size_t n);

  std::size_t size() const noexcept { return seq_.size(); }
  bool empty() const noexcept { return seq_.empty(); }
  std::span<const VertexId> seq() const noexcept { return seq_; }
  std::span<const std::size_t> positions() const noexcept { return pos_; }
  VertexId at(std::size_t slot) const { return seq_.at(slot); }
  std::size_t position(VertexId v) const { return pos_.at(v); }

  Ordering reversed() const;

  friend bool operator==(const Ordering& a, const Ordering& b) { return a.seq_ == b.seq_; }

private:
  std::vector<VertexId> seq_;
  std::vector<std::size_t> pos_;
};

inline Ordering reverse(const Ordering& o) { return o.reversed(); }

// Order file: one original vertex id per line, line i = slot i.
void write_order(std::ostream& out, const Ordering& order, const Graph& g);
Ordering read_order(std::istream& in, const Graph& g);
Ordering read_order_file(const std::string& path, const Graph& g);

}  // namespace gograph
