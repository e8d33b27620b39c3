#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gograph/gograph.hpp"
#include "gograph/graph.hpp"
#include "gograph/ordering.hpp"

namespace gograph {

enum class Method { identity, random, degsort, hubsort, hubcluster, topo, gograph };

Method parse_method(std::string_view name);  // throws std::invalid_argument
std::string to_string(Method method);
const std::vector<Method>& all_methods();

struct MethodOptions {
  std::uint64_t seed = 0;
  GoGraphConfig gograph;
};

// Throws CyclicGraphError for topo on a cyclic graph.
Ordering compute_order(Method method, const Graph& g, const MethodOptions& options = {},
                       PipelineReport* pipeline = nullptr);

}  // namespace gograph
