#include "gograph/methods.hpp"

#include <stdexcept>

#include "gograph/baselines.hpp"

namespace gograph {

Method parse_method(std::string_view name) {
  for (Method m : all_methods())
    if (to_string(m) == name) return m;
  throw std::invalid_argument("unknown method '" + std::string(name) +
                              "' (expected identity|random|degsort|hubsort|hubcluster|topo|gograph)");
}

std::string to_string(Method method) {
  switch (method) {
    case Method::identity: return "identity";
    case Method::random: return "random";
    case Method::degsort: return "degsort";
    case Method::hubsort: return "hubsort";
    case Method::hubcluster: return "hubcluster";
    case Method::topo: return "topo";
    case Method::gograph: return "gograph";
  }
  return "unknown";
}

const std::vector<Method>& all_methods() {
  static const std::vector<Method> methods{Method::identity, Method::random,  Method::degsort, Method::hubsort,
                                           Method::hubcluster, Method::topo, Method::gograph};
  return methods;
}

Ordering compute_order(Method method, const Graph& g, const MethodOptions& options, PipelineReport* pipeline) {
  switch (method) {
    case Method::identity: return identity_order(g);
    case Method::random: return random_order(g, options.seed);
    case Method::degsort: return degree_sort_order(g);
    case Method::hubsort: return hub_sort_order(g);
    case Method::hubcluster: return hub_cluster_order(g);
    case Method::topo: return topological_order(g);
    case Method::gograph: {
      ReorderResult result = reorder_with_report(g, options.gograph);
      if (pipeline) *pipeline = std::move(result.report);
      return std::move(result.order);
    }
  }
  throw std::invalid_argument("unknown method");
}

}  // namespace gograph
