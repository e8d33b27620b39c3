#include "gograph/report.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <string>

namespace gograph {
namespace {

json number(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json numbers(const std::vector<double>& xs) {
  json arr = json::array();
  for (double x : xs) arr.push_back(number(x));
  return arr;
}

std::string csv_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

}  // namespace

json to_json(const MetricReport& r) {
  return json{{"m_value", r.m_value},
              {"positive", r.positive},
              {"negative", r.negative},
              {"skipped_self_loops", r.skipped_self_loops},
              {"edges_considered", r.edges_considered},
              {"ratio", r.ratio}};
}

MetricReport metric_report_from_json(const json& j) {
  MetricReport r;
  r.m_value = j.at("m_value").get<std::uint64_t>();
  r.positive = j.at("positive").get<std::uint64_t>();
  r.negative = j.at("negative").get<std::uint64_t>();
  r.skipped_self_loops = j.at("skipped_self_loops").get<std::uint64_t>();
  r.edges_considered = j.at("edges_considered").get<std::uint64_t>();
  r.ratio = j.at("ratio").get<double>();
  return r;
}

json to_json(const RunReport& r, bool include_timing) {
  json j{{"changing_sweeps", r.changing_sweeps},
         {"total_sweeps", r.total_sweeps},
         {"converged", r.converged},
         {"final_states", numbers(r.final_states)},
         {"residual_trace", numbers(r.residual_trace)},
         {"dist_trace", numbers(r.dist_trace)}};
  j["wall_time"] = include_timing ? r.wall_time_ms : 0.0;
  return j;
}

json to_json(const PipelineReport& r) {
  return json{{"hub_count", r.hub_count},       {"isolated_count", r.isolated_count},
              {"part_count", r.part_count},     {"m_intra", r.m_intra},
              {"m_inter", r.m_inter},           {"m_hub", r.m_hub},
              {"m_isolated", r.m_isolated},     {"m_total", r.m_total},
              {"reranks", r.reranks}};
}

void write_trace_csv(std::ostream& out, const RunReport& r) {
  out << "sweep,residual,dist,time_ms\n";
  for (std::size_t t = 0; t < r.residual_trace.size(); ++t) {
    out << (t + 1) << ',' << csv_number(r.residual_trace[t]) << ',';
    if (t < r.dist_trace.size()) out << csv_number(r.dist_trace[t]);
    out << ',' << (t < r.sweep_time_trace.size() ? csv_number(r.sweep_time_trace[t]) : "0") << '\n';
  }
}

}  // namespace gograph
