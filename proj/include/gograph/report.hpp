#pragma once

#include <iosfwd>

#include "json.hpp"

#include "gograph/engine.hpp"
#include "gograph/gograph.hpp"
#include "gograph/metric.hpp"

namespace gograph {

using json = nlohmann::ordered_json;

// Field names match the struct members. Non-finite doubles become null.
json to_json(const MetricReport& r);
json to_json(const RunReport& r, bool include_timing = true);
json to_json(const PipelineReport& r);

MetricReport metric_report_from_json(const json& j);

// CSV rows "sweep,residual,dist,time_ms"; dist is empty without a dist trace.
void write_trace_csv(std::ostream& out, const RunReport& r);

}  // namespace gograph
