#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "graph.hpp"

namespace softgraph {

// A named real-valued measurement. Coverage-style values lie in [0, 1];
// count-style values are non-negative integers held exactly. details carries
// witness or violating vertex ids (uncovered targets for coverage, the
// reached set for reachability). vacuous flags a coverage computed over zero
// targets, which reports 1.0 by convention.
struct MetricResult {
  std::string name;
  double value = 0.0;
  std::string scope = "graph";  // "graph" or a vertex id
  std::vector<std::string> details;
  bool vacuous = false;

  bool operator==(const MetricResult&) const = default;
};

// Number of vertices labeled with the artifact type. A vertex with several
// labels counts once per matching type queried.
MetricResult count_by_type(const SoftwareGraph& g, const std::string& artifact_type);

// Distinct neighbor count of v along matching edges; the witness neighbors
// are not recorded, only counted.
MetricResult coupling(const SoftwareGraph& g, const std::string& vertex,
                      Direction dir, const TypeFilter& attr_filter = std::nullopt,
                      const TypeFilter& trace_filter = std::nullopt);

// All vertices reachable from any source along directed paths whose every
// edge passes the trace filter. Sources are included (length-0 paths).
std::set<std::string> reachable_from(const SoftwareGraph& g,
                                     const std::set<std::string>& sources,
                                     const TypeFilter& trace_filter = std::nullopt);

// The distinguished coverage target selecting every vertex that does NOT
// carry the source type.
inline constexpr const char* kAllOthers = "all_others";

// Fraction of target-typed vertices reachable from at least one source-typed
// vertex. details lists the uncovered targets; zero targets report 1.0 with
// the vacuous flag set.
MetricResult coverage(const SoftwareGraph& g, const std::string& source_type,
                      const std::string& target_type,
                      const TypeFilter& trace_filter = std::nullopt);

// Names the catalog understood by evaluate_metric.
const std::vector<std::string>& metric_catalog();

// Dispatches a catalog metric by name with string-valued named arguments:
//   count_by_type:  type
//   coupling:       vertex, direction, artifacts?, traces?
//   coverage:       source, target, traces?
//   reachable_from: sources, traces?
// List-valued arguments are comma-separated. Unknown names or malformed
// arguments throw.
MetricResult evaluate_metric(const SoftwareGraph& g, const std::string& name,
                             const std::map<std::string, std::string>& args);

}  // namespace softgraph
