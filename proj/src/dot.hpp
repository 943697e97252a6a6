#pragma once

#include <optional>
#include <string>

#include "graph.hpp"

namespace softgraph {

struct DotOptions {
  bool label_edges = true;
  // When set, vertices carrying this artifact type are grouped in a cluster.
  std::optional<std::string> cluster_by;
};

// Renders g as a DOT digraph: nodes named by vertex id, node labels
// "id\n{types}", edge labels the trace type when label_edges is on. Output
// ordering is canonical, so equal graphs render byte-identically.
std::string export_dot(const SoftwareGraph& g, const DotOptions& options = {});

}  // namespace softgraph
