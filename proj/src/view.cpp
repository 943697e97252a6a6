#include "view.hpp"

#include "error.hpp"

namespace softgraph {

namespace {

void check_spec(const SoftwareGraph& g, const ViewSpec& spec) {
  for (const auto& a : spec.artifact_types) {
    if (!g.dict().has_artifact_type(a)) {
      throw Error(ErrorCode::UnknownType,
                  "unknown artifact type '" + a + "' in view spec");
    }
  }
  for (const auto& t : spec.trace_types) {
    if (!g.dict().has_trace_type(t)) {
      throw Error(ErrorCode::UnknownType,
                  "unknown trace type '" + t + "' in view spec");
    }
  }
}

}  // namespace

SoftwareGraph view(const SoftwareGraph& g, const ViewSpec& spec) {
  check_spec(g, spec);

  std::map<std::string, std::set<std::string>> labels;
  for (const auto& [id, attrs] : g.labels()) {
    std::set<std::string> kept;
    for (const auto& a : attrs) {
      if (spec.artifact_types.count(a) != 0) kept.insert(a);
    }
    if (!kept.empty()) labels.emplace(id, std::move(kept));
  }

  std::set<Edge> edges;
  for (const auto& e : g.edges()) {
    if (spec.trace_types.count(e.trace) != 0 && labels.count(e.src) != 0 &&
        labels.count(e.dst) != 0) {
      edges.insert(e);
    }
  }

  return SoftwareGraph::from_parts(
      TypeDictionary{spec.artifact_types, spec.trace_types}, std::move(labels),
      std::move(edges));
}

std::pair<std::size_t, std::size_t> view_stats(const SoftwareGraph& g,
                                               const ViewSpec& spec) {
  SoftwareGraph v = view(g, spec);
  return {v.vertex_count(), v.edge_count()};
}

}  // namespace softgraph
