#include "graph.hpp"

#include "error.hpp"

namespace softgraph {

namespace {

void check_filter_types(const TypeFilter& filter,
                        const std::set<std::string>& known, const char* kind) {
  if (!filter) return;
  for (const auto& t : *filter) {
    if (known.count(t) == 0) {
      throw Error(ErrorCode::UnknownType,
                  std::string("unknown ") + kind + " type '" + t + "' in filter");
    }
  }
}

bool passes(const TypeFilter& filter, const std::string& value) {
  return !filter || filter->count(value) != 0;
}

bool intersects(const TypeFilter& filter, const std::set<std::string>& values) {
  if (!filter) return true;
  for (const auto& v : values) {
    if (filter->count(v) != 0) return true;
  }
  return false;
}

}  // namespace

std::optional<Direction> direction_from_string(std::string_view s) {
  if (s == "out") return Direction::Out;
  if (s == "in") return Direction::In;
  if (s == "both") return Direction::Both;
  return std::nullopt;
}

std::string_view to_string(Direction d) {
  switch (d) {
    case Direction::Out: return "out";
    case Direction::In: return "in";
    case Direction::Both: return "both";
  }
  return "out";
}

SoftwareGraph SoftwareGraph::from_parts(
    TypeDictionary dict, std::map<std::string, std::set<std::string>> labels,
    std::set<Edge> edges) {
  SoftwareGraph g(std::move(dict));
  g.labels_ = std::move(labels);
  g.edges_ = std::move(edges);
  return g;
}

void SoftwareGraph::add_vertex(const std::string& id,
                               const std::set<std::string>& attrs) {
  if (!is_valid_vertex_id(id)) {
    throw Error(ErrorCode::InvalidArgument,
                "invalid vertex id '" + id + "' ([A-Za-z0-9_.-]+ required)");
  }
  if (labels_.count(id) != 0) {
    throw Error(ErrorCode::Duplicate, "duplicate vertex id '" + id + "'");
  }
  if (attrs.empty()) {
    throw Error(ErrorCode::InvalidArgument,
                "vertex '" + id + "' needs at least one artifact type");
  }
  for (const auto& a : attrs) {
    if (!dict_.has_artifact_type(a)) {
      throw Error(ErrorCode::UnknownType,
                  "unknown artifact type '" + a + "' on vertex '" + id + "'");
    }
  }
  labels_.emplace(id, attrs);
}

void SoftwareGraph::add_edge(const std::string& src, const std::string& trace,
                             const std::string& dst) {
  if (labels_.count(src) == 0) {
    throw Error(ErrorCode::NotFound, "unknown endpoint '" + src + "'");
  }
  if (labels_.count(dst) == 0) {
    throw Error(ErrorCode::NotFound, "unknown endpoint '" + dst + "'");
  }
  if (!dict_.has_trace_type(trace)) {
    throw Error(ErrorCode::UnknownType, "unknown trace type '" + trace + "'");
  }
  edges_.insert(Edge{src, trace, dst});
}

const std::set<std::string>& SoftwareGraph::labels_of(
    const std::string& id) const {
  auto it = labels_.find(id);
  if (it == labels_.end()) {
    throw Error(ErrorCode::NotFound, "unknown vertex '" + id + "'");
  }
  return it->second;
}

std::set<std::string> SoftwareGraph::neighbors(
    const std::string& v, Direction dir, const TypeFilter& trace_filter,
    const TypeFilter& attr_filter) const {
  if (labels_.count(v) == 0) {
    throw Error(ErrorCode::NotFound, "unknown vertex '" + v + "'");
  }
  check_filter_types(trace_filter, dict_.trace_types, "trace");
  check_filter_types(attr_filter, dict_.artifact_types, "artifact");

  std::set<std::string> result;
  auto consider = [&](const std::string& candidate) {
    auto it = labels_.find(candidate);
    const std::set<std::string> no_labels;
    const auto& candidate_labels = it == labels_.end() ? no_labels : it->second;
    if (intersects(attr_filter, candidate_labels)) result.insert(candidate);
  };
  for (const auto& e : edges_) {
    if (!passes(trace_filter, e.trace)) continue;
    if ((dir == Direction::Out || dir == Direction::Both) && e.src == v) {
      consider(e.dst);
    }
    if ((dir == Direction::In || dir == Direction::Both) && e.dst == v) {
      consider(e.src);
    }
  }
  return result;
}

SoftwareGraph new_graph(const TypeDictionary& dict) {
  check_dictionary(dict);
  return SoftwareGraph(dict);
}

std::vector<std::string> validate(const SoftwareGraph& g) {
  std::vector<std::string> violations;
  const auto& dict = g.dict();
  for (const auto& [id, attrs] : g.labels()) {
    if (attrs.empty()) {
      violations.push_back("unlabeled vertex '" + id + "'");
    }
    for (const auto& a : attrs) {
      if (!dict.has_artifact_type(a)) {
        violations.push_back("unknown artifact type '" + a + "' on vertex '" +
                             id + "'");
      }
    }
  }
  for (const auto& e : g.edges()) {
    const std::string where =
        " in edge (" + e.src + ", " + e.trace + ", " + e.dst + ")";
    if (!g.has_vertex(e.src)) {
      violations.push_back("unknown endpoint '" + e.src + "'" + where);
    }
    if (!g.has_vertex(e.dst)) {
      violations.push_back("unknown endpoint '" + e.dst + "'" + where);
    }
    if (!dict.has_trace_type(e.trace)) {
      violations.push_back("unknown trace type '" + e.trace + "'" + where);
    }
  }
  return violations;
}

}  // namespace softgraph
