#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "dictionary.hpp"

namespace softgraph {

// A typed directed edge. Ordering is the canonical (src, trace, dst) sort
// used everywhere edges are serialized or compared.
struct Edge {
  std::string src;
  std::string trace;
  std::string dst;

  auto operator<=>(const Edge&) const = default;
};

enum class Direction { Out, In, Both };

std::optional<Direction> direction_from_string(std::string_view s);
std::string_view to_string(Direction d);

// std::nullopt means "no filter"; an empty set is a filter nothing passes.
using TypeFilter = std::optional<std::set<std::string>>;

// The software graph: vertices for artifacts, a vertex-to-artifact-type label
// relation (a vertex may carry several labels), and a set of typed directed
// edges. At most one edge per (src, trace, dst) triple; parallel edges between
// the same vertices differ in trace type. Mutation is single-writer; a built
// graph is treated as an immutable value by every analysis.
class SoftwareGraph {
 public:
  SoftwareGraph() : dict_(default_dictionary()) {}

  // Binds the dictionary without checking it; use new_graph() for the
  // checked entry point. Restricted views rely on this to carry narrowed
  // (possibly empty) dictionaries.
  explicit SoftwareGraph(TypeDictionary dict) : dict_(std::move(dict)) {}

  // Assembles a graph from raw parts with no invariant enforcement. This is
  // how deserialized input that may violate the model enters the system;
  // validate() reports the violations.
  static SoftwareGraph from_parts(TypeDictionary dict,
                                  std::map<std::string, std::set<std::string>> labels,
                                  std::set<Edge> edges);

  // Throws: Duplicate (id taken), InvalidArgument (bad id, no attrs),
  // UnknownType (attr outside the dictionary).
  void add_vertex(const std::string& id, const std::set<std::string>& attrs);

  // Set semantics: re-adding an existing triple is a no-op. Throws NotFound
  // for missing endpoints, UnknownType for a trace outside the dictionary.
  void add_edge(const std::string& src, const std::string& trace,
                const std::string& dst);

  const TypeDictionary& dict() const { return dict_; }
  std::size_t vertex_count() const { return labels_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  bool has_vertex(const std::string& id) const { return labels_.count(id) != 0; }

  // Vertex id -> label set, ordered by id.
  const std::map<std::string, std::set<std::string>>& labels() const {
    return labels_;
  }
  // Throws NotFound for an unknown id.
  const std::set<std::string>& labels_of(const std::string& id) const;

  const std::set<Edge>& edges() const { return edges_; }

  // Distinct vertices adjacent to v along edges that match the direction and
  // trace filter, restricted to neighbors whose label set intersects the
  // attribute filter. v itself appears only via a self-loop.
  std::set<std::string> neighbors(const std::string& v, Direction dir,
                                  const TypeFilter& trace_filter = std::nullopt,
                                  const TypeFilter& attr_filter = std::nullopt) const;

  bool operator==(const SoftwareGraph&) const = default;

 private:
  TypeDictionary dict_;
  std::map<std::string, std::set<std::string>> labels_;
  std::set<Edge> edges_;
};

// Checked constructor for an empty graph: enforces the dictionary invariants.
SoftwareGraph new_graph(const TypeDictionary& dict);

// Scans a graph for model violations: dangling edge endpoints, unlabeled
// vertices, labels or traces outside the dictionary. Graphs built through the
// mutation operations always come back clean; graphs assembled from raw input
// may not. Violations are data, not failures.
std::vector<std::string> validate(const SoftwareGraph& g);

}  // namespace softgraph
