#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace softgraph {

// Canonical type names: [a-z][a-z0-9_-]*. Multi-word names are written with
// underscores (unit_test, depend_on).
bool is_canonical_type_name(std::string_view name);

// Vertex ids are caller-chosen tokens; the charset keeps every id
// representable in the text interchange format and in DOT output.
bool is_valid_vertex_id(std::string_view id);

// The two type sets a graph draws its labels from: artifact types annotate
// vertices, trace types annotate edges.
struct TypeDictionary {
  std::set<std::string> artifact_types;
  std::set<std::string> trace_types;

  bool operator==(const TypeDictionary&) const = default;

  bool has_artifact_type(std::string_view t) const {
    return artifact_types.count(std::string(t)) != 0;
  }
  bool has_trace_type(std::string_view t) const {
    return trace_types.count(std::string(t)) != 0;
  }
};

// Checked construction: both sets non-empty, every name canonical, no
// duplicates in the input lists. Throws Error on violation.
TypeDictionary make_dictionary(const std::vector<std::string>& artifact_types,
                               const std::vector<std::string>& trace_types);

// Enforces the TypeDictionary invariants on an already-built value.
void check_dictionary(const TypeDictionary& dict);

// Built-in dictionary covering the common software and software-process
// artifact kinds and the dependency kinds traced between them.
const TypeDictionary& default_dictionary();

}  // namespace softgraph
