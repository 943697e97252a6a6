#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <utility>

#include "graph.hpp"

namespace softgraph {

// The artifact/trace type subsets a view restricts a graph to. Empty subsets
// are legal and empty out that dimension of the view.
struct ViewSpec {
  std::set<std::string> artifact_types;
  std::set<std::string> trace_types;
};

// Restricts g to the vertices carrying at least one label of the chosen
// artifact types, the labels of those types, and the edges of the chosen
// trace types between surviving vertices. The result's dictionary is narrowed
// to exactly the spec. Throws UnknownType if the spec names a type outside
// g's dictionary.
SoftwareGraph view(const SoftwareGraph& g, const ViewSpec& spec);

// (vertex count, edge count) of view(g, spec) without keeping the view.
std::pair<std::size_t, std::size_t> view_stats(const SoftwareGraph& g,
                                               const ViewSpec& spec);

}  // namespace softgraph
