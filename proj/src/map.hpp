#pragma once

#include <map>
#include <string>
#include <utility>

#include "graph.hpp"

namespace softgraph {

// Edge-wise trace renaming: every edge whose trace is a key becomes an edge
// of the mapped trace. Targets may be new to the dictionary.
using RelabelMap = std::map<std::string, std::string>;

// Pairwise composition rules: (trace of u->v, trace of v->w) -> trace of a
// derived u->w edge. Result types may be new to the dictionary.
using CompositionMap =
    std::map<std::pair<std::string, std::string>, std::string>;

// Renames edge traces per the map. Collisions merge under set semantics, so
// the edge count never grows. Vertices and labels are untouched; mapped-to
// traces are added to the result dictionary when absent. Throws UnknownType
// when a key names a trace outside g's dictionary.
SoftwareGraph relabel(const SoftwareGraph& g, const RelabelMap& relabels);

// Smallest edge superset of g closed under the composition rules: whenever
// (u, x, v) and (v, y, w) are edges and rules(x, y) = z, the edge (u, z, w)
// is present too. Original edges are kept. Edges only accumulate, bounded by
// |V|^2 * |T|, so the fixpoint terminates. Throws UnknownType when a rule's
// operand names a trace outside g's dictionary.
SoftwareGraph compose_closure(const SoftwareGraph& g,
                              const CompositionMap& rules);

// The classical class abstraction: containment and return traces collapse to
// "depend", depend chains close transitively, and the result is restricted to
// class vertices and depend edges. Class-to-class dependencies that pass
// through non-class vertices in g survive the restriction.
SoftwareGraph class_diagram(const SoftwareGraph& g);

}  // namespace softgraph
