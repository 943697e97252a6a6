#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace softgraph {

// Line-oriented interchange format (.sg), UTF-8, '#' starts a comment:
//   artifact-type IDENT            optional header: extend the artifact types
//   trace-type IDENT               optional header: extend the trace types
//   vertex ID TYPE [TYPE ...]      vertex with at least one label
//   edge SRC TRACE DST             directed edge
// The dictionary is the default one extended by the header lines. Forward
// references within one document are fine; loading is two-pass.

// Strict reader: any syntax problem, unknown type, dangling endpoint or
// duplicate vertex id throws ParseError with a 1-based line number.
SoftwareGraph parse_graph_text(std::string_view text);

// Lenient reader for diagnostics: syntax problems still throw, but semantic
// problems (unknown types, dangling endpoints, duplicate ids, unlabeled
// vertices) become violation strings and the offending data is kept in the
// graph as written, so validate() sees the same picture.
struct LenientParse {
  SoftwareGraph graph;
  std::vector<std::string> violations;
};
LenientParse parse_graph_text_lenient(std::string_view text);

// Canonical serialization: header lines for the dictionary types beyond the
// defaults, then vertices sorted by id (labels sorted), then edges sorted by
// (src, trace, dst). Byte-deterministic for a given graph, and
// parse_graph_text inverts it for any graph whose dictionary extends the
// default one.
std::string serialize_graph(const SoftwareGraph& g);

}  // namespace softgraph
