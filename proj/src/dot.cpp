#include "dot.hpp"

#include "error.hpp"

namespace softgraph {

namespace {

std::string escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string node_statement(const std::string& id,
                           const std::set<std::string>& attrs) {
  std::string label = escape(id) + "\\n{";
  bool first = true;
  for (const auto& a : attrs) {
    if (!first) label += ',';
    label += escape(a);
    first = false;
  }
  label += '}';
  return "\"" + escape(id) + "\" [label=\"" + label + "\"];\n";
}

}  // namespace

std::string export_dot(const SoftwareGraph& g, const DotOptions& options) {
  if (options.cluster_by && !g.dict().has_artifact_type(*options.cluster_by)) {
    throw Error(ErrorCode::UnknownType,
                "unknown artifact type '" + *options.cluster_by + "' for cluster");
  }

  std::string out = "digraph softgraph {\n  node [shape=box];\n";
  if (options.cluster_by) {
    // Quoted: type names may contain '-', which a bare DOT ID cannot.
    out += "  subgraph \"cluster_" + escape(*options.cluster_by) + "\" {\n";
    out += "    label=\"" + escape(*options.cluster_by) + "\";\n";
    for (const auto& [id, attrs] : g.labels()) {
      if (attrs.count(*options.cluster_by) != 0) {
        out += "    " + node_statement(id, attrs);
      }
    }
    out += "  }\n";
  }
  for (const auto& [id, attrs] : g.labels()) {
    if (options.cluster_by && attrs.count(*options.cluster_by) != 0) continue;
    out += "  " + node_statement(id, attrs);
  }
  for (const auto& e : g.edges()) {
    out += "  \"" + escape(e.src) + "\" -> \"" + escape(e.dst) + "\"";
    if (options.label_edges) out += " [label=\"" + escape(e.trace) + "\"]";
    out += ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace softgraph
