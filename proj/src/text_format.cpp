#include "text_format.hpp"

#include <map>

#include "error.hpp"

namespace softgraph {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view raw = text.substr(pos, eol - pos);
    ++number;
    pos = eol + 1;

    if (auto hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      if (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r') {
        ++i;
        continue;
      }
      std::size_t begin = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') {
        ++i;
      }
      line.tokens.emplace_back(raw.substr(begin, i - begin));
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (eol == text.size()) break;
  }
  return lines;
}

[[noreturn]] void syntax_error(const std::string& message, int line) {
  throw ParseError(message + " at line " + std::to_string(line), line);
}

std::string at_line(int line) { return " at line " + std::to_string(line); }

LenientParse parse_impl(std::string_view text, bool strict) {
  const std::vector<Line> lines = tokenize(text);

  TypeDictionary dict = default_dictionary();
  std::map<std::string, std::set<std::string>> labels;
  std::set<Edge> edges;
  std::vector<std::string> violations;

  auto report = [&](const std::string& message, int line) {
    if (strict) syntax_error(message, line);
    violations.push_back(message + at_line(line));
  };

  // Pass 1: dictionary extensions and vertex declarations, so edges may
  // reference vertices declared later in the document.
  for (const Line& line : lines) {
    const auto& t = line.tokens;
    const std::string& keyword = t[0];
    if (keyword == "artifact-type" || keyword == "trace-type") {
      if (t.size() != 2) {
        syntax_error("'" + keyword + "' needs exactly one identifier", line.number);
      }
      if (!is_canonical_type_name(t[1])) {
        syntax_error("'" + t[1] + "' is not a canonical identifier ([a-z][a-z0-9_-]*)",
                     line.number);
      }
      (keyword == "artifact-type" ? dict.artifact_types : dict.trace_types)
          .insert(t[1]);
    } else if (keyword == "vertex") {
      if (t.size() < 2) syntax_error("'vertex' needs an id", line.number);
      if (!is_valid_vertex_id(t[1])) {
        syntax_error("invalid vertex id '" + t[1] + "' ([A-Za-z0-9_.-]+ required)",
                     line.number);
      }
      if (t.size() < 3 && strict) {
        syntax_error("vertex '" + t[1] + "' declares no artifact types",
                     line.number);
      }
      if (!labels.emplace(t[1], std::set<std::string>{}).second) {
        report("duplicate vertex id '" + t[1] + "'", line.number);
      }
    } else if (keyword == "edge") {
      if (t.size() != 4) {
        syntax_error("'edge' needs source, trace and target", line.number);
      }
    } else {
      syntax_error("unknown directive '" + keyword + "'", line.number);
    }
  }

  // Pass 2: labels and edges against the final dictionary and vertex set.
  std::set<std::string> seen_vertices;
  for (const Line& line : lines) {
    const auto& t = line.tokens;
    if (t[0] == "vertex") {
      if (!seen_vertices.insert(t[1]).second) continue;  // duplicate kept as first
      auto& attrs = labels[t[1]];
      for (std::size_t i = 2; i < t.size(); ++i) {
        if (!dict.has_artifact_type(t[i])) {
          report("unknown artifact type '" + t[i] + "'", line.number);
        }
        attrs.insert(t[i]);
      }
      if (attrs.empty()) {
        report("unlabeled vertex '" + t[1] + "'", line.number);
      }
    } else if (t[0] == "edge") {
      for (const auto& endpoint : {t[1], t[3]}) {
        if (labels.count(endpoint) == 0) {
          report("unknown endpoint '" + endpoint + "'", line.number);
        }
      }
      if (!dict.has_trace_type(t[2])) {
        report("unknown trace type '" + t[2] + "'", line.number);
      }
      edges.insert(Edge{t[1], t[2], t[3]});
    }
  }

  return LenientParse{
      SoftwareGraph::from_parts(std::move(dict), std::move(labels), std::move(edges)),
      std::move(violations)};
}

}  // namespace

SoftwareGraph parse_graph_text(std::string_view text) {
  return parse_impl(text, true).graph;
}

LenientParse parse_graph_text_lenient(std::string_view text) {
  return parse_impl(text, false);
}

std::string serialize_graph(const SoftwareGraph& g) {
  const TypeDictionary& defaults = default_dictionary();
  std::string out;
  for (const auto& a : g.dict().artifact_types) {
    if (defaults.artifact_types.count(a) == 0) {
      out += "artifact-type " + a + "\n";
    }
  }
  for (const auto& t : g.dict().trace_types) {
    if (defaults.trace_types.count(t) == 0) {
      out += "trace-type " + t + "\n";
    }
  }
  for (const auto& [id, attrs] : g.labels()) {
    out += "vertex " + id;
    for (const auto& a : attrs) out += " " + a;
    out += "\n";
  }
  for (const auto& e : g.edges()) {
    out += "edge " + e.src + " " + e.trace + " " + e.dst + "\n";
  }
  return out;
}

}  // namespace softgraph
