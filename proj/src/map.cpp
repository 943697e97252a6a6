#include "map.hpp"

#include <cstdint>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "error.hpp"
#include "view.hpp"

namespace softgraph {

SoftwareGraph relabel(const SoftwareGraph& g, const RelabelMap& relabels) {
  TypeDictionary dict = g.dict();
  for (const auto& [from, to] : relabels) {
    if (!dict.has_trace_type(from)) {
      throw Error(ErrorCode::UnknownType,
                  "unknown trace type '" + from + "' in relabel map");
    }
    if (!is_canonical_type_name(to)) {
      throw Error(ErrorCode::InvalidArgument,
                  "relabel target '" + to + "' is not a canonical identifier");
    }
    dict.trace_types.insert(to);
  }

  std::set<Edge> edges;
  for (const auto& e : g.edges()) {
    auto it = relabels.find(e.trace);
    edges.insert(it == relabels.end() ? e : Edge{e.src, it->second, e.dst});
  }
  return SoftwareGraph::from_parts(std::move(dict), g.labels(),
                                   std::move(edges));
}

namespace {

// Interned edge for the fixpoint: vertex and trace indices packed into one
// 64-bit key for the dedup set.
struct Interner {
  std::unordered_map<std::string, std::uint32_t> index;
  std::vector<std::string> names;

  std::uint32_t intern(const std::string& s) {
    auto [it, inserted] = index.emplace(s, names.size());
    if (inserted) names.push_back(s);
    return it->second;
  }
};

std::uint64_t edge_key(std::uint32_t src, std::uint32_t trace,
                       std::uint32_t dst) {
  // 24 bits per vertex, 16 per trace; far beyond the supported graph sizes.
  return (std::uint64_t(src) << 40) | (std::uint64_t(trace) << 24) | dst;
}

}  // namespace

SoftwareGraph compose_closure(const SoftwareGraph& g,
                              const CompositionMap& rules) {
  TypeDictionary dict = g.dict();
  for (const auto& [pair, result] : rules) {
    if (!dict.has_trace_type(pair.first)) {
      throw Error(ErrorCode::UnknownType,
                  "unknown trace type '" + pair.first + "' in composition map");
    }
    if (!dict.has_trace_type(pair.second)) {
      throw Error(ErrorCode::UnknownType, "unknown trace type '" + pair.second +
                                              "' in composition map");
    }
    if (!is_canonical_type_name(result)) {
      throw Error(ErrorCode::InvalidArgument, "composition result '" + result +
                                                  "' is not a canonical identifier");
    }
    dict.trace_types.insert(result);
  }

  Interner vertices;
  Interner traces;
  struct IEdge {
    std::uint32_t src, trace, dst;
  };
  std::vector<IEdge> worklist;
  std::unordered_set<std::uint64_t> seen;
  // Adjacency grows as derived edges appear.
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> out_edges;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> in_edges;

  // Intern the whole universe up front so the termination bound is exact
  // even for raw graphs with dangling endpoints or out-of-dictionary traces.
  for (const auto& [id, attrs] : g.labels()) vertices.intern(id);
  for (const auto& e : g.edges()) {
    vertices.intern(e.src);
    vertices.intern(e.dst);
    traces.intern(e.trace);
  }
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> irules;
  for (const auto& [pair, result] : rules) {
    irules[{traces.intern(pair.first), traces.intern(pair.second)}] =
        traces.intern(result);
  }
  if (vertices.names.size() >= (1u << 24) || traces.names.size() >= (1u << 16)) {
    throw Error(ErrorCode::InvalidArgument,
                "graph too large for composition closure (2^24 vertices / "
                "2^16 trace types supported)");
  }
  out_edges.resize(vertices.names.size());
  in_edges.resize(vertices.names.size());

  const std::size_t insertion_bound = vertices.names.size() *
                                      vertices.names.size() *
                                      traces.names.size();
  std::size_t insertions = 0;

  auto insert_edge = [&](std::uint32_t src, std::uint32_t trace,
                         std::uint32_t dst) {
    if (!seen.insert(edge_key(src, trace, dst)).second) return;
    if (++insertions > insertion_bound) {
      throw std::logic_error("composition closure exceeded its |V|^2*|T| bound");
    }
    out_edges[src].push_back({trace, dst});
    in_edges[dst].push_back({trace, src});
    worklist.push_back({src, trace, dst});
  };

  for (const auto& e : g.edges()) {
    insert_edge(vertices.intern(e.src), traces.intern(e.trace),
                vertices.intern(e.dst));
  }

  while (!worklist.empty()) {
    IEdge e = worklist.back();
    worklist.pop_back();
    // e as the left operand: compose with successors of its target.
    for (std::size_t i = 0; i < out_edges[e.dst].size(); ++i) {
      auto [y, w] = out_edges[e.dst][i];
      auto it = irules.find({e.trace, y});
      if (it != irules.end()) insert_edge(e.src, it->second, w);
    }
    // e as the right operand: compose with predecessors of its source.
    for (std::size_t i = 0; i < in_edges[e.src].size(); ++i) {
      auto [x, u] = in_edges[e.src][i];
      auto it = irules.find({x, e.trace});
      if (it != irules.end()) insert_edge(u, it->second, e.dst);
    }
  }

  std::set<Edge> edges;
  for (std::uint32_t src = 0; src < out_edges.size(); ++src) {
    for (auto [trace, dst] : out_edges[src]) {
      edges.insert(Edge{vertices.names[src], traces.names[trace],
                        vertices.names[dst]});
    }
  }
  return SoftwareGraph::from_parts(std::move(dict), g.labels(),
                                   std::move(edges));
}

SoftwareGraph class_diagram(const SoftwareGraph& g) {
  for (const char* required : {"contain", "return"}) {
    if (!g.dict().has_trace_type(required)) {
      throw Error(ErrorCode::UnknownType,
                  std::string("class diagram needs trace type '") + required +
                      "' in the dictionary");
    }
  }
  if (!g.dict().has_artifact_type("class")) {
    throw Error(ErrorCode::UnknownType,
                "class diagram needs artifact type 'class' in the dictionary");
  }
  SoftwareGraph collapsed =
      relabel(g, {{"contain", "depend"}, {"return", "depend"}});
  SoftwareGraph closed =
      compose_closure(collapsed, {{{"depend", "depend"}, "depend"}});
  return view(closed, ViewSpec{{"class"}, {"depend"}});
}

}  // namespace softgraph
