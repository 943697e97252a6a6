#pragma once

// Brute-force reference implementations, kept deliberately naive and
// structurally independent of the library code they check.

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "map.hpp"
#include "metrics.hpp"
#include "query.hpp"
#include "view.hpp"

namespace testsupport {

// Def-by-def filter: vertices by label membership, labels by type, edges by
// trace and surviving endpoints.
inline softgraph::SoftwareGraph view_oracle(const softgraph::SoftwareGraph& g,
                                            const softgraph::ViewSpec& spec) {
  std::map<std::string, std::set<std::string>> labels;
  for (const auto& [id, attrs] : g.labels()) {
    for (const auto& a : attrs) {
      if (spec.artifact_types.count(a) != 0) labels[id].insert(a);
    }
  }
  std::set<softgraph::Edge> edges;
  for (const auto& e : g.edges()) {
    bool trace_ok = spec.trace_types.count(e.trace) != 0;
    if (trace_ok && labels.count(e.src) != 0 && labels.count(e.dst) != 0) {
      edges.insert(e);
    }
  }
  return softgraph::SoftwareGraph::from_parts(
      softgraph::TypeDictionary{spec.artifact_types, spec.trace_types},
      std::move(labels), std::move(edges));
}

// Fixpoint by repeated full rescans of the edge set.
inline std::set<softgraph::Edge> closure_edges_oracle(
    std::set<softgraph::Edge> edges, const softgraph::CompositionMap& rules) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<softgraph::Edge> found;
    for (const auto& left : edges) {
      for (const auto& right : edges) {
        if (left.dst != right.src) continue;
        auto rule = rules.find({left.trace, right.trace});
        if (rule == rules.end()) continue;
        softgraph::Edge derived{left.src, rule->second, right.dst};
        if (edges.count(derived) == 0) found.push_back(std::move(derived));
      }
    }
    for (auto& e : found) {
      changed |= edges.insert(std::move(e)).second;
    }
  }
  return edges;
}

// Reflexive-free transitive closure of the edges of one trace type, computed
// Floyd-Warshall style on a reachability matrix.
inline std::set<std::pair<std::string, std::string>> transitive_closure_oracle(
    const softgraph::SoftwareGraph& g, const std::string& trace) {
  std::vector<std::string> ids;
  std::map<std::string, std::size_t> index;
  for (const auto& [id, attrs] : g.labels()) {
    index[id] = ids.size();
    ids.push_back(id);
  }
  const std::size_t n = ids.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  for (const auto& e : g.edges()) {
    if (e.trace == trace) reach[index.at(e.src)][index.at(e.dst)] = true;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!reach[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (reach[k][j]) reach[i][j] = true;
      }
    }
  }
  std::set<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (reach[i][j]) pairs.insert({ids[i], ids[j]});
    }
  }
  return pairs;
}

// Reachability by repeated single-edge expansion to a fixpoint.
inline std::set<std::string> reachable_oracle(
    const softgraph::SoftwareGraph& g, const std::set<std::string>& sources,
    const softgraph::TypeFilter& trace_filter = std::nullopt) {
  std::set<std::string> reached(sources);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& e : g.edges()) {
      if (trace_filter && trace_filter->count(e.trace) == 0) continue;
      if (reached.count(e.src) != 0 && reached.insert(e.dst).second) {
        changed = true;
      }
    }
  }
  return reached;
}

// Coverage checked target by target, each against per-source reachability.
struct CoverageOracle {
  double value = 1.0;
  std::vector<std::string> uncovered;
  bool vacuous = false;
};

inline CoverageOracle coverage_oracle(
    const softgraph::SoftwareGraph& g, const std::string& source_type,
    const std::string& target_type,
    const softgraph::TypeFilter& trace_filter = std::nullopt) {
  std::vector<std::string> sources, targets;
  for (const auto& [id, attrs] : g.labels()) {
    bool is_source = attrs.count(source_type) != 0;
    if (is_source) sources.push_back(id);
    bool is_target = target_type == softgraph::kAllOthers
                         ? !is_source
                         : attrs.count(target_type) != 0;
    if (is_target) targets.push_back(id);
  }
  CoverageOracle result;
  if (targets.empty()) {
    result.vacuous = true;
    return result;
  }
  // One single-source fixpoint per source; a target is covered when any of
  // those sets holds it.
  std::vector<std::set<std::string>> reached_per_source;
  reached_per_source.reserve(sources.size());
  for (const auto& source : sources) {
    reached_per_source.push_back(reachable_oracle(g, {source}, trace_filter));
  }
  std::size_t covered = 0;
  for (const auto& target : targets) {
    bool hit = false;
    for (const auto& reached : reached_per_source) {
      if (reached.count(target) != 0) {
        hit = true;
        break;
      }
    }
    if (hit) {
      ++covered;
    } else {
      result.uncovered.push_back(target);
    }
  }
  result.value = double(covered) / double(targets.size());
  return result;
}

// Wildcard matching by plain recursion, independent of the library matcher.
inline bool glob_oracle(const std::string& pattern, const std::string& text) {
  if (pattern.empty()) return text.empty();
  if (pattern[0] == '*') {
    return glob_oracle(pattern.substr(1), text) ||
           (!text.empty() && glob_oracle(pattern, text.substr(1)));
  }
  if (text.empty()) return false;
  if (pattern[0] == '?' || pattern[0] == text[0]) {
    return glob_oracle(pattern.substr(1), text.substr(1));
  }
  return false;
}

// Per-vertex predicate evaluation; steps go through the neighbors surface.
// Memoized per (node, vertex) so deeply nested steps stay polynomial.
using QueryMemo = std::map<std::pair<const softgraph::QueryNode*, std::string>, bool>;

inline bool query_holds_oracle(const softgraph::SoftwareGraph& g,
                               const std::string& v,
                               const softgraph::QueryPtr& q,
                               QueryMemo& memo) {
  using namespace softgraph;
  auto key = std::make_pair(q.get(), v);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  bool holds = std::visit(
      [&](const auto& node) -> bool {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, TypeIs>) {
          return g.labels_of(v).count(node.type) != 0;
        } else if constexpr (std::is_same_v<T, IdGlob>) {
          return glob_oracle(node.pattern, v);
        } else if constexpr (std::is_same_v<T, And>) {
          return query_holds_oracle(g, v, node.lhs, memo) &&
                 query_holds_oracle(g, v, node.rhs, memo);
        } else if constexpr (std::is_same_v<T, Or>) {
          return query_holds_oracle(g, v, node.lhs, memo) ||
                 query_holds_oracle(g, v, node.rhs, memo);
        } else if constexpr (std::is_same_v<T, Not>) {
          return !query_holds_oracle(g, v, node.operand, memo);
        } else {
          for (const auto& n : g.neighbors(v, node.dir, node.traces)) {
            if (query_holds_oracle(g, n, node.operand, memo)) return true;
          }
          return false;
        }
      },
      q->value);
  memo.emplace(key, holds);
  return holds;
}

inline std::set<std::string> query_oracle(const softgraph::SoftwareGraph& g,
                                          const softgraph::QueryPtr& q) {
  std::set<std::string> result;
  QueryMemo memo;
  for (const auto& [id, attrs] : g.labels()) {
    if (query_holds_oracle(g, id, q, memo)) result.insert(id);
  }
  return result;
}

}  // namespace testsupport
