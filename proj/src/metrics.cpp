#include "metrics.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "error.hpp"

namespace softgraph {

namespace {

void check_artifact_type(const SoftwareGraph& g, const std::string& t,
                         const char* where) {
  if (!g.dict().has_artifact_type(t)) {
    throw Error(ErrorCode::UnknownType,
                "unknown artifact type '" + t + "' for " + where);
  }
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    std::string item = text.substr(start, comma - start);
    while (!item.empty() && (item.front() == ' ' || item.front() == '\t')) {
      item.erase(item.begin());
    }
    while (!item.empty() && (item.back() == ' ' || item.back() == '\t')) {
      item.pop_back();
    }
    if (!item.empty()) out.push_back(std::move(item));
    start = comma + 1;
  }
  return out;
}

}  // namespace

MetricResult count_by_type(const SoftwareGraph& g,
                           const std::string& artifact_type) {
  check_artifact_type(g, artifact_type, "count_by_type");
  std::size_t n = 0;
  for (const auto& [id, attrs] : g.labels()) {
    if (attrs.count(artifact_type) != 0) ++n;
  }
  return MetricResult{"count_by_type", double(n), "graph", {}, false};
}

MetricResult coupling(const SoftwareGraph& g, const std::string& vertex,
                      Direction dir, const TypeFilter& attr_filter,
                      const TypeFilter& trace_filter) {
  auto adjacent = g.neighbors(vertex, dir, trace_filter, attr_filter);
  return MetricResult{"coupling", double(adjacent.size()), vertex, {}, false};
}

std::set<std::string> reachable_from(const SoftwareGraph& g,
                                     const std::set<std::string>& sources,
                                     const TypeFilter& trace_filter) {
  for (const auto& s : sources) {
    if (!g.has_vertex(s)) {
      throw Error(ErrorCode::NotFound, "unknown vertex '" + s + "'");
    }
  }
  if (trace_filter) {
    for (const auto& t : *trace_filter) {
      if (!g.dict().has_trace_type(t)) {
        throw Error(ErrorCode::UnknownType,
                    "unknown trace type '" + t + "' in filter");
      }
    }
  }

  std::unordered_map<std::string, std::vector<const std::string*>> adjacency;
  for (const auto& e : g.edges()) {
    if (trace_filter && trace_filter->count(e.trace) == 0) continue;
    adjacency[e.src].push_back(&e.dst);
  }

  std::set<std::string> reached(sources);
  std::deque<const std::string*> frontier;
  for (const auto& s : reached) frontier.push_back(&s);
  while (!frontier.empty()) {
    const std::string* v = frontier.front();
    frontier.pop_front();
    auto it = adjacency.find(*v);
    if (it == adjacency.end()) continue;
    for (const std::string* next : it->second) {
      auto [pos, inserted] = reached.insert(*next);
      if (inserted) frontier.push_back(&*pos);
    }
  }
  return reached;
}

MetricResult coverage(const SoftwareGraph& g, const std::string& source_type,
                      const std::string& target_type,
                      const TypeFilter& trace_filter) {
  check_artifact_type(g, source_type, "coverage source");
  const bool all_others = target_type == kAllOthers;
  if (!all_others) check_artifact_type(g, target_type, "coverage target");

  std::set<std::string> sources;
  std::vector<const std::string*> targets;
  for (const auto& [id, attrs] : g.labels()) {
    const bool is_source = attrs.count(source_type) != 0;
    if (is_source) sources.insert(id);
    if (all_others ? !is_source : attrs.count(target_type) != 0) {
      targets.push_back(&id);
    }
  }

  MetricResult result{"coverage", 1.0, "graph", {}, false};
  if (targets.empty()) {
    result.vacuous = true;
    return result;
  }

  const std::set<std::string> reached = reachable_from(g, sources, trace_filter);
  std::size_t covered = 0;
  for (const std::string* t : targets) {
    if (reached.count(*t) != 0) {
      ++covered;
    } else {
      result.details.push_back(*t);
    }
  }
  result.value = double(covered) / double(targets.size());
  return result;
}

const std::vector<std::string>& metric_catalog() {
  static const std::vector<std::string> names = {
      "count_by_type", "coupling", "coverage", "reachable_from"};
  return names;
}

namespace {

using Args = std::map<std::string, std::string>;

const std::string& require_arg(const Args& args, const std::string& key,
                               const std::string& metric) {
  auto it = args.find(key);
  if (it == args.end()) {
    throw Error(ErrorCode::InvalidArgument,
                "metric '" + metric + "' needs argument '" + key + "'");
  }
  return it->second;
}

TypeFilter optional_set(const Args& args, const std::string& key) {
  auto it = args.find(key);
  if (it == args.end()) return std::nullopt;
  auto items = split_csv(it->second);
  return std::set<std::string>(items.begin(), items.end());
}

void reject_unknown_args(const Args& args, const std::string& metric,
                         std::initializer_list<const char*> known) {
  for (const auto& [key, value] : args) {
    if (std::find_if(known.begin(), known.end(), [&](const char* k) {
          return key == k;
        }) == known.end()) {
      throw Error(ErrorCode::InvalidArgument,
                  "metric '" + metric + "' got unexpected argument '" + key + "'");
    }
  }
}

}  // namespace

MetricResult evaluate_metric(const SoftwareGraph& g, const std::string& name,
                             const Args& args) {
  if (name == "count_by_type") {
    reject_unknown_args(args, name, {"type"});
    return count_by_type(g, require_arg(args, "type", name));
  }
  if (name == "coupling") {
    reject_unknown_args(args, name, {"vertex", "direction", "artifacts", "traces"});
    const std::string& vertex = require_arg(args, "vertex", name);
    const std::string& dir_text = require_arg(args, "direction", name);
    auto dir = direction_from_string(dir_text);
    if (!dir) {
      throw Error(ErrorCode::InvalidArgument,
                  "bad direction '" + dir_text + "' (out, in or both)");
    }
    return coupling(g, vertex, *dir, optional_set(args, "artifacts"),
                    optional_set(args, "traces"));
  }
  if (name == "coverage") {
    reject_unknown_args(args, name, {"source", "target", "traces"});
    return coverage(g, require_arg(args, "source", name),
                    require_arg(args, "target", name),
                    optional_set(args, "traces"));
  }
  if (name == "reachable_from") {
    reject_unknown_args(args, name, {"sources", "traces"});
    auto ids = split_csv(require_arg(args, "sources", name));
    auto reached = reachable_from(
        g, std::set<std::string>(ids.begin(), ids.end()),
        optional_set(args, "traces"));
    MetricResult result{"reachable_from", double(reached.size()), "graph", {}, false};
    result.details.assign(reached.begin(), reached.end());
    return result;
  }

  std::string available;
  for (const auto& n : metric_catalog()) {
    if (!available.empty()) available += ", ";
    available += n;
  }
  throw Error(ErrorCode::NotFound,
              "unknown metric '" + name + "'; available: " + available);
}

}  // namespace softgraph
