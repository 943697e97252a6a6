#include "softgraph.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include "dictionary.hpp"
#include "dot.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "map.hpp"
#include "metrics.hpp"
#include "query.hpp"
#include "text_format.hpp"
#include "view.hpp"

struct sg_graph {
  softgraph::SoftwareGraph impl;
};

struct sg_string_list {
  std::vector<std::string> items;
};

struct sg_metric_result {
  softgraph::MetricResult impl;
};

namespace {

thread_local std::string t_last_error;

sg_status status_of(softgraph::ErrorCode code) {
  using softgraph::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return SG_ERROR_INVALID_ARGUMENT;
    case ErrorCode::UnknownType: return SG_ERROR_UNKNOWN_TYPE;
    case ErrorCode::Duplicate: return SG_ERROR_DUPLICATE;
    case ErrorCode::NotFound: return SG_ERROR_NOT_FOUND;
    case ErrorCode::Parse: return SG_ERROR_PARSE;
    case ErrorCode::Io: return SG_ERROR_IO;
  }
  return SG_ERROR_INTERNAL;
}

// Runs the body, translating exceptions into a status + thread-local message.
template <typename Fn>
sg_status guarded(Fn&& body) noexcept {
  try {
    body();
    t_last_error.clear();
    return SG_OK;
  } catch (const softgraph::Error& e) {
    t_last_error = e.what();
    return status_of(e.code());
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return SG_ERROR_INTERNAL;
  } catch (...) {
    t_last_error = "unknown error";
    return SG_ERROR_INTERNAL;
  }
}

sg_status null_argument(const char* what) {
  t_last_error = std::string("null argument: ") + what;
  return SG_ERROR_INVALID_ARGUMENT;
}

std::vector<std::string> to_vector(const char* const* items, size_t count) {
  std::vector<std::string> out;
  out.reserve(count);
  for (size_t i = 0; i < count; ++i) {
    if (items[i] == nullptr) {
      throw softgraph::Error(softgraph::ErrorCode::InvalidArgument,
                             "null entry in string array");
    }
    out.emplace_back(items[i]);
  }
  return out;
}

// NULL array = no filter; non-NULL with count 0 = empty filter.
softgraph::TypeFilter to_filter(const char* const* items, size_t count) {
  if (items == nullptr) return std::nullopt;
  auto v = to_vector(items, count);
  return std::set<std::string>(v.begin(), v.end());
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

sg_string_list* make_list(std::vector<std::string> items) {
  return new sg_string_list{std::move(items)};
}

template <typename Container>
sg_string_list* make_list_from(const Container& items) {
  return new sg_string_list{{items.begin(), items.end()}};
}

std::string read_file(const char* path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw softgraph::Error(softgraph::ErrorCode::Io,
                           std::string("cannot read '") + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

extern "C" {

const char* sg_version(void) { return "0.1.0"; }

const char* sg_last_error(void) { return t_last_error.c_str(); }

void sg_string_free(char* text) { std::free(text); }

size_t sg_string_list_count(const sg_string_list* list) {
  return list == nullptr ? 0 : list->items.size();
}

const char* sg_string_list_get(const sg_string_list* list, size_t index) {
  if (list == nullptr || index >= list->items.size()) return nullptr;
  return list->items[index].c_str();
}

void sg_string_list_free(sg_string_list* list) { delete list; }

sg_status sg_graph_new(sg_graph** out) {
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    *out = new sg_graph{softgraph::new_graph(softgraph::default_dictionary())};
  });
}

sg_status sg_graph_new_with_dictionary(const char* const* artifact_types,
                                       size_t artifact_count,
                                       const char* const* trace_types,
                                       size_t trace_count, sg_graph** out) {
  if (out == nullptr) return null_argument("out");
  if (artifact_types == nullptr && artifact_count > 0) return null_argument("artifact_types");
  if (trace_types == nullptr && trace_count > 0) return null_argument("trace_types");
  return guarded([&] {
    auto dict = softgraph::make_dictionary(to_vector(artifact_types, artifact_count),
                                           to_vector(trace_types, trace_count));
    *out = new sg_graph{softgraph::new_graph(dict)};
  });
}

sg_status sg_graph_clone(const sg_graph* g, sg_graph** out) {
  if (g == nullptr) return null_argument("graph");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = new sg_graph{g->impl}; });
}

void sg_graph_free(sg_graph* g) { delete g; }

sg_status sg_graph_add_vertex(sg_graph* g, const char* id,
                              const char* const* artifact_types,
                              size_t type_count) {
  if (g == nullptr) return null_argument("graph");
  if (id == nullptr) return null_argument("id");
  if (artifact_types == nullptr && type_count > 0) return null_argument("artifact_types");
  return guarded([&] {
    auto attrs = to_vector(artifact_types, type_count);
    g->impl.add_vertex(id, {attrs.begin(), attrs.end()});
  });
}

sg_status sg_graph_add_edge(sg_graph* g, const char* src, const char* trace,
                            const char* dst) {
  if (g == nullptr) return null_argument("graph");
  if (src == nullptr || trace == nullptr || dst == nullptr) {
    return null_argument("edge component");
  }
  return guarded([&] { g->impl.add_edge(src, trace, dst); });
}

size_t sg_graph_vertex_count(const sg_graph* g) {
  return g == nullptr ? 0 : g->impl.vertex_count();
}

size_t sg_graph_edge_count(const sg_graph* g) {
  return g == nullptr ? 0 : g->impl.edge_count();
}

int sg_graph_has_vertex(const sg_graph* g, const char* id) {
  return g != nullptr && id != nullptr && g->impl.has_vertex(id) ? 1 : 0;
}

int sg_graph_equals(const sg_graph* a, const sg_graph* b) {
  if (a == nullptr || b == nullptr) return a == b ? 1 : 0;
  return a->impl == b->impl ? 1 : 0;
}

sg_status sg_graph_artifact_types(const sg_graph* g, sg_string_list** out) {
  if (g == nullptr) return null_argument("graph");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = make_list_from(g->impl.dict().artifact_types); });
}

sg_status sg_graph_trace_types(const sg_graph* g, sg_string_list** out) {
  if (g == nullptr) return null_argument("graph");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = make_list_from(g->impl.dict().trace_types); });
}

sg_status sg_graph_neighbors(const sg_graph* g, const char* id,
                             const char* direction,
                             const char* const* trace_filter, size_t trace_count,
                             const char* const* artifact_filter,
                             size_t artifact_count, sg_string_list** out) {
  if (g == nullptr) return null_argument("graph");
  if (id == nullptr) return null_argument("id");
  if (direction == nullptr) return null_argument("direction");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    auto dir = softgraph::direction_from_string(direction);
    if (!dir) {
      throw softgraph::Error(softgraph::ErrorCode::InvalidArgument,
                             std::string("bad direction '") + direction +
                                 "' (out, in or both)");
    }
    auto result = g->impl.neighbors(id, *dir, to_filter(trace_filter, trace_count),
                                    to_filter(artifact_filter, artifact_count));
    *out = make_list_from(result);
  });
}

sg_status sg_graph_validate(const sg_graph* g, sg_string_list** out) {
  if (g == nullptr) return null_argument("graph");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = make_list(softgraph::validate(g->impl)); });
}

sg_status sg_graph_parse_string(const char* text, sg_graph** out) {
  if (text == nullptr) return null_argument("text");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = new sg_graph{softgraph::parse_graph_text(text)}; });
}

sg_status sg_graph_parse_file(const char* path, sg_graph** out) {
  if (path == nullptr) return null_argument("path");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    *out = new sg_graph{softgraph::parse_graph_text(read_file(path))};
  });
}

sg_status sg_graph_parse_string_lenient(const char* text, sg_graph** out_graph,
                                        sg_string_list** out_violations) {
  if (text == nullptr) return null_argument("text");
  if (out_graph == nullptr) return null_argument("out_graph");
  if (out_violations == nullptr) return null_argument("out_violations");
  return guarded([&] {
    auto result = softgraph::parse_graph_text_lenient(text);
    *out_graph = new sg_graph{std::move(result.graph)};
    *out_violations = make_list(std::move(result.violations));
  });
}

sg_status sg_graph_serialize(const sg_graph* g, char** out_text) {
  if (g == nullptr) return null_argument("graph");
  if (out_text == nullptr) return null_argument("out_text");
  return guarded([&] { *out_text = copy_string(softgraph::serialize_graph(g->impl)); });
}

sg_status sg_graph_write_file(const sg_graph* g, const char* path) {
  if (g == nullptr) return null_argument("graph");
  if (path == nullptr) return null_argument("path");
  return guarded([&] {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      throw softgraph::Error(softgraph::ErrorCode::Io,
                             std::string("cannot write '") + path + "'");
    }
    out << softgraph::serialize_graph(g->impl);
    out.flush();
    if (!out) {
      throw softgraph::Error(softgraph::ErrorCode::Io,
                             std::string("cannot write '") + path + "'");
    }
  });
}

sg_status sg_graph_to_dot(const sg_graph* g, int label_edges,
                          const char* cluster_by, char** out_text) {
  if (g == nullptr) return null_argument("graph");
  if (out_text == nullptr) return null_argument("out_text");
  return guarded([&] {
    softgraph::DotOptions options;
    options.label_edges = label_edges != 0;
    if (cluster_by != nullptr) options.cluster_by = cluster_by;
    *out_text = copy_string(softgraph::export_dot(g->impl, options));
  });
}

sg_status sg_graph_view(const sg_graph* g, const char* const* artifact_types,
                        size_t artifact_count, const char* const* trace_types,
                        size_t trace_count, sg_graph** out) {
  if (g == nullptr) return null_argument("graph");
  if (out == nullptr) return null_argument("out");
  if (artifact_types == nullptr && artifact_count > 0) return null_argument("artifact_types");
  if (trace_types == nullptr && trace_count > 0) return null_argument("trace_types");
  return guarded([&] {
    auto artifacts = to_vector(artifact_types, artifact_count);
    auto traces = to_vector(trace_types, trace_count);
    softgraph::ViewSpec spec{{artifacts.begin(), artifacts.end()},
                             {traces.begin(), traces.end()}};
    *out = new sg_graph{softgraph::view(g->impl, spec)};
  });
}

sg_status sg_graph_view_stats(const sg_graph* g,
                              const char* const* artifact_types,
                              size_t artifact_count,
                              const char* const* trace_types, size_t trace_count,
                              size_t* out_vertices, size_t* out_edges) {
  if (g == nullptr) return null_argument("graph");
  if (out_vertices == nullptr) return null_argument("out_vertices");
  if (out_edges == nullptr) return null_argument("out_edges");
  return guarded([&] {
    auto artifacts = to_vector(artifact_types, artifact_count);
    auto traces = to_vector(trace_types, trace_count);
    softgraph::ViewSpec spec{{artifacts.begin(), artifacts.end()},
                             {traces.begin(), traces.end()}};
    auto [vertices, edges] = softgraph::view_stats(g->impl, spec);
    *out_vertices = vertices;
    *out_edges = edges;
  });
}

sg_status sg_graph_relabel(const sg_graph* g, const char* const* from,
                           const char* const* to, size_t pair_count,
                           sg_graph** out) {
  if (g == nullptr) return null_argument("graph");
  if (out == nullptr) return null_argument("out");
  if ((from == nullptr || to == nullptr) && pair_count > 0) {
    return null_argument("relabel pairs");
  }
  return guarded([&] {
    softgraph::RelabelMap relabels;
    for (size_t i = 0; i < pair_count; ++i) {
      if (from[i] == nullptr || to[i] == nullptr) {
        throw softgraph::Error(softgraph::ErrorCode::InvalidArgument,
                               "null entry in relabel pairs");
      }
      relabels[from[i]] = to[i];
    }
    *out = new sg_graph{softgraph::relabel(g->impl, relabels)};
  });
}

sg_status sg_graph_compose_closure(const sg_graph* g, const char* const* first,
                                   const char* const* second,
                                   const char* const* result, size_t rule_count,
                                   sg_graph** out) {
  if (g == nullptr) return null_argument("graph");
  if (out == nullptr) return null_argument("out");
  if ((first == nullptr || second == nullptr || result == nullptr) && rule_count > 0) {
    return null_argument("composition rules");
  }
  return guarded([&] {
    softgraph::CompositionMap rules;
    for (size_t i = 0; i < rule_count; ++i) {
      if (first[i] == nullptr || second[i] == nullptr || result[i] == nullptr) {
        throw softgraph::Error(softgraph::ErrorCode::InvalidArgument,
                               "null entry in composition rules");
      }
      rules[{first[i], second[i]}] = result[i];
    }
    *out = new sg_graph{softgraph::compose_closure(g->impl, rules)};
  });
}

sg_status sg_graph_class_diagram(const sg_graph* g, sg_graph** out) {
  if (g == nullptr) return null_argument("graph");
  if (out == nullptr) return null_argument("out");
  return guarded([&] { *out = new sg_graph{softgraph::class_diagram(g->impl)}; });
}

sg_status sg_metric_evaluate(const sg_graph* g, const char* name,
                             const char* const* arg_names,
                             const char* const* arg_values, size_t arg_count,
                             sg_metric_result** out) {
  if (g == nullptr) return null_argument("graph");
  if (name == nullptr) return null_argument("name");
  if (out == nullptr) return null_argument("out");
  if ((arg_names == nullptr || arg_values == nullptr) && arg_count > 0) {
    return null_argument("arguments");
  }
  return guarded([&] {
    std::map<std::string, std::string> args;
    for (size_t i = 0; i < arg_count; ++i) {
      if (arg_names[i] == nullptr || arg_values[i] == nullptr) {
        throw softgraph::Error(softgraph::ErrorCode::InvalidArgument,
                               "null entry in metric arguments");
      }
      args[arg_names[i]] = arg_values[i];
    }
    *out = new sg_metric_result{softgraph::evaluate_metric(g->impl, name, args)};
  });
}

const char* sg_metric_result_name(const sg_metric_result* r) {
  return r == nullptr ? nullptr : r->impl.name.c_str();
}

double sg_metric_result_value(const sg_metric_result* r) {
  return r == nullptr ? 0.0 : r->impl.value;
}

const char* sg_metric_result_scope(const sg_metric_result* r) {
  return r == nullptr ? nullptr : r->impl.scope.c_str();
}

int sg_metric_result_vacuous(const sg_metric_result* r) {
  return r != nullptr && r->impl.vacuous ? 1 : 0;
}

size_t sg_metric_result_detail_count(const sg_metric_result* r) {
  return r == nullptr ? 0 : r->impl.details.size();
}

const char* sg_metric_result_detail(const sg_metric_result* r, size_t index) {
  if (r == nullptr || index >= r->impl.details.size()) return nullptr;
  return r->impl.details[index].c_str();
}

void sg_metric_result_free(sg_metric_result* r) { delete r; }

sg_status sg_graph_reachable_from(const sg_graph* g, const char* const* sources,
                                  size_t source_count,
                                  const char* const* trace_filter,
                                  size_t trace_count, sg_string_list** out) {
  if (g == nullptr) return null_argument("graph");
  if (out == nullptr) return null_argument("out");
  if (sources == nullptr && source_count > 0) return null_argument("sources");
  return guarded([&] {
    auto ids = to_vector(sources, source_count);
    auto reached = softgraph::reachable_from(
        g->impl, {ids.begin(), ids.end()}, to_filter(trace_filter, trace_count));
    *out = make_list_from(reached);
  });
}

sg_status sg_query(const sg_graph* g, const char* query_text,
                   sg_string_list** out) {
  if (g == nullptr) return null_argument("graph");
  if (query_text == nullptr) return null_argument("query_text");
  if (out == nullptr) return null_argument("out");
  return guarded([&] {
    auto ast = softgraph::parse_query(query_text);
    *out = make_list_from(softgraph::eval_query(g->impl, ast));
  });
}

sg_status sg_query_canonical(const char* query_text, char** out_text) {
  if (query_text == nullptr) return null_argument("query_text");
  if (out_text == nullptr) return null_argument("out_text");
  return guarded([&] {
    *out_text = copy_string(softgraph::print_query(softgraph::parse_query(query_text)));
  });
}

} /* extern "C" */
