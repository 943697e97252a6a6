// sgraph - command-line front end for the softgraph engine.
//
// Exit codes: 0 success, 1 domain failure (validation violations, metric
// below threshold), 2 usage or parse errors. Results go to stdout,
// diagnostics to stderr.

#include <charconv>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "softgraph.h"

namespace {

struct GraphDeleter {
  void operator()(sg_graph* g) const { sg_graph_free(g); }
};
using GraphPtr = std::unique_ptr<sg_graph, GraphDeleter>;

struct ListDeleter {
  void operator()(sg_string_list* l) const { sg_string_list_free(l); }
};
using ListPtr = std::unique_ptr<sg_string_list, ListDeleter>;

struct MetricDeleter {
  void operator()(sg_metric_result* r) const { sg_metric_result_free(r); }
};
using MetricPtr = std::unique_ptr<sg_metric_result, MetricDeleter>;

struct OwnedText {
  char* text = nullptr;
  ~OwnedText() { sg_string_free(text); }
};

const char* kUsage =
    "usage: sgraph <command> [arguments]\n"
    "\n"
    "commands:\n"
    "  validate FILE                       check a graph file, report violations\n"
    "  view FILE --artifacts LIST --traces LIST [--dot] [-o PATH]\n"
    "                                      restrict to the given types\n"
    "  map FILE (--preset class-diagram | [--relabel A=B,...] [--compose X,Y=Z,...])\n"
    "           [--dot] [-o PATH]          rewrite edge types / close compositions\n"
    "  metric FILE NAME [--type T] [--vertex V] [--direction D] [--source T]\n"
    "         [--target T] [--sources LIST] [--artifacts LIST] [--traces LIST]\n"
    "         [--fail-below X]             evaluate a metric\n"
    "  query FILE EXPR                     vertices matching a query expression\n"
    "  export FILE [--dot] [--no-edge-labels] [--cluster-by TYPE] [-o PATH]\n"
    "                                      canonical text or DOT rendering\n"
    "\n"
    "run 'sgraph <command> --help' for details.\n";

int usage_error(const std::string& message) {
  std::cerr << "sgraph: " << message << "\n";
  return 2;
}

int api_error(sg_status status) {
  std::cerr << "sgraph: " << sg_last_error() << "\n";
  (void)status;
  return 2;
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

std::vector<const char*> c_strings(const std::vector<std::string>& items) {
  std::vector<const char*> out;
  out.reserve(items.size());
  for (const auto& s : items) out.push_back(s.c_str());
  return out;
}

std::string format_value(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  out = buffer.str();
  return true;
}

// Flags are "--name value" or "--name=value"; "-o" is short for "--output".
struct Flags {
  std::map<std::string, std::string> values;
  std::vector<std::string> positional;
  bool help = false;

  bool has(const std::string& name) const { return values.count(name) != 0; }
  const std::string* get(const std::string& name) const {
    auto it = values.find(name);
    return it == values.end() ? nullptr : &it->second;
  }
};

// Flags in `switches` take no value.
std::optional<Flags> parse_flags(int argc, char** argv, int start,
                                 const std::vector<std::string>& known,
                                 const std::vector<std::string>& switches,
                                 std::string& error) {
  Flags flags;
  for (int i = start; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--help" || arg == "-h") {
      flags.help = true;
      continue;
    }
    if (arg == "-o") arg = "--output";
    if (arg.rfind("--", 0) != 0) {
      flags.positional.push_back(arg);
      continue;
    }
    std::string name = arg.substr(2);
    std::string value;
    bool has_value = false;
    if (auto eq = name.find('='); eq != std::string::npos) {
      value = name.substr(eq + 1);
      name = name.substr(0, eq);
      has_value = true;
    }
    bool is_switch = false;
    for (const auto& s : switches) is_switch |= (s == name);
    bool is_known = is_switch;
    for (const auto& k : known) is_known |= (k == name);
    if (!is_known) {
      error = "unknown flag '--" + name + "'";
      return std::nullopt;
    }
    if (is_switch) {
      if (has_value) {
        error = "flag '--" + name + "' takes no value";
        return std::nullopt;
      }
      flags.values[name] = "";
      continue;
    }
    if (!has_value) {
      if (i + 1 >= argc) {
        error = "flag '--" + name + "' needs a value";
        return std::nullopt;
      }
      value = argv[++i];
    }
    flags.values[name] = value;
  }
  return flags;
}

GraphPtr load_graph(const std::string& path, sg_status& status) {
  sg_graph* g = nullptr;
  status = sg_graph_parse_file(path.c_str(), &g);
  return GraphPtr(g);
}

int write_output(const std::string& text, const Flags& flags) {
  const std::string* path = flags.get("output");
  if (path == nullptr) {
    std::cout << text;
    return 0;
  }
  std::ofstream out(*path, std::ios::binary);
  if (!out) return usage_error("cannot write '" + *path + "'");
  out << text;
  out.flush();
  if (!out) return usage_error("cannot write '" + *path + "'");
  return 0;
}

// Serializes or DOT-renders a result graph per the --dot flag.
int emit_graph(const sg_graph* g, const Flags& flags) {
  OwnedText text;
  sg_status status;
  if (flags.has("dot")) {
    const std::string* cluster = flags.get("cluster-by");
    status = sg_graph_to_dot(g, flags.has("no-edge-labels") ? 0 : 1,
                             cluster ? cluster->c_str() : nullptr, &text.text);
  } else {
    status = sg_graph_serialize(g, &text.text);
  }
  if (status != SG_OK) return api_error(status);
  return write_output(text.text, flags);
}

int cmd_validate(int argc, char** argv) {
  std::string error;
  auto flags = parse_flags(argc, argv, 2, {}, {}, error);
  if (!flags) return usage_error(error);
  if (flags->help) {
    std::cout << "usage: sgraph validate FILE\n"
                 "Parses FILE and reports model violations (dangling endpoints,\n"
                 "unlabeled vertices, unknown types). Exit 0 when clean, 1 when\n"
                 "violations are found, 2 on syntax errors.\n";
    return 0;
  }
  if (flags->positional.size() != 1) return usage_error("validate needs exactly one FILE");

  std::string text;
  if (!read_file(flags->positional[0], text)) {
    return usage_error("cannot read '" + flags->positional[0] + "'");
  }
  sg_graph* raw_graph = nullptr;
  sg_string_list* raw_violations = nullptr;
  sg_status status =
      sg_graph_parse_string_lenient(text.c_str(), &raw_graph, &raw_violations);
  if (status != SG_OK) return api_error(status);
  GraphPtr graph(raw_graph);
  ListPtr violations(raw_violations);

  const size_t count = sg_string_list_count(violations.get());
  if (count == 0) {
    std::cout << "OK: " << sg_graph_vertex_count(graph.get()) << " vertices, "
              << sg_graph_edge_count(graph.get()) << " edges\n";
    return 0;
  }
  for (size_t i = 0; i < count; ++i) {
    std::cout << "violation: " << sg_string_list_get(violations.get(), i) << "\n";
  }
  std::cerr << "sgraph: " << count << " violation" << (count == 1 ? "" : "s")
            << " in '" << flags->positional[0] << "'\n";
  return 1;
}

int cmd_view(int argc, char** argv) {
  std::string error;
  auto flags = parse_flags(argc, argv, 2, {"artifacts", "traces", "output"},
                           {"dot"}, error);
  if (!flags) return usage_error(error);
  if (flags->help) {
    std::cout << "usage: sgraph view FILE --artifacts LIST --traces LIST [--dot] [-o PATH]\n"
                 "Restricts the graph to the comma-separated artifact and trace types.\n";
    return 0;
  }
  if (flags->positional.size() != 1) return usage_error("view needs exactly one FILE");
  if (!flags->has("artifacts") || !flags->has("traces")) {
    return usage_error("view needs --artifacts and --traces");
  }

  sg_status status;
  GraphPtr graph = load_graph(flags->positional[0], status);
  if (!graph) return api_error(status);

  auto artifacts = split_csv(*flags->get("artifacts"));
  auto traces = split_csv(*flags->get("traces"));
  auto artifact_ptrs = c_strings(artifacts);
  auto trace_ptrs = c_strings(traces);
  sg_graph* raw_view = nullptr;
  status = sg_graph_view(graph.get(), artifact_ptrs.data(), artifact_ptrs.size(),
                         trace_ptrs.data(), trace_ptrs.size(), &raw_view);
  if (status != SG_OK) return api_error(status);
  GraphPtr result(raw_view);
  return emit_graph(result.get(), *flags);
}

int cmd_map(int argc, char** argv) {
  std::string error;
  auto flags = parse_flags(argc, argv, 2, {"preset", "relabel", "compose", "output"},
                           {"dot"}, error);
  if (!flags) return usage_error(error);
  if (flags->help) {
    std::cout
        << "usage: sgraph map FILE (--preset class-diagram | [--relabel A=B,...]\n"
           "                        [--compose X,Y=Z,...]) [--dot] [-o PATH]\n"
           "Rewrites edge types and/or closes edge compositions to a fixpoint.\n"
           "--relabel renames each edge of type A to type B. --compose adds an\n"
           "edge of type Z wherever an X edge is followed by a Y edge, repeated\n"
           "until nothing new appears. Relabeling runs before composition.\n";
    return 0;
  }
  if (flags->positional.size() != 1) return usage_error("map needs exactly one FILE");

  sg_status status;
  GraphPtr graph = load_graph(flags->positional[0], status);
  if (!graph) return api_error(status);

  if (const std::string* preset = flags->get("preset")) {
    if (flags->has("relabel") || flags->has("compose")) {
      return usage_error("--preset excludes --relabel/--compose");
    }
    if (*preset != "class-diagram") {
      return usage_error("unknown preset '" + *preset + "' (try class-diagram)");
    }
    sg_graph* raw = nullptr;
    status = sg_graph_class_diagram(graph.get(), &raw);
    if (status != SG_OK) return api_error(status);
    GraphPtr result(raw);
    return emit_graph(result.get(), *flags);
  }

  if (!flags->has("relabel") && !flags->has("compose")) {
    return usage_error("map needs --preset, --relabel or --compose");
  }

  GraphPtr current = std::move(graph);
  if (const std::string* spec = flags->get("relabel")) {
    std::vector<std::string> from, to;
    for (const auto& pair : split_csv(*spec)) {
      auto eq = pair.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 >= pair.size()) {
        return usage_error("bad --relabel entry '" + pair + "' (want FROM=TO)");
      }
      from.push_back(pair.substr(0, eq));
      to.push_back(pair.substr(eq + 1));
    }
    auto from_ptrs = c_strings(from);
    auto to_ptrs = c_strings(to);
    sg_graph* raw = nullptr;
    status = sg_graph_relabel(current.get(), from_ptrs.data(), to_ptrs.data(),
                              from_ptrs.size(), &raw);
    if (status != SG_OK) return api_error(status);
    current.reset(raw);
  }
  if (const std::string* spec = flags->get("compose")) {
    // Entries are X,Y=Z; the '=' token closes an entry, so X,Y=Z,P,Q=R parses
    // as two rules.
    std::vector<std::string> first, second, result_types;
    std::vector<std::string> pending;
    for (const auto& token : split_csv(*spec)) {
      auto eq = token.find('=');
      if (eq == std::string::npos) {
        pending.push_back(token);
        continue;
      }
      if (eq == 0 || eq + 1 >= token.size() || pending.size() != 1) {
        return usage_error("bad --compose entry near '" + token + "' (want X,Y=Z)");
      }
      first.push_back(pending[0]);
      second.push_back(token.substr(0, eq));
      result_types.push_back(token.substr(eq + 1));
      pending.clear();
    }
    if (!pending.empty()) {
      return usage_error("bad --compose value '" + *spec + "' (want X,Y=Z,...)");
    }
    auto first_ptrs = c_strings(first);
    auto second_ptrs = c_strings(second);
    auto result_ptrs = c_strings(result_types);
    sg_graph* raw = nullptr;
    status = sg_graph_compose_closure(current.get(), first_ptrs.data(),
                                      second_ptrs.data(), result_ptrs.data(),
                                      first_ptrs.size(), &raw);
    if (status != SG_OK) return api_error(status);
    current.reset(raw);
  }
  return emit_graph(current.get(), *flags);
}

int cmd_metric(int argc, char** argv) {
  std::string error;
  auto flags = parse_flags(argc, argv, 2,
                           {"type", "vertex", "direction", "source", "target",
                            "sources", "artifacts", "traces", "fail-below"},
                           {}, error);
  if (!flags) return usage_error(error);
  if (flags->help) {
    std::cout
        << "usage: sgraph metric FILE NAME [flags]\n"
           "metrics and their flags:\n"
           "  count_by_type  --type T\n"
           "  coupling       --vertex V --direction out|in|both [--artifacts LIST]\n"
           "                 [--traces LIST]\n"
           "  coverage       --source T --target T|all_others [--traces LIST]\n"
           "  reachable_from --sources LIST [--traces LIST]\n"
           "--fail-below X exits 1 when the value is below X.\n";
    return 0;
  }
  if (flags->positional.size() != 2) return usage_error("metric needs FILE and NAME");

  std::optional<double> threshold;
  if (const std::string* threshold_text = flags->get("fail-below")) {
    double parsed = 0.0;
    auto [ptr, ec] = std::from_chars(
        threshold_text->data(), threshold_text->data() + threshold_text->size(),
        parsed);
    if (ec != std::errc() || ptr != threshold_text->data() + threshold_text->size()) {
      return usage_error("bad --fail-below value '" + *threshold_text + "'");
    }
    threshold = parsed;
  }

  sg_status status;
  GraphPtr graph = load_graph(flags->positional[0], status);
  if (!graph) return api_error(status);

  std::vector<std::string> names, values;
  for (const char* key : {"type", "vertex", "direction", "source", "target",
                          "sources", "artifacts", "traces"}) {
    if (const std::string* v = flags->get(key)) {
      names.push_back(key);
      values.push_back(*v);
    }
  }
  auto name_ptrs = c_strings(names);
  auto value_ptrs = c_strings(values);
  sg_metric_result* raw = nullptr;
  status = sg_metric_evaluate(graph.get(), flags->positional[1].c_str(),
                              name_ptrs.data(), value_ptrs.data(),
                              name_ptrs.size(), &raw);
  if (status != SG_OK) return api_error(status);
  MetricPtr result(raw);

  std::string line = sg_metric_result_name(result.get());
  line += " " + format_value(sg_metric_result_value(result.get()));
  if (sg_metric_result_vacuous(result.get())) line += " vacuous";
  const size_t details = sg_metric_result_detail_count(result.get());
  if (details > 0) {
    const std::string name = sg_metric_result_name(result.get());
    line += name == "coverage" ? " uncovered: " : " reached: ";
    for (size_t i = 0; i < details; ++i) {
      if (i > 0) line += ",";
      line += sg_metric_result_detail(result.get(), i);
    }
  }
  std::cout << line << "\n";

  if (threshold && sg_metric_result_value(result.get()) < *threshold) {
    std::cerr << "sgraph: " << sg_metric_result_name(result.get()) << " "
              << format_value(sg_metric_result_value(result.get()))
              << " is below threshold " << format_value(*threshold) << "\n";
    return 1;
  }
  return 0;
}

int cmd_query(int argc, char** argv) {
  std::string error;
  auto flags = parse_flags(argc, argv, 2, {}, {}, error);
  if (!flags) return usage_error(error);
  if (flags->help) {
    std::cout << "usage: sgraph query FILE 'EXPR'\n"
                 "Prints the ids of vertices matching the query, one per line.\n"
                 "Example: sgraph query g.sg 'type:method and not in(verify, type:unit_test)'\n";
    return 0;
  }
  if (flags->positional.size() != 2) return usage_error("query needs FILE and EXPR");

  sg_status status;
  GraphPtr graph = load_graph(flags->positional[0], status);
  if (!graph) return api_error(status);

  sg_string_list* raw = nullptr;
  status = sg_query(graph.get(), flags->positional[1].c_str(), &raw);
  if (status != SG_OK) return api_error(status);
  ListPtr matches(raw);
  for (size_t i = 0; i < sg_string_list_count(matches.get()); ++i) {
    std::cout << sg_string_list_get(matches.get(), i) << "\n";
  }
  return 0;
}

int cmd_export(int argc, char** argv) {
  std::string error;
  auto flags = parse_flags(argc, argv, 2, {"cluster-by", "output"},
                           {"dot", "no-edge-labels"}, error);
  if (!flags) return usage_error(error);
  if (flags->help) {
    std::cout << "usage: sgraph export FILE [--dot] [--no-edge-labels]\n"
                 "                          [--cluster-by TYPE] [-o PATH]\n"
                 "Without --dot, re-emits FILE in canonical form.\n";
    return 0;
  }
  if (flags->positional.size() != 1) return usage_error("export needs exactly one FILE");

  sg_status status;
  GraphPtr graph = load_graph(flags->positional[0], status);
  if (!graph) return api_error(status);
  return emit_graph(graph.get(), *flags);
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << kUsage;
    return 2;
  }
  std::string command = argv[1];
  if (command == "--help" || command == "-h" || command == "help") {
    std::cout << kUsage;
    return 0;
  }
  if (command == "--version") {
    std::cout << "sgraph " << sg_version() << "\n";
    return 0;
  }
  if (command == "validate") return cmd_validate(argc, argv);
  if (command == "view") return cmd_view(argc, argv);
  if (command == "map") return cmd_map(argc, argv);
  if (command == "metric") return cmd_metric(argc, argv);
  if (command == "query") return cmd_query(argc, argv);
  if (command == "export") return cmd_export(argc, argv);
  return usage_error("unknown command '" + command + "' (see sgraph --help)");
}
