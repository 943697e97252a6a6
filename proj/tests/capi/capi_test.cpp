// Exercises the shared library through its C surface only.

#include <cstring>
#include <string>
#include <thread>
#include <vector>

#include "doctest.h"
#include "softgraph.h"

namespace {

std::string sample_path() {
  return std::string(SOFTGRAPH_DATA_DIR) + "/sample.sg";
}

std::vector<std::string> to_strings(const sg_string_list* list) {
  std::vector<std::string> out;
  for (size_t i = 0; i < sg_string_list_count(list); ++i) {
    out.push_back(sg_string_list_get(list, i));
  }
  return out;
}

struct Graph {
  sg_graph* ptr = nullptr;
  ~Graph() { sg_graph_free(ptr); }
};

}  // namespace

TEST_CASE("construction and inspection through the C API") {
  Graph g;
  REQUIRE(sg_graph_new(&g.ptr) == SG_OK);
  CHECK(sg_graph_vertex_count(g.ptr) == 0);

  const char* class_only[] = {"class"};
  const char* method_only[] = {"method"};
  REQUIRE(sg_graph_add_vertex(g.ptr, "C1", class_only, 1) == SG_OK);
  REQUIRE(sg_graph_add_vertex(g.ptr, "ME1", method_only, 1) == SG_OK);
  REQUIRE(sg_graph_add_edge(g.ptr, "C1", "contain", "ME1") == SG_OK);
  CHECK(sg_graph_vertex_count(g.ptr) == 2);
  CHECK(sg_graph_edge_count(g.ptr) == 1);
  CHECK(sg_graph_has_vertex(g.ptr, "C1") == 1);
  CHECK(sg_graph_has_vertex(g.ptr, "nope") == 0);

  SUBCASE("error codes and messages") {
    CHECK(sg_graph_add_vertex(g.ptr, "C1", class_only, 1) == SG_ERROR_DUPLICATE);
    CHECK(std::string(sg_last_error()) == "duplicate vertex id 'C1'");
    const char* banana[] = {"banana"};
    CHECK(sg_graph_add_vertex(g.ptr, "X", banana, 1) == SG_ERROR_UNKNOWN_TYPE);
    CHECK(sg_graph_add_edge(g.ptr, "C1", "call", "nope") == SG_ERROR_NOT_FOUND);
    CHECK(sg_graph_add_edge(nullptr, "a", "b", "c") == SG_ERROR_INVALID_ARGUMENT);
    CHECK(sg_graph_new(nullptr) == SG_ERROR_INVALID_ARGUMENT);
    // A success clears the message.
    CHECK(sg_graph_add_edge(g.ptr, "C1", "contain", "ME1") == SG_OK);
    CHECK(std::string(sg_last_error()).empty());
  }

  SUBCASE("neighbors") {
    sg_string_list* out = nullptr;
    const char* contain[] = {"contain"};
    REQUIRE(sg_graph_neighbors(g.ptr, "C1", "out", contain, 1, nullptr, 0,
                               &out) == SG_OK);
    CHECK(to_strings(out) == std::vector<std::string>{"ME1"});
    sg_string_list_free(out);

    CHECK(sg_graph_neighbors(g.ptr, "C1", "sideways", nullptr, 0, nullptr, 0,
                             &out) == SG_ERROR_INVALID_ARGUMENT);
  }

  SUBCASE("validation is empty for mutation-built graphs") {
    sg_string_list* out = nullptr;
    REQUIRE(sg_graph_validate(g.ptr, &out) == SG_OK);
    CHECK(sg_string_list_count(out) == 0);
    sg_string_list_free(out);
  }

  SUBCASE("clone and equality") {
    Graph copy;
    REQUIRE(sg_graph_clone(g.ptr, &copy.ptr) == SG_OK);
    CHECK(sg_graph_equals(g.ptr, copy.ptr) == 1);
    REQUIRE(sg_graph_add_vertex(copy.ptr, "F1", class_only, 1) == SG_OK);
    CHECK(sg_graph_equals(g.ptr, copy.ptr) == 0);
  }
}

TEST_CASE("custom dictionaries through the C API") {
  const char* artifacts[] = {"service", "queue"};
  const char* traces[] = {"feeds"};
  Graph g;
  REQUIRE(sg_graph_new_with_dictionary(artifacts, 2, traces, 1, &g.ptr) == SG_OK);
  const char* service[] = {"service"};
  CHECK(sg_graph_add_vertex(g.ptr, "S1", service, 1) == SG_OK);

  sg_string_list* types = nullptr;
  REQUIRE(sg_graph_artifact_types(g.ptr, &types) == SG_OK);
  CHECK(to_strings(types) == std::vector<std::string>{"queue", "service"});
  sg_string_list_free(types);

  sg_graph* bad = nullptr;
  const char* malformed[] = {"Depends On"};
  CHECK(sg_graph_new_with_dictionary(malformed, 1, traces, 1, &bad) ==
        SG_ERROR_INVALID_ARGUMENT);
  CHECK(sg_graph_new_with_dictionary(artifacts, 0, traces, 1, &bad) ==
        SG_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("file and text round-trips through the C API") {
  Graph g;
  REQUIRE(sg_graph_parse_file(sample_path().c_str(), &g.ptr) == SG_OK);
  CHECK(sg_graph_vertex_count(g.ptr) == 10);
  CHECK(sg_graph_edge_count(g.ptr) == 10);

  char* text = nullptr;
  REQUIRE(sg_graph_serialize(g.ptr, &text) == SG_OK);
  Graph reparsed;
  REQUIRE(sg_graph_parse_string(text, &reparsed.ptr) == SG_OK);
  CHECK(sg_graph_equals(g.ptr, reparsed.ptr) == 1);
  sg_string_free(text);

  SUBCASE("missing file is an io error") {
    sg_graph* out = nullptr;
    CHECK(sg_graph_parse_file("/no/such/file.sg", &out) == SG_ERROR_IO);
  }
  SUBCASE("syntax errors carry the parse status") {
    sg_graph* out = nullptr;
    CHECK(sg_graph_parse_string("vertx A class\n", &out) == SG_ERROR_PARSE);
    CHECK(std::string(sg_last_error()).find("line 1") != std::string::npos);
  }
  SUBCASE("lenient parsing returns violations") {
    sg_graph* out = nullptr;
    sg_string_list* violations = nullptr;
    REQUIRE(sg_graph_parse_string_lenient("vertex B class\nedge A call B\n",
                                          &out, &violations) == SG_OK);
    Graph owned{out};
    CHECK(to_strings(violations) ==
          std::vector<std::string>{"unknown endpoint 'A' at line 2"});
    sg_string_list_free(violations);
  }
  SUBCASE("write_file then parse_file round-trips") {
    std::string path = std::string(SOFTGRAPH_BINARY_DIR) + "/capi_roundtrip.sg";
    REQUIRE(sg_graph_write_file(g.ptr, path.c_str()) == SG_OK);
    Graph back;
    REQUIRE(sg_graph_parse_file(path.c_str(), &back.ptr) == SG_OK);
    CHECK(sg_graph_equals(g.ptr, back.ptr) == 1);
  }
}

TEST_CASE("views and maps through the C API") {
  Graph g;
  REQUIRE(sg_graph_parse_file(sample_path().c_str(), &g.ptr) == SG_OK);

  const char* artifacts[] = {"class", "interface", "method", "field"};
  const char* traces[] = {"contain", "implement", "return"};

  SUBCASE("class view counts") {
    size_t vertices = 0, edges = 0;
    REQUIRE(sg_graph_view_stats(g.ptr, artifacts, 4, traces, 3, &vertices,
                                &edges) == SG_OK);
    CHECK(vertices == 6);
    CHECK(edges == 5);

    Graph v;
    REQUIRE(sg_graph_view(g.ptr, artifacts, 4, traces, 3, &v.ptr) == SG_OK);
    CHECK(sg_graph_vertex_count(v.ptr) == 6);
    CHECK(sg_graph_edge_count(v.ptr) == 5);
  }
  SUBCASE("unknown view types fail") {
    const char* depend[] = {"depend"};
    Graph v;
    CHECK(sg_graph_view(g.ptr, artifacts, 4, depend, 1, &v.ptr) ==
          SG_ERROR_UNKNOWN_TYPE);
  }
  SUBCASE("relabel, closure and the class diagram") {
    const char* from[] = {"contain", "return"};
    const char* to[] = {"depend", "depend"};
    Graph relabeled;
    REQUIRE(sg_graph_relabel(g.ptr, from, to, 2, &relabeled.ptr) == SG_OK);
    CHECK(sg_graph_edge_count(relabeled.ptr) == 10);

    const char* first[] = {"depend"};
    const char* second[] = {"depend"};
    const char* result[] = {"depend"};
    Graph closed;
    REQUIRE(sg_graph_compose_closure(relabeled.ptr, first, second, result, 1,
                                     &closed.ptr) == SG_OK);
    CHECK(sg_graph_edge_count(closed.ptr) == 17);

    Graph diagram;
    REQUIRE(sg_graph_class_diagram(g.ptr, &diagram.ptr) == SG_OK);
    char* text = nullptr;
    REQUIRE(sg_graph_serialize(diagram.ptr, &text) == SG_OK);
    CHECK(std::string(text) ==
          "trace-type depend\n"
          "vertex C1 class\n"
          "vertex C2 class\n"
          "edge C1 depend C2\n");
    sg_string_free(text);
  }
}

TEST_CASE("metrics, reachability and queries through the C API") {
  Graph g;
  REQUIRE(sg_graph_parse_file(sample_path().c_str(), &g.ptr) == SG_OK);

  SUBCASE("coverage with a verify filter") {
    const char* names[] = {"source", "target", "traces"};
    const char* values[] = {"unit_test", "method", "verify"};
    sg_metric_result* r = nullptr;
    REQUIRE(sg_metric_evaluate(g.ptr, "coverage", names, values, 3, &r) == SG_OK);
    CHECK(sg_metric_result_value(r) == 0.5);
    CHECK(std::string(sg_metric_result_name(r)) == "coverage");
    CHECK(std::string(sg_metric_result_scope(r)) == "graph");
    CHECK(sg_metric_result_vacuous(r) == 0);
    REQUIRE(sg_metric_result_detail_count(r) == 1);
    CHECK(std::string(sg_metric_result_detail(r, 0)) == "ME2");
    sg_metric_result_free(r);
  }
  SUBCASE("vacuous coverage") {
    Graph empty;
    REQUIRE(sg_graph_new(&empty.ptr) == SG_OK);
    const char* names[] = {"source", "target"};
    const char* values[] = {"unit_test", "method"};
    sg_metric_result* r = nullptr;
    REQUIRE(sg_metric_evaluate(empty.ptr, "coverage", names, values, 2, &r) == SG_OK);
    CHECK(sg_metric_result_value(r) == 1.0);
    CHECK(sg_metric_result_vacuous(r) == 1);
    sg_metric_result_free(r);
  }
  SUBCASE("unknown metric") {
    sg_metric_result* r = nullptr;
    CHECK(sg_metric_evaluate(g.ptr, "bogus", nullptr, nullptr, 0, &r) ==
          SG_ERROR_NOT_FOUND);
    CHECK(std::string(sg_last_error()).find("available:") != std::string::npos);
  }
  SUBCASE("reachable_from") {
    const char* sources[] = {"U1"};
    sg_string_list* out = nullptr;
    REQUIRE(sg_graph_reachable_from(g.ptr, sources, 1, nullptr, 0, &out) == SG_OK);
    CHECK(to_strings(out) ==
          std::vector<std::string>{"C2", "ME1", "ME2", "U1"});
    sg_string_list_free(out);
  }
  SUBCASE("query evaluation and canonical text") {
    sg_string_list* out = nullptr;
    REQUIRE(sg_query(g.ptr, "type:method and not in(verify, type:unit_test)",
                     &out) == SG_OK);
    CHECK(to_strings(out) == std::vector<std::string>{"ME2"});
    sg_string_list_free(out);

    char* canonical = nullptr;
    REQUIRE(sg_query_canonical("type:class   and  not( type:method )",
                               &canonical) == SG_OK);
    CHECK(std::string(canonical) == "type:class and not type:method");
    sg_string_free(canonical);

    CHECK(sg_query(g.ptr, "type:", &out) == SG_ERROR_PARSE);
    CHECK(sg_query(g.ptr, "type:banana", &out) == SG_ERROR_UNKNOWN_TYPE);
  }
  SUBCASE("dot rendering") {
    char* dot = nullptr;
    REQUIRE(sg_graph_to_dot(g.ptr, 1, nullptr, &dot) == SG_OK);
    CHECK(std::string(dot).find("digraph softgraph {") == 0);
    sg_string_free(dot);
    REQUIRE(sg_graph_to_dot(g.ptr, 0, "module", &dot) == SG_OK);
    CHECK(std::string(dot).find("subgraph \"cluster_module\"") != std::string::npos);
    sg_string_free(dot);
  }
}

TEST_CASE("error messages are thread-local") {
  Graph g;
  REQUIRE(sg_graph_new(&g.ptr) == SG_OK);
  const char* class_only[] = {"class"};
  REQUIRE(sg_graph_add_vertex(g.ptr, "A", class_only, 1) == SG_OK);

  // Each thread provokes a distinct failure; the recorded message must stay
  // the thread's own even while the others race.
  std::vector<std::string> seen(4);
  std::vector<std::thread> workers;
  for (int t = 0; t < 4; ++t) {
    workers.emplace_back([&, t] {
      std::string vertex = "dup" + std::to_string(t);
      const char* attrs[] = {"class"};
      sg_graph* local = nullptr;
      REQUIRE(sg_graph_new(&local) == SG_OK);
      Graph owned{local};
      REQUIRE(sg_graph_add_vertex(local, vertex.c_str(), attrs, 1) == SG_OK);
      for (int round = 0; round < 200; ++round) {
        CHECK(sg_graph_add_vertex(local, vertex.c_str(), attrs, 1) ==
              SG_ERROR_DUPLICATE);
      }
      seen[t] = sg_last_error();
    });
  }
  for (auto& w : workers) w.join();
  for (int t = 0; t < 4; ++t) {
    CHECK(seen[t] == "duplicate vertex id 'dup" + std::to_string(t) + "'");
  }

  // Concurrent read-only analysis of one shared graph through the C API.
  std::vector<std::thread> readers;
  std::vector<int> bad(4, 0);
  for (int t = 0; t < 4; ++t) {
    readers.emplace_back([&, t] {
      for (int round = 0; round < 100; ++round) {
        sg_string_list* out = nullptr;
        if (sg_query(g.ptr, "type:class", &out) != SG_OK ||
            sg_string_list_count(out) != 1) {
          ++bad[t];
        }
        sg_string_list_free(out);
      }
    });
  }
  for (auto& w : readers) w.join();
  for (int t = 0; t < 4; ++t) CHECK(bad[t] == 0);
}
