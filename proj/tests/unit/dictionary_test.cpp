#include "dictionary.hpp"

#include "doctest.h"
#include "error.hpp"

using namespace softgraph;

TEST_CASE("default dictionary holds the built-in artifact and trace kinds") {
  const TypeDictionary& dict = default_dictionary();
  CHECK(dict.artifact_types ==
        std::set<std::string>{"class", "coding_standard", "field", "grammar",
                              "interface", "library", "method", "module",
                              "requirement", "test_suite", "unit_test",
                              "use_case"});
  CHECK(dict.trace_types ==
        std::set<std::string>{"apply_to", "call", "contain", "define",
                              "depend_on", "generate", "implement", "limit",
                              "require", "return", "use", "verify"});
}

TEST_CASE("canonical type names") {
  CHECK(is_canonical_type_name("class"));
  CHECK(is_canonical_type_name("unit_test"));
  CHECK(is_canonical_type_name("depend-on2"));
  CHECK_FALSE(is_canonical_type_name(""));
  CHECK_FALSE(is_canonical_type_name("Depends On"));
  CHECK_FALSE(is_canonical_type_name("Class"));
  CHECK_FALSE(is_canonical_type_name("2class"));
  CHECK_FALSE(is_canonical_type_name("_class"));
  CHECK_FALSE(is_canonical_type_name("uses space"));
}

TEST_CASE("vertex id charset") {
  CHECK(is_valid_vertex_id("C1"));
  CHECK(is_valid_vertex_id("pkg.Main-v2_x"));
  CHECK_FALSE(is_valid_vertex_id(""));
  CHECK_FALSE(is_valid_vertex_id("a b"));
  CHECK_FALSE(is_valid_vertex_id("a#b"));
}

TEST_CASE("make_dictionary rejects invalid input") {
  CHECK_THROWS_AS(make_dictionary({}, {"call"}), Error);
  CHECK_THROWS_AS(make_dictionary({"class"}, {}), Error);
  CHECK_THROWS_AS(make_dictionary({"class"}, {"Depends On"}), Error);
  CHECK_THROWS_AS(make_dictionary({"class", "class"}, {"call"}), Error);

  auto dict = make_dictionary({"class"}, {"call", "use"});
  CHECK(dict.artifact_types.size() == 1);
  CHECK(dict.trace_types.size() == 2);
}
