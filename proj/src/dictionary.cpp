#include "dictionary.hpp"

#include "error.hpp"

namespace softgraph {

namespace {

bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_alpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

void add_checked(std::set<std::string>& out, const std::string& name,
                 const char* kind) {
  if (!is_canonical_type_name(name)) {
    throw Error(ErrorCode::InvalidArgument,
                std::string(kind) + " type '" + name +
                    "' is not a canonical identifier ([a-z][a-z0-9_-]*)");
  }
  if (!out.insert(name).second) {
    throw Error(ErrorCode::Duplicate,
                std::string("duplicate ") + kind + " type '" + name + "'");
  }
}

}  // namespace

bool is_canonical_type_name(std::string_view name) {
  if (name.empty() || !is_lower(name[0])) return false;
  for (char c : name.substr(1)) {
    if (!is_lower(c) && !is_digit(c) && c != '_' && c != '-') return false;
  }
  return true;
}

bool is_valid_vertex_id(std::string_view id) {
  if (id.empty()) return false;
  for (char c : id) {
    if (!is_alpha(c) && !is_digit(c) && c != '_' && c != '-' && c != '.') {
      return false;
    }
  }
  return true;
}

TypeDictionary make_dictionary(const std::vector<std::string>& artifact_types,
                               const std::vector<std::string>& trace_types) {
  TypeDictionary dict;
  for (const auto& a : artifact_types) add_checked(dict.artifact_types, a, "artifact");
  for (const auto& t : trace_types) add_checked(dict.trace_types, t, "trace");
  check_dictionary(dict);
  return dict;
}

void check_dictionary(const TypeDictionary& dict) {
  if (dict.artifact_types.empty()) {
    throw Error(ErrorCode::InvalidArgument, "dictionary has no artifact types");
  }
  if (dict.trace_types.empty()) {
    throw Error(ErrorCode::InvalidArgument, "dictionary has no trace types");
  }
  for (const auto& a : dict.artifact_types) {
    if (!is_canonical_type_name(a)) {
      throw Error(ErrorCode::InvalidArgument,
                  "artifact type '" + a + "' is not a canonical identifier");
    }
  }
  for (const auto& t : dict.trace_types) {
    if (!is_canonical_type_name(t)) {
      throw Error(ErrorCode::InvalidArgument,
                  "trace type '" + t + "' is not a canonical identifier");
    }
  }
}

const TypeDictionary& default_dictionary() {
  static const TypeDictionary dict = {
      {
          "class",
          "coding_standard",
          "field",
          "grammar",
          "interface",
          "library",
          "method",
          "module",
          "requirement",
          "test_suite",
          "unit_test",
          "use_case",
      },
      {
          "apply_to",
          "call",
          "contain",
          "define",
          "depend_on",
          "generate",
          "implement",
          "limit",
          "require",
          "return",
          "use",
          "verify",
      },
  };
  return dict;
}

}  // namespace softgraph
