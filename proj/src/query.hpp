#pragma once

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>

#include "graph.hpp"

namespace softgraph {

// Query AST. Nodes select vertex sets: type/id predicates, boolean
// connectives, and one-hop traversal steps ("has a matching neighbor
// satisfying the subexpression").
struct QueryNode;
using QueryPtr = std::shared_ptr<const QueryNode>;

struct TypeIs {
  std::string type;
};
struct IdGlob {
  std::string pattern;  // literal chars plus '*' and '?' wildcards
};
struct And {
  QueryPtr lhs, rhs;
};
struct Or {
  QueryPtr lhs, rhs;
};
struct Not {
  QueryPtr operand;
};
struct Step {
  Direction dir;
  std::optional<std::set<std::string>> traces;  // nullopt = any trace
  QueryPtr operand;
};

struct QueryNode {
  std::variant<TypeIs, IdGlob, And, Or, Not, Step> value;
};

QueryPtr q_type(std::string type);
QueryPtr q_glob(std::string pattern);
QueryPtr q_and(QueryPtr lhs, QueryPtr rhs);
QueryPtr q_or(QueryPtr lhs, QueryPtr rhs);
QueryPtr q_not(QueryPtr operand);
QueryPtr q_step(Direction dir, std::optional<std::set<std::string>> traces,
                QueryPtr operand);

bool query_equal(const QueryPtr& a, const QueryPtr& b);

// Grammar:
//   query  := orExpr
//   orExpr := andExpr ( "or" andExpr )*
//   andExpr:= unary ( "and" unary )*
//   unary  := "not" unary | atom
//   atom   := "type:" IDENT | "id:" GLOB | stepFn | "(" query ")"
//   stepFn := ("out"|"in"|"both") "(" [ traceList "," ] query ")"
//   traceList := IDENT ( "|" IDENT )*
// Whitespace-insensitive between tokens. Failures throw ParseError with a
// 1-based line/column and the tokens that would have been accepted.
QueryPtr parse_query(std::string_view text);

// Canonical text for an AST; parsing it reproduces the AST exactly.
std::string print_query(const QueryPtr& query);

// Vertices of g satisfying the query. Type and trace names are checked
// against g's dictionary here, not at parse time.
std::set<std::string> eval_query(const SoftwareGraph& g, const QueryPtr& query);

bool glob_match(std::string_view pattern, std::string_view text);

}  // namespace softgraph
