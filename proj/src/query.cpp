#include "query.hpp"

#include <vector>

#include "error.hpp"

namespace softgraph {

QueryPtr q_type(std::string type) {
  return std::make_shared<QueryNode>(QueryNode{TypeIs{std::move(type)}});
}
QueryPtr q_glob(std::string pattern) {
  return std::make_shared<QueryNode>(QueryNode{IdGlob{std::move(pattern)}});
}
QueryPtr q_and(QueryPtr lhs, QueryPtr rhs) {
  return std::make_shared<QueryNode>(QueryNode{And{std::move(lhs), std::move(rhs)}});
}
QueryPtr q_or(QueryPtr lhs, QueryPtr rhs) {
  return std::make_shared<QueryNode>(QueryNode{Or{std::move(lhs), std::move(rhs)}});
}
QueryPtr q_not(QueryPtr operand) {
  return std::make_shared<QueryNode>(QueryNode{Not{std::move(operand)}});
}
QueryPtr q_step(Direction dir, std::optional<std::set<std::string>> traces,
                QueryPtr operand) {
  if (traces && traces->empty()) {
    // The grammar has no form for an empty trace list; "any trace" is the
    // absent list.
    throw Error(ErrorCode::InvalidArgument, "step trace list cannot be empty");
  }
  return std::make_shared<QueryNode>(
      QueryNode{Step{dir, std::move(traces), std::move(operand)}});
}

bool query_equal(const QueryPtr& a, const QueryPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->value.index() != b->value.index()) return false;
  return std::visit(
      [&](const auto& lhs) -> bool {
        using T = std::decay_t<decltype(lhs)>;
        const auto& rhs = std::get<T>(b->value);
        if constexpr (std::is_same_v<T, TypeIs>) {
          return lhs.type == rhs.type;
        } else if constexpr (std::is_same_v<T, IdGlob>) {
          return lhs.pattern == rhs.pattern;
        } else if constexpr (std::is_same_v<T, And> || std::is_same_v<T, Or>) {
          return query_equal(lhs.lhs, rhs.lhs) && query_equal(lhs.rhs, rhs.rhs);
        } else if constexpr (std::is_same_v<T, Not>) {
          return query_equal(lhs.operand, rhs.operand);
        } else {
          return lhs.dir == rhs.dir && lhs.traces == rhs.traces &&
                 query_equal(lhs.operand, rhs.operand);
        }
      },
      a->value);
}

bool glob_match(std::string_view pattern, std::string_view text) {
  std::size_t pi = 0, ti = 0;
  std::size_t star = std::string_view::npos, star_ti = 0;
  while (ti < text.size()) {
    if (pi < pattern.size() &&
        (pattern[pi] == '?' || pattern[pi] == text[ti])) {
      ++pi;
      ++ti;
    } else if (pi < pattern.size() && pattern[pi] == '*') {
      star = pi++;
      star_ti = ti;
    } else if (star != std::string_view::npos) {
      pi = star + 1;
      ti = ++star_ti;
    } else {
      return false;
    }
  }
  while (pi < pattern.size() && pattern[pi] == '*') ++pi;
  return pi == pattern.size();
}

namespace {

enum class TokenKind { Word, Prefix, LParen, RParen, Comma, Pipe, End };

struct Token {
  TokenKind kind;
  std::string text;
  int line;
  int column;
};

bool is_word_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_' || c == '-' || c == '.' ||
         c == '*' || c == '?';
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> tokens;
  int line = 1, column = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      column = 1;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++column;
      ++i;
      continue;
    }
    int start_column = column;
    if (c == '(' || c == ')' || c == ',' || c == '|') {
      TokenKind kind = c == '(' ? TokenKind::LParen
                       : c == ')' ? TokenKind::RParen
                       : c == ',' ? TokenKind::Comma
                                  : TokenKind::Pipe;
      tokens.push_back({kind, std::string(1, c), line, start_column});
      ++column;
      ++i;
      continue;
    }
    if (is_word_char(c)) {
      std::size_t begin = i;
      while (i < text.size() && is_word_char(text[i])) {
        ++i;
        ++column;
      }
      std::string word(text.substr(begin, i - begin));
      if (i < text.size() && text[i] == ':') {
        // "type:" / "id:" style prefixes are single tokens.
        ++i;
        ++column;
        tokens.push_back({TokenKind::Prefix, std::move(word), line, start_column});
      } else {
        tokens.push_back({TokenKind::Word, std::move(word), line, start_column});
      }
      continue;
    }
    throw ParseError("query parse error at " + std::to_string(line) + ":" +
                         std::to_string(column) + ": unexpected character '" +
                         std::string(1, c) + "'",
                     line, column);
  }
  tokens.push_back({TokenKind::End, "", line, column});
  return tokens;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(lex(text)) {}

  QueryPtr parse() {
    if (peek().kind == TokenKind::End) {
      fail("an expression (query is empty)");
    }
    QueryPtr q = parse_or();
    if (peek().kind != TokenKind::End) {
      fail("'and', 'or' or end of query");
    }
    return q;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    std::size_t i = pos_ + ahead;
    return i < tokens_.size() ? tokens_[i] : tokens_.back();
  }
  Token take() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const std::string& expected) const {
    const Token& t = peek();
    std::string found = t.kind == TokenKind::End
                            ? "end of query"
                            : "'" + t.text + (t.kind == TokenKind::Prefix ? ":" : "") + "'";
    throw ParseError("query parse error at " + std::to_string(t.line) + ":" +
                         std::to_string(t.column) + ": expected " + expected +
                         ", found " + found,
                     t.line, t.column);
  }

  bool at_word(std::string_view w) const {
    return peek().kind == TokenKind::Word && peek().text == w;
  }

  void expect(TokenKind kind, const std::string& expected) {
    if (peek().kind != kind) fail(expected);
    take();
  }

  QueryPtr parse_or() {
    QueryPtr lhs = parse_and();
    while (at_word("or")) {
      take();
      lhs = q_or(std::move(lhs), parse_and());
    }
    return lhs;
  }

  QueryPtr parse_and() {
    QueryPtr lhs = parse_unary();
    while (at_word("and")) {
      take();
      lhs = q_and(std::move(lhs), parse_unary());
    }
    return lhs;
  }

  QueryPtr parse_unary() {
    if (at_word("not")) {
      take();
      return q_not(parse_unary());
    }
    return parse_atom();
  }

  std::string expect_type_name(const char* what) {
    if (peek().kind != TokenKind::Word || !is_canonical_type_name(peek().text)) {
      fail(std::string(what) + " identifier ([a-z][a-z0-9_-]*)");
    }
    return take().text;
  }

  QueryPtr parse_atom() {
    const Token& t = peek();
    if (t.kind == TokenKind::Prefix) {
      if (t.text == "type") {
        take();
        return q_type(expect_type_name("artifact type"));
      }
      if (t.text == "id") {
        take();
        if (peek().kind != TokenKind::Word) fail("id pattern after 'id:'");
        return q_glob(take().text);
      }
      fail("'type:' or 'id:'");
    }
    if (t.kind == TokenKind::LParen) {
      take();
      QueryPtr q = parse_or();
      expect(TokenKind::RParen, "')'");
      return q;
    }
    if (t.kind == TokenKind::Word) {
      auto dir = direction_from_string(t.text);
      if (dir && peek(1).kind == TokenKind::LParen) {
        take();
        take();  // '('
        std::optional<std::set<std::string>> traces;
        // A word followed by '|' or ',' is a trace list, not a subquery.
        if (peek().kind == TokenKind::Word &&
            (peek(1).kind == TokenKind::Pipe || peek(1).kind == TokenKind::Comma)) {
          std::set<std::string> list;
          list.insert(expect_type_name("trace type"));
          while (peek().kind == TokenKind::Pipe) {
            take();
            list.insert(expect_type_name("trace type"));
          }
          expect(TokenKind::Comma, "','");
          traces = std::move(list);
        }
        QueryPtr sub = parse_or();
        expect(TokenKind::RParen, "')'");
        return q_step(*dir, std::move(traces), std::move(sub));
      }
      if (dir) {
        take();
        fail(std::string("'(' after '") + t.text + "'");
      }
    }
    fail("'type:', 'id:', 'out', 'in', 'both', 'not' or '('");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

int precedence(const QueryNode& n) {
  if (std::holds_alternative<Or>(n.value)) return 0;
  if (std::holds_alternative<And>(n.value)) return 1;
  if (std::holds_alternative<Not>(n.value)) return 2;
  return 3;
}

void print_node(const QueryPtr& q, int required, std::string& out) {
  const bool parens = precedence(*q) < required;
  if (parens) out += '(';
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, TypeIs>) {
          out += "type:";
          out += node.type;
        } else if constexpr (std::is_same_v<T, IdGlob>) {
          out += "id:";
          out += node.pattern;
        } else if constexpr (std::is_same_v<T, Or>) {
          print_node(node.lhs, 0, out);
          out += " or ";
          print_node(node.rhs, 1, out);
        } else if constexpr (std::is_same_v<T, And>) {
          print_node(node.lhs, 1, out);
          out += " and ";
          print_node(node.rhs, 2, out);
        } else if constexpr (std::is_same_v<T, Not>) {
          out += "not ";
          print_node(node.operand, 2, out);
        } else {
          out += to_string(node.dir);
          out += '(';
          if (node.traces) {
            bool first = true;
            for (const auto& t : *node.traces) {
              if (!first) out += '|';
              out += t;
              first = false;
            }
            out += ", ";
          }
          print_node(node.operand, 0, out);
          out += ')';
        }
      },
      q->value);
  if (parens) out += ')';
}

}  // namespace

QueryPtr parse_query(std::string_view text) { return Parser(text).parse(); }

std::string print_query(const QueryPtr& query) {
  std::string out;
  print_node(query, 0, out);
  return out;
}

namespace {

std::set<std::string> eval_node(const SoftwareGraph& g, const QueryPtr& q) {
  return std::visit(
      [&](const auto& node) -> std::set<std::string> {
        using T = std::decay_t<decltype(node)>;
        std::set<std::string> result;
        if constexpr (std::is_same_v<T, TypeIs>) {
          if (!g.dict().has_artifact_type(node.type)) {
            throw Error(ErrorCode::UnknownType,
                        "unknown artifact type '" + node.type + "' in query");
          }
          for (const auto& [id, attrs] : g.labels()) {
            if (attrs.count(node.type) != 0) result.insert(id);
          }
        } else if constexpr (std::is_same_v<T, IdGlob>) {
          for (const auto& [id, attrs] : g.labels()) {
            if (glob_match(node.pattern, id)) result.insert(id);
          }
        } else if constexpr (std::is_same_v<T, And>) {
          auto lhs = eval_node(g, node.lhs);
          auto rhs = eval_node(g, node.rhs);
          for (const auto& id : lhs) {
            if (rhs.count(id) != 0) result.insert(id);
          }
        } else if constexpr (std::is_same_v<T, Or>) {
          result = eval_node(g, node.lhs);
          auto rhs = eval_node(g, node.rhs);
          result.insert(rhs.begin(), rhs.end());
        } else if constexpr (std::is_same_v<T, Not>) {
          auto operand = eval_node(g, node.operand);
          for (const auto& [id, attrs] : g.labels()) {
            if (operand.count(id) == 0) result.insert(id);
          }
        } else {
          if (node.traces) {
            for (const auto& t : *node.traces) {
              if (!g.dict().has_trace_type(t)) {
                throw Error(ErrorCode::UnknownType,
                            "unknown trace type '" + t + "' in query");
              }
            }
          }
          auto satisfied = eval_node(g, node.operand);
          for (const auto& e : g.edges()) {
            if (node.traces && node.traces->count(e.trace) == 0) continue;
            if ((node.dir == Direction::Out || node.dir == Direction::Both) &&
                satisfied.count(e.dst) != 0) {
              result.insert(e.src);
            }
            if ((node.dir == Direction::In || node.dir == Direction::Both) &&
                satisfied.count(e.src) != 0) {
              result.insert(e.dst);
            }
          }
        }
        return result;
      },
      q->value);
}

}  // namespace

std::set<std::string> eval_query(const SoftwareGraph& g, const QueryPtr& query) {
  return eval_node(g, query);
}

}  // namespace softgraph
