#pragma once

#include <stdexcept>
#include <string>

namespace softgraph {

enum class ErrorCode {
  InvalidArgument,
  UnknownType,
  Duplicate,
  NotFound,
  Parse,
  Io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Parse failure with a 1-based source position. column == 0 means the
// position is line-granular (the .sg reader); queries always carry a column.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column = 0)
      : Error(ErrorCode::Parse, message), line_(line), column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace softgraph
