#pragma once

#include <cstddef>
#include <string>

#include "probsat/errors.hpp"

namespace probsat::io {

struct ParseDiagnostic {
  std::size_t line = 1;
  std::size_t column = 1;
  std::string message;

  std::string to_string() const {
    return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
  }
};

enum class ParseErrorKind {
  missing_header,
  malformed_header,
  malformed_literal,
  var_out_of_range,
  trailing_garbage,
  syntax_error,
};

class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, ParseDiagnostic diag)
      : Error(diag.to_string()), kind_(kind), diag_(std::move(diag)) {}

  ParseErrorKind kind() const noexcept { return kind_; }
  const ParseDiagnostic& diagnostic() const noexcept { return diag_; }

 private:
  ParseErrorKind kind_;
  ParseDiagnostic diag_;
};

}  // namespace probsat::io
