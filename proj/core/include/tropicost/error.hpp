#pragma once

#include <stdexcept>
#include <string>

namespace tropicost {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised by the text-format parsers with a 1-based source position.
struct ParseError : Error {
  ParseError(const std::string& msg, int line, int column = 0)
      : Error("line " + std::to_string(line) +
              (column > 0 ? ":" + std::to_string(column) : "") + ": " + msg),
        line(line),
        column(column) {}
  int line;
  int column;
};

// Raised when an enumeration would exceed its walk budget. Callers must treat
// this as "answer unknown", never as an answer.
struct BudgetError : Error {
  using Error::Error;
};

}  // namespace tropicost
