#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "imp/syntax.hpp"

namespace imp {

/// Raised for any input outside the grammar. Positions are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected,
             std::string found);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
  std::string found_;
};

AExpr parse_aexpr(std::string_view text);
BExpr parse_bexpr(std::string_view text);
Assert parse_assert(std::string_view text);
Condition parse_condition(std::string_view text);

/// Annotated program; every loop needs its `[ invariant ]`.
AInstr parse_instr(std::string_view text);

/// Bare program; rejects `{ ... }` and `[ ... ]`.
Instr parse_bare(std::string_view text);

}  // namespace imp
