#pragma once

#include <string>

#include "imp/syntax.hpp"

namespace imp {

// Canonical concrete syntax. Output always parses back to the same tree:
// nested `+` right operands, left-nested `/\` and left-nested `;` get
// parentheses, everything else relies on the grammar's associativity.

std::string pretty(const AExpr& a);
std::string pretty(const BExpr& b);
std::string pretty(const Instr& i);
std::string pretty(const Assert& a);
std::string pretty(const Condition& c);
std::string pretty(const AInstr& i);

}  // namespace imp
