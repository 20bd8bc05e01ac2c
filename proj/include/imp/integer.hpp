#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace imp {

/// Unbounded integers; the language has no overflow.
using Integer = boost::multiprecision::cpp_int;

std::string to_string(const Integer& n);

/// Parses an optionally '-'-prefixed decimal literal. Returns nullopt on
/// anything else (no leading '+', no whitespace).
std::optional<Integer> parse_integer(std::string_view text);

}  // namespace imp
