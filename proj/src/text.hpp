#pragma once

// Helpers for the `name=value` comma-list formats used on the command line.

#include <string_view>
#include <utility>
#include <vector>

namespace imp::text {

std::string_view trim(std::string_view s);

/// Splits on commas that are not inside square brackets. Empty (all-blank)
/// input yields no items.
std::vector<std::string_view> split_items(std::string_view s);

/// Splits `name=value` at the first '='; throws std::invalid_argument.
std::pair<std::string_view, std::string_view> split_binding(std::string_view item);

}  // namespace imp::text
