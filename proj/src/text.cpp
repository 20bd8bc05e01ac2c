#include "text.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace imp::text {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_items(std::string_view s) {
  std::vector<std::string_view> items;
  if (trim(s).empty()) return items;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] == '[') ++depth;
    else if (s[k] == ']') --depth;
    else if (s[k] == ',' && depth == 0) {
      items.push_back(trim(s.substr(start, k - start)));
      start = k + 1;
    }
  }
  items.push_back(trim(s.substr(start)));
  return items;
}

std::pair<std::string_view, std::string_view> split_binding(std::string_view item) {
  auto eq = item.find('=');
  if (eq == std::string_view::npos) {
    throw std::invalid_argument("expected name=value, got '" + std::string(item) + "'");
  }
  return {trim(item.substr(0, eq)), trim(item.substr(eq + 1))};
}

}  // namespace imp::text
