#pragma once

#include <map>
#include <string>
#include <string_view>

#include "imp/syntax.hpp"

namespace imp {

/// Total map from identifiers to integers: a finite override table over a
/// default of zero.
class Valuation {
 public:
  Valuation() = default;
  Valuation(std::initializer_list<std::pair<const Ident, Integer>> entries) : table_(entries) {}

  Integer operator()(const Ident& name) const {
    auto it = table_.find(name);
    return it == table_.end() ? Integer(0) : it->second;
  }

  void set(const Ident& name, Integer value) { table_[name] = std::move(value); }

  const std::map<Ident, Integer>& table() const { return table_; }

  /// Two valuations are equal when they agree as total functions.
  friend bool operator==(const Valuation& a, const Valuation& b);

 private:
  std::map<Ident, Integer> table_;
};

/// `name=value` comma list in name order; zero entries are kept as written.
std::string format_valuation(const Valuation& g);

/// Inverse of format_valuation. Throws std::invalid_argument.
Valuation parse_valuation(std::string_view text);

}  // namespace imp
