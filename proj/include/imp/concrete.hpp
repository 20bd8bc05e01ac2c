#pragma once

// Concrete semantics: environments, partial expression evaluation, update,
// and the fuel-bounded big-step interpreter.

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "imp/syntax.hpp"
#include "imp/valuation.hpp"

namespace imp {

struct Binding {
  Ident name;
  Integer value;
  bool operator==(const Binding&) const = default;
};

/// Ordered bindings. Lookup is first-match, so later duplicates are shadowed.
class Env {
 public:
  Env() = default;
  Env(std::initializer_list<Binding> bindings) : bindings_(bindings) {}
  explicit Env(std::vector<Binding> bindings) : bindings_(std::move(bindings)) {}

  const std::vector<Binding>& bindings() const { return bindings_; }
  std::vector<Ident> names() const;
  bool empty() const { return bindings_.empty(); }

  bool operator==(const Env&) const = default;

 private:
  std::vector<Binding> bindings_;
};

/// Child indices from the root: Seq/ASeq children are 0 and 1, loop bodies
/// and Prec bodies are 0.
using ProgramPoint = std::vector<std::size_t>;

/// "/" for the root, "/1/0" for the first child of the second child.
std::string to_string(const ProgramPoint& at);

enum class ErrorKind { UnboundRead, UnboundWrite };

struct Done {
  Env env;
  bool operator==(const Done&) const = default;
};

struct RuntimeError {
  ErrorKind kind;
  Ident name;
  ProgramPoint at;
  bool operator==(const RuntimeError&) const = default;
};

struct OutOfFuel {
  bool operator==(const OutOfFuel&) const = default;
};

using ExecOutcome = std::variant<Done, RuntimeError, OutOfFuel>;

using Fuel = std::uint64_t;

std::optional<Integer> lookup(const Env& r, const Ident& name);
std::optional<Integer> af(const Env& r, const AExpr& a);
std::optional<bool> bf(const Env& r, const BExpr& b);

/// Rewrites the first binding of name; nullopt when name is unbound.
std::optional<Env> update(const Env& r, const Ident& name, Integer value);

/// First variable of a (left to right) with no binding in r.
std::optional<Ident> first_unbound(const Env& r, const AExpr& a);
std::optional<Ident> first_unbound(const Env& r, const BExpr& b);

/// Runs i from r. Every execution of a loop may unfold at most `fuel` times,
/// one unfolding per evaluation of its test, so k iterations need k + 1.
/// A loop nested in a body gets a fresh budget each time it is entered.
ExecOutcome exec_fuel(Fuel fuel, const Env& r, const Instr& i);

/// Valuation that reads r where r binds a name (first match) and g elsewhere.
Valuation env_overlay(const Env& r, const Valuation& g);

/// `name=value` comma list, e.g. `x=0,y=0,n=3`; empty text is the empty env.
std::string format_env(const Env& r);

/// Throws std::invalid_argument on malformed text.
Env parse_env(std::string_view text);

}  // namespace imp
