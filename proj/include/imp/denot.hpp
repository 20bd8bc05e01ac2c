#pragma once

// Denotational semantics by finite Kleene iteration. A loop denotes the least
// fixpoint of its functional; here we only ever compute the n-th
// approximation, starting from the everywhere-undefined function.

#include <cstdint>
#include <functional>
#include <optional>
#include <variant>

#include "imp/concrete.hpp"
#include "imp/syntax.hpp"

namespace imp {

struct Bottom {
  enum class Reason { Error, Unknown };
  Reason reason;
  bool operator==(const Bottom&) const = default;
};

/// Done, or undefined: Error for a runtime error, Unknown when the
/// approximation has not reached an answer yet.
using DenotResult = std::variant<Done, Bottom>;

using Denotation = std::function<DenotResult(const Env&)>;

struct LoopFunctional {
  std::function<std::optional<bool>(const Env&)> test;
  Denotation body;
};

/// One application of the functional: r -> if test r then bind(body r, g) else r.
Denotation apply_functional(const LoopFunctional& f, Denotation g);

/// The n-th Kleene approximant (functional applied n times to bottom) at r.
DenotResult phi_approx(std::uint64_t n, const LoopFunctional& f, const Env& r);

/// Compositional semantics where every loop gets `fuel` approximation steps.
/// Uses the same budget as exec_fuel: ds_fuel(k, i, r) and exec_fuel(k, r, i)
/// agree on every input.
DenotResult ds_fuel(std::uint64_t fuel, const Instr& i, const Env& r);

}  // namespace imp
