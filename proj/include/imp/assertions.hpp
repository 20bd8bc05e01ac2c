#pragma once

// Total evaluation under valuations, interpretation of assertions and
// conditions, substitution, predicate environments and sampled validity.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "imp/syntax.hpp"
#include "imp/valuation.hpp"

namespace imp {

Integer af_total(const Valuation& g, const AExpr& a);
bool bf_total(const Valuation& g, const BExpr& b);
std::vector<Integer> lf_total(const Valuation& g, const std::vector<AExpr>& args);

/// Replaces every occurrence of Var name by e.
AExpr subst_a(const AExpr& a, const Ident& name, const AExpr& e);
BExpr subst_b(const BExpr& b, const Ident& name, const AExpr& e);
Assert a_subst(const Assert& a, const Ident& name, const AExpr& e);

using Predicate = std::function<bool(std::span<const Integer>)>;

/// Named predicates. Lookup is first-match; an unbound name denotes the
/// constantly true predicate.
class PredEnv {
 public:
  PredEnv& bind(Ident name, Predicate p);

  const Predicate* find(const Ident& name) const;
  bool binds(const Ident& name) const { return find(name) != nullptr; }

 private:
  std::vector<std::pair<Ident, Predicate>> entries_;
};

/// The predicate denoted by name in m (constantly true when unbound).
Predicate f_p(const PredEnv& m, const Ident& name);

/// `le(a,b)` is a <= b and `pp(a,b)` is 2a = b(b+1); any other arity is false.
const PredEnv& builtin_pred_env();

bool i_a(const PredEnv& m, const Valuation& g, const Assert& a);
bool i_c(const PredEnv& m, const Valuation& g, const Condition& c);

/// Predicate names used by a and not bound in m.
std::vector<Ident> unbound_predicates(const PredEnv& m, const Assert& a);

// ---------------------------------------------------------------------------
// Sampled validity

struct SampleSpec {
  /// Every variable ranges over [-grid_radius, grid_radius] exhaustively...
  int grid_radius = 3;
  /// ...unless that grid exceeds grid_limit points, in which case grid_limit
  /// points are drawn from it at random.
  std::size_t grid_limit = 20000;
  /// Additional valuations mixing small, medium and wide magnitudes.
  std::size_t random_count = 1000;
  std::uint64_t seed = 0x5eed;
};

/// Boundary grid plus random valuations over the given variables.
std::vector<Valuation> structured_samples(const std::vector<Ident>& vars,
                                          const SampleSpec& spec = {});

struct SampledVerdict {
  std::optional<Valuation> counterexample;
  bool refuted() const { return counterexample.has_value(); }
};

/// First sample under which c fails, if any. Precondition: samples non-empty.
SampledVerdict valid_sampled(const PredEnv& m, const Condition& c,
                             std::span<const Valuation> samples);

/// Samples c over its own variables with the given spec.
SampledVerdict valid_sampled(const PredEnv& m, const Condition& c, const SampleSpec& spec = {});

}  // namespace imp
