#pragma once

// Abstract interpreter over a pluggable value domain. Produces an annotated
// program whose Prec annotations describe the abstract state reaching each
// point, plus the abstract state at exit (nullopt: exit is unreachable).
//
// Loops use a three-stage strategy: check whether the entry state is already
// stable, else widen once and re-check, else give every variable top.

#include <concepts>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "imp/syntax.hpp"

namespace imp {

template <class D>
concept AbstractDomain =
    std::equality_comparable<typename D::Value> &&
    requires(const typename D::Value& v, const Integer& n, const Ident& x) {
      { D::top() } -> std::same_as<typename D::Value>;
      { D::from_const(n) } -> std::same_as<typename D::Value>;
      { D::add(v, v) } -> std::same_as<typename D::Value>;
      { D::included(v, v) } -> std::same_as<bool>;
      { D::join(v, v) } -> std::same_as<typename D::Value>;
      { D::widen(v, v) } -> std::same_as<typename D::Value>;
      { D::restrict_lt(v, v) } -> std::same_as<std::optional<typename D::Value>>;
      { D::restrict_ge(v, v) } -> std::same_as<std::optional<typename D::Value>>;
      { D::to_assert(v, x) } -> std::same_as<Assert>;
    };

template <class V>
struct AbBinding {
  Ident name;
  V value;
  bool operator==(const AbBinding&) const = default;
};

/// Ordered abstract bindings with distinct names.
template <class V>
class AbEnv {
 public:
  AbEnv() = default;
  AbEnv(std::initializer_list<AbBinding<V>> bindings) : bindings_(bindings) {}
  explicit AbEnv(std::vector<AbBinding<V>> bindings) : bindings_(std::move(bindings)) {}

  const std::vector<AbBinding<V>>& bindings() const { return bindings_; }
  std::vector<AbBinding<V>>& bindings() { return bindings_; }

  std::vector<Ident> names() const {
    std::vector<Ident> out;
    for (const auto& b : bindings_) out.push_back(b.name);
    return out;
  }

  const V* find(const Ident& name) const {
    for (const auto& b : bindings_) {
      if (b.name == name) return &b.value;
    }
    return nullptr;
  }

  bool operator==(const AbEnv&) const = default;

 private:
  std::vector<AbBinding<V>> bindings_;
};

/// Raised when environments with different name sequences are combined.
class DomainMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An abstract environment that does not bind a variable the program uses.
class AnalysisSetupError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <AbstractDomain D>
class Analyzer {
 public:
  using Value = typename D::Value;
  using Env = AbEnv<Value>;

  struct Result {
    AInstr annotated;
    std::optional<Env> env;
  };

  using BodyFn = std::function<Result(const Env&)>;
  /// Called once per analysed loop with its entry env, test, body and the
  /// value returned by fp.
  using LoopObserver =
      std::function<void(const Env& entry, const BExpr& test, const Instr& body, const Result&)>;

  static Value ab_lookup(const Env& l, const Ident& name) {
    const Value* v = l.find(name);
    return v ? *v : D::top();
  }

  template <class Lookup>
  static Value ab_eval(const Lookup& lookup_fn, const AExpr& a) {
    return std::visit(Overloaded{
                          [&](const Var& v) -> Value { return lookup_fn(v.name); },
                          [](const Num& n) -> Value { return D::from_const(n.value); },
                          [&](const Plus& p) -> Value {
                            return D::add(ab_eval(lookup_fn, p.lhs), ab_eval(lookup_fn, p.rhs));
                          },
                      },
                      a.node());
  }

  static Value ab_eval(const Env& l, const AExpr& a) {
    return ab_eval([&](const Ident& name) { return ab_lookup(l, name); }, a);
  }

  static Env ab_update(const Env& l, const Ident& name, Value v) {
    Env out = l;
    for (auto& b : out.bindings()) {
      if (b.name == name) {
        b.value = std::move(v);
        return out;
      }
    }
    throw AnalysisSetupError("variable '" + name + "' is not bound in the abstract environment");
  }

  static Env join_env(const Env& a, const Env& b) {
    return pointwise(a, b, [](const Value& x, const Value& y) { return D::join(x, y); });
  }

  static Env widen_env(const Env& a, const Env& b) {
    return pointwise(a, b, [](const Value& x, const Value& y) { return D::widen(x, y); });
  }

  /// Pointwise inclusion over identical name sequences.
  static bool included_env(const Env& a, const Env& b) {
    require_same_names(a, b);
    for (std::size_t k = 0; k < a.bindings().size(); ++k) {
      if (!D::included(a.bindings()[k].value, b.bindings()[k].value)) return false;
    }
    return true;
  }

  /// An absent env is included in anything.
  static bool included_opt(const std::optional<Env>& a, const std::optional<Env>& b) {
    if (!a) return true;
    if (!b) return false;
    return included_env(*a, *b);
  }

  static Env all_top(const Env& l) {
    Env out = l;
    for (auto& b : out.bindings()) b.value = D::top();
    return out;
  }

  /// Refines l by the knowledge that b evaluates to `polarity`. nullopt means
  /// no state in l can do so.
  static std::optional<Env> intersect_env(bool polarity, const Env& l, const BExpr& b) {
    const Value bound = ab_eval(l, b.rhs);
    if (const auto* v = std::get_if<Var>(&b.lhs.node()); v && l.find(v->name)) {
      const Value current = ab_lookup(l, v->name);
      auto refined = polarity ? D::restrict_lt(current, bound) : D::restrict_ge(current, bound);
      if (!refined) return std::nullopt;
      return ab_update(l, v->name, std::move(*refined));
    }
    const Value lhs = ab_eval(l, b.lhs);
    if (polarity && !D::restrict_lt(lhs, bound)) return std::nullopt;
    if (!polarity && !D::restrict_ge(lhs, bound)) return std::nullopt;
    return l;
  }

  static Assert to_a(const Env& l) {
    std::vector<Assert> parts;
    for (const auto& b : l.bindings()) {
      Assert a = D::to_assert(b.value, b.name);
      if (!(a == true_assert())) parts.push_back(std::move(a));
    }
    if (parts.empty()) return true_assert();
    Assert acc = parts.back();
    for (std::size_t k = parts.size() - 1; k-- > 0;) acc = conj(parts[k], std::move(acc));
    return acc;
  }

  static Assert to_a_opt(const std::optional<Env>& l) { return l ? to_a(*l) : false_assert(); }

  static Result fp1(const Env& l0, const Env& l, const BExpr& b, const Instr& body,
                    const BodyFn& f) {
    auto refined = intersect_env(true, l, b);
    if (!refined) return {prec(false_assert(), mark(body)), l};
    Result r = f(*refined);
    if (!r.env) return {std::move(r.annotated), std::nullopt};
    return {std::move(r.annotated), join_env(l0, join_env(*refined, *r.env))};
  }

  /// Three-stage loop strategy. `stage`, when given, receives 1, 2 or 3.
  static Result fp(const Env& l, const BExpr& b, const Instr& body, const BodyFn& f,
                   int* stage = nullptr) {
    auto report = [&](int s) {
      if (stage) *stage = s;
    };

    Result first = fp1(l, l, b, body, f);
    if (first.env && *first.env == l) {
      report(1);
      return first;
    }

    const Env widened = widen_env(l, first.env ? *first.env : l);
    Result second = fp1(widened, widened, b, body, f);
    if (second.env && *second.env == widened) {
      report(2);
      return second;
    }

    report(3);
    const Env top = all_top(l);
    Result third = fp1(top, top, b, body, f);
    if (!third.env) return third;
    return {std::move(third.annotated), top};
  }

  static Result abstract_i(const Instr& i, const Env& l, const LoopObserver* observer = nullptr) {
    return std::visit(
        Overloaded{
            [&](const Skip&) -> Result { return {prec(to_a(l), askip()), l}; },
            [&](const Seq& s) -> Result {
              Result first = abstract_i(s.first, l, observer);
              if (!first.env) {
                return {aseq(std::move(first.annotated), prec(false_assert(), mark(s.second))),
                        std::nullopt};
              }
              Result second = abstract_i(s.second, *first.env, observer);
              return {aseq(std::move(first.annotated), std::move(second.annotated)),
                      std::move(second.env)};
            },
            [&](const Assign& a) -> Result {
              return {prec(to_a(l), aassign(a.target, a.value)),
                      ab_update(l, a.target, ab_eval(l, a.value))};
            },
            [&](const While& w) -> Result {
              if (!intersect_env(true, l, w.test)) {
                Assert inv = conj(negate(test(w.test)), to_a(l));
                return {prec(to_a(l), awhile(w.test, std::move(inv), mark(w.body))), l};
              }
              BodyFn body_fn = [&](const Env& e) { return abstract_i(w.body, e, observer); };
              Result loop = fp(l, w.test, w.body, body_fn);
              if (observer && *observer) (*observer)(l, w.test, w.body, loop);
              if (!loop.env) {
                return {prec(to_a(l), awhile(w.test, to_a(l), std::move(loop.annotated))),
                        intersect_env(false, l, w.test)};
              }
              return {prec(to_a(l), awhile(w.test, to_a(*loop.env), std::move(loop.annotated))),
                      intersect_env(false, *loop.env, w.test)};
            },
        },
        i.node());
  }

  /// Binds every variable of i: entries of `given` first, in order, then the
  /// remaining program variables (first-occurrence order) at top. Returns the
  /// environment and the names that were defaulted.
  static std::pair<Env, std::vector<Ident>> initial_env(const Instr& i, const Env& given) {
    Env out;
    for (const auto& b : given.bindings()) {
      if (out.find(b.name)) {
        throw AnalysisSetupError("variable '" + b.name + "' is bound twice");
      }
      out.bindings().push_back(b);
    }
    std::vector<Ident> defaulted;
    for (const auto& name : variables(i)) {
      if (!out.find(name)) {
        out.bindings().push_back({name, D::top()});
        defaulted.push_back(name);
      }
    }
    return {std::move(out), std::move(defaulted)};
  }

  /// abstract_i after checking that l binds every program variable.
  static Result analyze(const Instr& i, const Env& l, const LoopObserver* observer = nullptr) {
    for (const auto& name : variables(i)) {
      if (!l.find(name)) {
        throw AnalysisSetupError("variable '" + name + "' is not bound in the abstract environment");
      }
    }
    return abstract_i(i, l, observer);
  }

 private:
  static void require_same_names(const Env& a, const Env& b) {
    if (a.bindings().size() != b.bindings().size()) {
      throw DomainMismatch("abstract environments differ in size");
    }
    for (std::size_t k = 0; k < a.bindings().size(); ++k) {
      if (a.bindings()[k].name != b.bindings()[k].name) {
        throw DomainMismatch("abstract environments bind different names");
      }
    }
  }

  template <class Op>
  static Env pointwise(const Env& a, const Env& b, Op op) {
    require_same_names(a, b);
    Env out = a;
    for (std::size_t k = 0; k < a.bindings().size(); ++k) {
      out.bindings()[k].value = op(a.bindings()[k].value, b.bindings()[k].value);
    }
    return out;
  }
};

}  // namespace imp
