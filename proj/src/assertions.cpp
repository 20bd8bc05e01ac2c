#include "imp/assertions.hpp"

#include <cassert>
#include <random>
#include <set>

namespace imp {

Integer af_total(const Valuation& g, const AExpr& a) {
  return std::visit(Overloaded{
                        [&](const Var& v) { return g(v.name); },
                        [](const Num& n) { return n.value; },
                        [&](const Plus& p) -> Integer {
                          return af_total(g, p.lhs) + af_total(g, p.rhs);
                        },
                    },
                    a.node());
}

bool bf_total(const Valuation& g, const BExpr& b) {
  return af_total(g, b.lhs) < af_total(g, b.rhs);
}

std::vector<Integer> lf_total(const Valuation& g, const std::vector<AExpr>& args) {
  std::vector<Integer> out;
  out.reserve(args.size());
  for (const auto& a : args) out.push_back(af_total(g, a));
  return out;
}

AExpr subst_a(const AExpr& a, const Ident& name, const AExpr& e) {
  return std::visit(Overloaded{
                        [&](const Var& v) { return v.name == name ? e : a; },
                        [&](const Num&) { return a; },
                        [&](const Plus& p) {
                          return plus(subst_a(p.lhs, name, e), subst_a(p.rhs, name, e));
                        },
                    },
                    a.node());
}

BExpr subst_b(const BExpr& b, const Ident& name, const AExpr& e) {
  return lt(subst_a(b.lhs, name, e), subst_a(b.rhs, name, e));
}

Assert a_subst(const Assert& a, const Ident& name, const AExpr& e) {
  return std::visit(Overloaded{
                        [&](const Test& t) { return test(subst_b(t.cond, name, e)); },
                        [&](const Not& n) { return negate(a_subst(n.arg, name, e)); },
                        [&](const Conj& c) {
                          return conj(a_subst(c.lhs, name, e), a_subst(c.rhs, name, e));
                        },
                        [&](const Pred& p) {
                          std::vector<AExpr> args;
                          args.reserve(p.args.size());
                          for (const auto& arg : p.args) args.push_back(subst_a(arg, name, e));
                          return pred(p.name, std::move(args));
                        },
                    },
                    a.node());
}

// ---------------------------------------------------------------------------

PredEnv& PredEnv::bind(Ident name, Predicate p) {
  entries_.emplace_back(std::move(name), std::move(p));
  return *this;
}

const Predicate* PredEnv::find(const Ident& name) const {
  for (const auto& [bound, p] : entries_) {
    if (bound == name) return &p;
  }
  return nullptr;
}

Predicate f_p(const PredEnv& m, const Ident& name) {
  if (const Predicate* p = m.find(name)) return *p;
  return [](std::span<const Integer>) { return true; };
}

const PredEnv& builtin_pred_env() {
  static const PredEnv m = [] {
    PredEnv env;
    env.bind("le", [](std::span<const Integer> xs) { return xs.size() == 2 && xs[0] <= xs[1]; });
    env.bind("pp", [](std::span<const Integer> xs) {
      return xs.size() == 2 && 2 * xs[0] == xs[1] * (xs[1] + 1);
    });
    return env;
  }();
  return m;
}

bool i_a(const PredEnv& m, const Valuation& g, const Assert& a) {
  return std::visit(Overloaded{
                        [&](const Test& t) { return bf_total(g, t.cond); },
                        [&](const Not& n) { return !i_a(m, g, n.arg); },
                        [&](const Conj& c) { return i_a(m, g, c.lhs) && i_a(m, g, c.rhs); },
                        [&](const Pred& p) {
                          const Predicate* fn = m.find(p.name);
                          if (!fn) return true;
                          std::vector<Integer> values = lf_total(g, p.args);
                          return (*fn)(values);
                        },
                    },
                    a.node());
}

bool i_c(const PredEnv& m, const Valuation& g, const Condition& c) {
  return !i_a(m, g, c.hyp) || i_a(m, g, c.concl);
}

std::vector<Ident> unbound_predicates(const PredEnv& m, const Assert& a) {
  std::vector<Ident> out;
  std::set<Ident> seen;
  auto walk = [&](auto& self, const Assert& node) -> void {
    std::visit(Overloaded{
                   [](const Test&) {},
                   [&](const Not& n) { self(self, n.arg); },
                   [&](const Conj& c) {
                     self(self, c.lhs);
                     self(self, c.rhs);
                   },
                   [&](const Pred& p) {
                     if (!m.binds(p.name) && seen.insert(p.name).second) out.push_back(p.name);
                   },
               },
               node.node());
  };
  walk(walk, a);
  return out;
}

// ---------------------------------------------------------------------------

std::vector<Valuation> structured_samples(const std::vector<Ident>& vars, const SampleSpec& spec) {
  std::vector<Valuation> out;
  std::mt19937_64 rng(spec.seed);
  const int radius = spec.grid_radius;
  const std::size_t width = static_cast<std::size_t>(2 * radius + 1);

  std::size_t grid_size = 1;
  bool oversized = false;
  for (std::size_t k = 0; k < vars.size(); ++k) {
    grid_size *= width;
    if (grid_size > spec.grid_limit) {
      oversized = true;
      break;
    }
  }

  if (!oversized) {
    std::vector<int> digits(vars.size(), -radius);
    for (std::size_t point = 0; point < grid_size; ++point) {
      Valuation g;
      for (std::size_t k = 0; k < vars.size(); ++k) g.set(vars[k], digits[k]);
      out.push_back(std::move(g));
      for (std::size_t k = vars.size(); k-- > 0;) {
        if (++digits[k] <= radius) break;
        digits[k] = -radius;
      }
    }
  } else {
    std::uniform_int_distribution<int> cell(-radius, radius);
    for (std::size_t point = 0; point < spec.grid_limit; ++point) {
      Valuation g;
      for (const auto& v : vars) g.set(v, cell(rng));
      out.push_back(std::move(g));
    }
  }

  std::uniform_int_distribution<int> magnitude(0, 9);
  std::uniform_int_distribution<std::int64_t> small(-10, 10);
  std::uniform_int_distribution<std::int64_t> medium(-1000, 1000);
  std::uniform_int_distribution<std::int64_t> wide(-1'000'000'000'000LL, 1'000'000'000'000LL);
  for (std::size_t point = 0; point < spec.random_count; ++point) {
    Valuation g;
    for (const auto& v : vars) {
      int m = magnitude(rng);
      std::int64_t value = m < 5 ? small(rng) : m < 8 ? medium(rng) : wide(rng);
      g.set(v, value);
    }
    out.push_back(std::move(g));
  }
  return out;
}

SampledVerdict valid_sampled(const PredEnv& m, const Condition& c,
                             std::span<const Valuation> samples) {
  assert(!samples.empty());
  for (const auto& g : samples) {
    if (!i_c(m, g, c)) return {g};
  }
  return {};
}

SampledVerdict valid_sampled(const PredEnv& m, const Condition& c, const SampleSpec& spec) {
  auto samples = structured_samples(variables(c), spec);
  if (samples.empty()) samples.emplace_back();
  return valid_sampled(m, c, samples);
}

}  // namespace imp
