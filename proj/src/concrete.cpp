#include "imp/concrete.hpp"

#include <set>
#include <stdexcept>

#include "text.hpp"

namespace imp {

std::vector<Ident> Env::names() const {
  std::vector<Ident> out;
  out.reserve(bindings_.size());
  for (const auto& b : bindings_) out.push_back(b.name);
  return out;
}

std::string to_string(const ProgramPoint& at) {
  if (at.empty()) return "/";
  std::string out;
  for (std::size_t step : at) {
    out += '/';
    out += std::to_string(step);
  }
  return out;
}

std::optional<Integer> lookup(const Env& r, const Ident& name) {
  for (const auto& b : r.bindings()) {
    if (b.name == name) return b.value;
  }
  return std::nullopt;
}

std::optional<Integer> af(const Env& r, const AExpr& a) {
  return std::visit(Overloaded{
                        [&](const Var& v) { return lookup(r, v.name); },
                        [](const Num& n) { return std::optional<Integer>(n.value); },
                        [&](const Plus& p) -> std::optional<Integer> {
                          auto lhs = af(r, p.lhs);
                          if (!lhs) return std::nullopt;
                          auto rhs = af(r, p.rhs);
                          if (!rhs) return std::nullopt;
                          return *lhs + *rhs;
                        },
                    },
                    a.node());
}

std::optional<bool> bf(const Env& r, const BExpr& b) {
  auto lhs = af(r, b.lhs);
  if (!lhs) return std::nullopt;
  auto rhs = af(r, b.rhs);
  if (!rhs) return std::nullopt;
  return *lhs < *rhs;
}

std::optional<Env> update(const Env& r, const Ident& name, Integer value) {
  std::vector<Binding> out = r.bindings();
  for (auto& b : out) {
    if (b.name == name) {
      b.value = std::move(value);
      return Env(std::move(out));
    }
  }
  return std::nullopt;
}

std::optional<Ident> first_unbound(const Env& r, const AExpr& a) {
  for (const auto& name : variables(a)) {
    if (!lookup(r, name)) return name;
  }
  return std::nullopt;
}

std::optional<Ident> first_unbound(const Env& r, const BExpr& b) {
  for (const auto& name : variables(b)) {
    if (!lookup(r, name)) return name;
  }
  return std::nullopt;
}

namespace {

class Interpreter {
 public:
  explicit Interpreter(Fuel fuel) : fuel_(fuel) {}

  ExecOutcome run(const Env& r, const Instr& i) {
    return std::visit(
        Overloaded{
            [&](const Skip&) -> ExecOutcome { return Done{r}; },
            [&](const Assign& a) -> ExecOutcome {
              auto value = af(r, a.value);
              if (!value) {
                return RuntimeError{ErrorKind::UnboundRead, *first_unbound(r, a.value), at_};
              }
              auto next = update(r, a.target, std::move(*value));
              if (!next) return RuntimeError{ErrorKind::UnboundWrite, a.target, at_};
              return Done{std::move(*next)};
            },
            [&](const Seq& s) -> ExecOutcome {
              ExecOutcome first = descend(0, r, s.first);
              auto* done = std::get_if<Done>(&first);
              if (!done) return first;
              return descend(1, done->env, s.second);
            },
            [&](const While& w) -> ExecOutcome {
              Env current = r;
              for (Fuel remaining = fuel_;; --remaining) {
                if (remaining == 0) return OutOfFuel{};
                auto go = bf(current, w.test);
                if (!go) {
                  return RuntimeError{ErrorKind::UnboundRead, *first_unbound(current, w.test),
                                      at_};
                }
                if (!*go) return Done{std::move(current)};
                ExecOutcome step = descend(0, current, w.body);
                auto* done = std::get_if<Done>(&step);
                if (!done) return step;
                current = std::move(done->env);
              }
            },
        },
        i.node());
  }

 private:
  ExecOutcome descend(std::size_t child, const Env& r, const Instr& i) {
    at_.push_back(child);
    ExecOutcome out = run(r, i);
    at_.pop_back();
    return out;
  }

  Fuel fuel_;
  ProgramPoint at_;
};

}  // namespace

ExecOutcome exec_fuel(Fuel fuel, const Env& r, const Instr& i) {
  return Interpreter(fuel).run(r, i);
}

Valuation env_overlay(const Env& r, const Valuation& g) {
  Valuation out = g;
  std::set<Ident> seen;
  for (const auto& b : r.bindings()) {
    if (seen.insert(b.name).second) out.set(b.name, b.value);
  }
  return out;
}

std::string format_env(const Env& r) {
  std::string out;
  for (const auto& b : r.bindings()) {
    if (!out.empty()) out += ',';
    out += b.name;
    out += '=';
    out += to_string(b.value);
  }
  return out;
}

Env parse_env(std::string_view source) {
  std::vector<Binding> bindings;
  for (auto item : text::split_items(source)) {
    auto [name, value] = text::split_binding(item);
    if (!is_identifier(name)) {
      throw std::invalid_argument("invalid variable name '" + std::string(name) + "'");
    }
    auto n = parse_integer(value);
    if (!n) throw std::invalid_argument("invalid integer '" + std::string(value) + "'");
    bindings.push_back({std::string(name), std::move(*n)});
  }
  return Env(std::move(bindings));
}

// ---------------------------------------------------------------------------

bool operator==(const Valuation& a, const Valuation& b) {
  auto covers = [](const Valuation& x, const Valuation& y) {
    for (const auto& [name, value] : x.table()) {
      if (y(name) != value) return false;
    }
    return true;
  };
  return covers(a, b) && covers(b, a);
}

std::string format_valuation(const Valuation& g) {
  std::string out;
  for (const auto& [name, value] : g.table()) {
    if (!out.empty()) out += ',';
    out += name;
    out += '=';
    out += to_string(value);
  }
  return out;
}

Valuation parse_valuation(std::string_view source) {
  Valuation g;
  const Env parsed = parse_env(source);
  for (const auto& b : parsed.bindings()) {
    if (g.table().count(b.name) == 0) g.set(b.name, b.value);
  }
  return g;
}

}  // namespace imp
