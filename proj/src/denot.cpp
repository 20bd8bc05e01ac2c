#include "imp/denot.hpp"

namespace imp {

namespace {

const DenotResult kUnknown = Bottom{Bottom::Reason::Unknown};
const DenotResult kError = Bottom{Bottom::Reason::Error};

DenotResult and_then(const DenotResult& v, const Denotation& f) {
  if (const auto* done = std::get_if<Done>(&v)) return f(done->env);
  return v;
}

}  // namespace

Denotation apply_functional(const LoopFunctional& f, Denotation g) {
  return [f, g = std::move(g)](const Env& r) -> DenotResult {
    auto t = f.test(r);
    if (!t) return kError;
    if (!*t) return Done{r};
    return and_then(f.body(r), g);
  };
}

DenotResult phi_approx(std::uint64_t n, const LoopFunctional& f, const Env& r) {
  // Unrolled form of apply_functional^n(bottom)(r); avoids building n nested
  // closures.
  Env current = r;
  for (std::uint64_t remaining = n; remaining > 0; --remaining) {
    auto t = f.test(current);
    if (!t) return kError;
    if (!*t) return Done{std::move(current)};
    DenotResult step = f.body(current);
    auto* done = std::get_if<Done>(&step);
    if (!done) return step;
    current = std::move(done->env);
  }
  return kUnknown;
}

DenotResult ds_fuel(std::uint64_t fuel, const Instr& i, const Env& r) {
  return std::visit(
      Overloaded{
          [&](const Skip&) -> DenotResult { return Done{r}; },
          [&](const Assign& a) -> DenotResult {
            auto v = af(r, a.value);
            if (!v) return kError;
            auto next = update(r, a.target, std::move(*v));
            if (!next) return kError;
            return Done{std::move(*next)};
          },
          [&](const Seq& s) -> DenotResult {
            const Instr& second = s.second;
            return and_then(ds_fuel(fuel, s.first, r),
                        [&](const Env& mid) { return ds_fuel(fuel, second, mid); });
          },
          [&](const While& w) -> DenotResult {
            const BExpr& b = w.test;
            const Instr& body = w.body;
            LoopFunctional f{[&](const Env& e) { return bf(e, b); },
                             [&](const Env& e) { return ds_fuel(fuel, body, e); }};
            return phi_approx(fuel, f, r);
          },
      },
      i.node());
}

}  // namespace imp
