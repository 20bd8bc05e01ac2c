#include "imp/hoare.hpp"

#include "imp/pretty.hpp"

namespace imp {

struct Derivation::Node {
  Assert pre;
  Instr instr;
  Assert post;
  Rule rule;
};

Derivation::Derivation(Assert pre, Instr instr, Assert post, Rule rule)
    : node_(std::make_shared<const Node>(
          Node{std::move(pre), std::move(instr), std::move(post), std::move(rule)})) {}

const Assert& Derivation::pre() const { return node_->pre; }
const Instr& Derivation::instr() const { return node_->instr; }
const Assert& Derivation::post() const { return node_->post; }
const Rule& Derivation::rule() const { return node_->rule; }

Derivation rskip(Assert p) { return Derivation(p, skip(), p, SkipRule{}); }

Derivation rassign(Assert post, Ident x, AExpr e) {
  Assert pre = a_subst(post, x, e);
  Instr i = assign(x, e);
  return Derivation(std::move(pre), std::move(i), std::move(post),
                    AssignRule{std::move(x), std::move(e)});
}

Derivation rseq(Derivation first, Derivation second) {
  Assert pre = first.pre();
  Assert post = second.post();
  Instr i = seq(first.instr(), second.instr());
  return Derivation(std::move(pre), std::move(i), std::move(post),
                    SeqRule{std::move(first), std::move(second)});
}

Derivation rwhile(Assert invariant, BExpr b, Derivation body) {
  Instr i = while_loop(b, body.instr());
  Assert post = conj(negate(test(b)), invariant);
  return Derivation(std::move(invariant), std::move(i), std::move(post),
                    WhileRule{std::move(b), std::move(body)});
}

Derivation rconseq(Condition strengthen, Derivation inner, Condition weaken) {
  Assert pre = strengthen.hyp;
  Assert post = weaken.concl;
  Instr i = inner.instr();
  return Derivation(std::move(pre), std::move(i), std::move(post),
                    ConseqRule{std::move(strengthen), std::move(inner), std::move(weaken)});
}

ValidityOracle sampled_oracle(const PredEnv& m, SampleSpec spec) {
  return [&m, spec](const Condition& c) { return valid_sampled(m, c, spec); };
}

namespace {

class DerivationChecker {
 public:
  explicit DerivationChecker(const ValidityOracle& oracle) : oracle_(oracle) {}

  DerivationVerdict check(const Derivation& d) {
    if (auto failure = check_node(d)) return *failure;
    return check_children(d);
  }

 private:
  using Result = std::optional<DerivationVerdict>;

  Result structural(std::string reason) const {
    DerivationVerdict v;
    v.failure = DerivationVerdict::Failure::Structural;
    v.at = at_;
    v.reason = std::move(reason);
    return v;
  }

  Result consult(const Condition& c, const char* which) const {
    SampledVerdict verdict = oracle_(c);
    if (!verdict.refuted()) return std::nullopt;
    DerivationVerdict v;
    v.failure = DerivationVerdict::Failure::Counterexample;
    v.at = at_;
    v.reason = std::string(which) + " condition `" + pretty(c) + "` fails at " +
               format_valuation(*verdict.counterexample);
    v.counterexample = verdict.counterexample;
    return v;
  }

  Result check_node(const Derivation& d) const {
    return std::visit(
        Overloaded{
            [&](const SkipRule&) -> Result {
              if (!std::holds_alternative<Skip>(d.instr().node())) {
                return structural("skip rule applied to `" + pretty(d.instr()) + "`");
              }
              if (!(d.pre() == d.post())) return structural("skip rule with pre != post");
              return std::nullopt;
            },
            [&](const AssignRule& r) -> Result {
              if (!(d.instr() == assign(r.target, r.value))) {
                return structural("assignment rule does not match `" + pretty(d.instr()) + "`");
              }
              if (!(d.pre() == a_subst(d.post(), r.target, r.value))) {
                return structural("assignment pre is not post[" + r.target + " <- " +
                                  pretty(r.value) + "]");
              }
              return std::nullopt;
            },
            [&](const SeqRule& r) -> Result {
              if (!(d.instr() == seq(r.first.instr(), r.second.instr()))) {
                return structural("sequence rule does not match its premises' instructions");
              }
              if (!(d.pre() == r.first.pre())) return structural("sequence pre differs from first premise");
              if (!(r.first.post() == r.second.pre())) {
                return structural("sequence middle assertions differ");
              }
              if (!(d.post() == r.second.post())) {
                return structural("sequence post differs from second premise");
              }
              return std::nullopt;
            },
            [&](const WhileRule& r) -> Result {
              if (!(d.instr() == while_loop(r.test, r.body.instr()))) {
                return structural("while rule does not match its premise's instruction");
              }
              const Assert& inv = d.pre();
              if (!(d.post() == conj(negate(test(r.test)), inv))) {
                return structural("while post is not ~b /\\ invariant");
              }
              if (!(r.body.pre() == conj(test(r.test), inv))) {
                return structural("loop body pre is not b /\\ invariant");
              }
              if (!(r.body.post() == inv)) return structural("loop body post is not the invariant");
              return std::nullopt;
            },
            [&](const ConseqRule& r) -> Result {
              if (!(d.instr() == r.inner.instr())) {
                return structural("consequence rule changes the instruction");
              }
              if (!(d.pre() == r.strengthen.hyp) || !(r.strengthen.concl == r.inner.pre())) {
                return structural("precondition implication does not connect the triples");
              }
              if (!(r.inner.post() == r.weaken.hyp) || !(r.weaken.concl == d.post())) {
                return structural("postcondition implication does not connect the triples");
              }
              if (auto f = consult(r.strengthen, "precondition")) return f;
              return consult(r.weaken, "postcondition");
            },
        },
        d.rule());
  }

  DerivationVerdict descend(std::size_t child, const Derivation& d) {
    at_.push_back(child);
    DerivationVerdict v = check(d);
    at_.pop_back();
    return v;
  }

  DerivationVerdict check_children(const Derivation& d) {
    return std::visit(Overloaded{
                          [](const SkipRule&) { return DerivationVerdict{}; },
                          [](const AssignRule&) { return DerivationVerdict{}; },
                          [&](const SeqRule& r) {
                            DerivationVerdict v = descend(0, r.first);
                            if (!v.valid()) return v;
                            return descend(1, r.second);
                          },
                          [&](const WhileRule& r) { return descend(0, r.body); },
                          [&](const ConseqRule& r) { return descend(0, r.inner); },
                      },
                      d.rule());
  }

  const ValidityOracle& oracle_;
  ProgramPoint at_;
};

}  // namespace

DerivationVerdict check_derivation(const Derivation& d, const ValidityOracle& oracle) {
  return DerivationChecker(oracle).check(d);
}

DerivationVerdict check_derivation(const PredEnv& m, const Derivation& d) {
  return check_derivation(d, sampled_oracle(m));
}

DerivationVerdict check_proves(const Derivation& d, const Assert& pre, const Instr& instr,
                               const Assert& post, const ValidityOracle& oracle) {
  if (!(d.pre() == pre) || !(d.instr() == instr) || !(d.post() == post)) {
    DerivationVerdict v;
    v.failure = DerivationVerdict::Failure::Structural;
    v.reason = "derivation proves {" + pretty(d.pre()) + "} " + pretty(d.instr()) + " {" +
               pretty(d.post()) + "}, not the goal";
    return v;
  }
  return check_derivation(d, oracle);
}

// ---------------------------------------------------------------------------

Assert pc(const AInstr& i, const Assert& post) {
  return std::visit(Overloaded{
                        [](const Prec& p) { return p.assertion; },
                        [](const AWhile& w) { return w.invariant; },
                        [&](const ASkip&) { return post; },
                        [&](const AAssign& a) { return a_subst(post, a.target, a.value); },
                        [&](const ASeq& s) { return pc(s.first, pc(s.second, post)); },
                    },
                    i.node());
}

namespace {

void gather(const AInstr& i, const Assert& post, std::vector<Condition>& out) {
  std::visit(Overloaded{
                 [](const ASkip&) {},
                 [](const AAssign&) {},
                 [&](const Prec& p) {
                   out.push_back({p.assertion, pc(p.body, post)});
                   gather(p.body, post, out);
                 },
                 [&](const ASeq& s) {
                   gather(s.second, post, out);
                   gather(s.first, pc(s.second, post), out);
                 },
                 [&](const AWhile& w) {
                   const Assert b = test(w.test);
                   out.push_back({conj(negate(b), w.invariant), post});
                   out.push_back({conj(b, w.invariant), pc(w.body, w.invariant)});
                   gather(w.body, w.invariant, out);
                 },
             },
             i.node());
}

class AnnotatedInterpreter {
 public:
  AnnotatedInterpreter(Fuel fuel, const PredEnv& m, const Valuation& g)
      : fuel_(fuel), m_(m), g_(g) {}

  ExecOutcome run(const Env& r, const AInstr& i) {
    return std::visit(
        Overloaded{
            [&](const Prec& p) -> ExecOutcome {
              require(p.assertion, r);
              return descend(0, r, p.body);
            },
            [&](const ASkip&) -> ExecOutcome { return Done{r}; },
            [&](const AAssign& a) -> ExecOutcome {
              auto value = af(r, a.value);
              if (!value) {
                return RuntimeError{ErrorKind::UnboundRead, *first_unbound(r, a.value), at_};
              }
              auto next = update(r, a.target, std::move(*value));
              if (!next) return RuntimeError{ErrorKind::UnboundWrite, a.target, at_};
              return Done{std::move(*next)};
            },
            [&](const ASeq& s) -> ExecOutcome {
              ExecOutcome first = descend(0, r, s.first);
              auto* done = std::get_if<Done>(&first);
              if (!done) return first;
              return descend(1, done->env, s.second);
            },
            [&](const AWhile& w) -> ExecOutcome {
              Env current = r;
              require(w.invariant, current);
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
                require(w.invariant, current);
              }
            },
        },
        i.node());
  }

  std::vector<Violation> take_violations() { return std::move(violations_); }

 private:
  void require(const Assert& a, const Env& r) {
    if (!i_a(m_, env_overlay(r, g_), a)) violations_.push_back({at_, a, r});
  }

  ExecOutcome descend(std::size_t child, const Env& r, const AInstr& i) {
    at_.push_back(child);
    ExecOutcome out = run(r, i);
    at_.pop_back();
    return out;
  }

  Fuel fuel_;
  const PredEnv& m_;
  const Valuation& g_;
  ProgramPoint at_;
  std::vector<Violation> violations_;
};

}  // namespace

std::vector<Condition> vcg(const AInstr& i, const Assert& post) {
  std::vector<Condition> out;
  gather(i, post, out);
  return out;
}

AnnotatedRun exec_annotated(Fuel fuel, const PredEnv& m, const Valuation& g, const Env& r,
                            const AInstr& i) {
  AnnotatedInterpreter interp(fuel, m, g);
  ExecOutcome outcome = interp.run(r, i);
  return {std::move(outcome), interp.take_violations()};
}

}  // namespace imp
