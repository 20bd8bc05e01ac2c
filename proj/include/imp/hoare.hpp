#pragma once

// Hoare-logic derivations, precondition / verification-condition
// generation, and run-time checking of annotated programs.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "imp/assertions.hpp"
#include "imp/concrete.hpp"
#include "imp/syntax.hpp"

namespace imp {

// ---------------------------------------------------------------------------
// Derivations

class Derivation;

struct SkipRule {};
struct AssignRule {
  Ident target;
  AExpr value;
};
struct SeqRule;
struct WhileRule;
struct ConseqRule;

using Rule = std::variant<SkipRule, AssignRule, SeqRule, WhileRule, ConseqRule>;

/// A proof tree whose every node claims a triple {pre} instr {post}. The
/// claims are data; check_derivation decides whether the rules justify them.
class Derivation {
 public:
  /// Arbitrary claim; use the rule helpers below for well-formed trees.
  Derivation(Assert pre, Instr instr, Assert post, Rule rule);

  const Assert& pre() const;
  const Instr& instr() const;
  const Assert& post() const;
  const Rule& rule() const;

 private:
  struct Node;
  std::shared_ptr<const Node> node_;
};

struct SeqRule {
  Derivation first;
  Derivation second;
};

struct WhileRule {
  BExpr test;
  Derivation body;
};

struct ConseqRule {
  Condition strengthen;  // pre -> inner.pre
  Derivation inner;
  Condition weaken;      // inner.post -> post
};

/// {p} skip {p}
Derivation rskip(Assert p);
/// {p[x <- e]} x := e {p}
Derivation rassign(Assert post, Ident x, AExpr e);
/// {first.pre} first; second {second.post}
Derivation rseq(Derivation first, Derivation second);
/// {inv} while b do body done {~b /\ inv}; body should prove {b /\ inv} . {inv}
Derivation rwhile(Assert invariant, BExpr b, Derivation body);
/// {strengthen.hyp} inner.instr {weaken.concl}
Derivation rconseq(Condition strengthen, Derivation inner, Condition weaken);

/// Decides validity of one condition; returns a refuting valuation if found.
using ValidityOracle = std::function<SampledVerdict(const Condition&)>;

/// Sampled validity over each condition's own variables.
ValidityOracle sampled_oracle(const PredEnv& m, SampleSpec spec = {});

struct DerivationVerdict {
  enum class Failure { None, Structural, Counterexample };

  Failure failure = Failure::None;
  /// Child indices: SeqRule 0/1, WhileRule 0, ConseqRule 0.
  ProgramPoint at;
  std::string reason;
  std::optional<Valuation> counterexample;

  bool valid() const { return failure == Failure::None; }
};

/// Checks nodes in pre-order and reports the first failure.
DerivationVerdict check_derivation(const Derivation& d, const ValidityOracle& oracle);
DerivationVerdict check_derivation(const PredEnv& m, const Derivation& d);

/// check_derivation plus equality of the root triple with the goal.
DerivationVerdict check_proves(const Derivation& d, const Assert& pre, const Instr& instr,
                               const Assert& post, const ValidityOracle& oracle);

// ---------------------------------------------------------------------------
// Weakest preconditions and verification conditions

Assert pc(const AInstr& i, const Assert& post);
std::vector<Condition> vcg(const AInstr& i, const Assert& post);

// ---------------------------------------------------------------------------
// Instrumented execution

struct Violation {
  ProgramPoint at;
  Assert assertion;
  Env env;
};

struct AnnotatedRun {
  ExecOutcome outcome;
  std::vector<Violation> violations;
};

/// Executes un_annot(i) with the exec_fuel semantics, checking every Prec
/// assertion when reached and every loop invariant on entry and after each
/// iteration, all under env_overlay(current env, g). Violations do not stop
/// the run.
AnnotatedRun exec_annotated(Fuel fuel, const PredEnv& m, const Valuation& g, const Env& r,
                            const AInstr& i);

}  // namespace imp
