#pragma once

// Abstract syntax for the while language, its assertion language and
// annotated programs.
//
// Every tree type is an immutable handle over a shared node, so copies are
// cheap and structural equality is available through operator==.

#include <memory>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "imp/integer.hpp"

namespace imp {

using Ident = std::string;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// ---------------------------------------------------------------------------
// Arithmetic and boolean expressions

struct Var;
struct Num;
struct Plus;

class AExpr {
 public:
  using Node = std::variant<Var, Num, Plus>;

  AExpr(Var v);
  AExpr(Num n);
  AExpr(Plus p);

  const Node& node() const;

  friend bool operator==(const AExpr& a, const AExpr& b);

 private:
  std::shared_ptr<const Node> node_;
};

struct Var {
  Ident name;
  bool operator==(const Var&) const = default;
};

struct Num {
  Integer value;
  bool operator==(const Num&) const = default;
};

struct Plus {
  AExpr lhs;
  AExpr rhs;
  bool operator==(const Plus&) const = default;
};

inline const AExpr::Node& AExpr::node() const { return *node_; }

/// The single comparison form `lhs < rhs`.
struct BExpr {
  AExpr lhs;
  AExpr rhs;
  bool operator==(const BExpr&) const = default;
};

// ---------------------------------------------------------------------------
// Bare instructions

struct Skip;
struct Assign;
struct Seq;
struct While;

class Instr {
 public:
  using Node = std::variant<Skip, Assign, Seq, While>;

  Instr(Skip s);
  Instr(Assign a);
  Instr(Seq s);
  Instr(While w);

  const Node& node() const;

  friend bool operator==(const Instr& a, const Instr& b);

 private:
  std::shared_ptr<const Node> node_;
};

struct Skip {
  bool operator==(const Skip&) const = default;
};

struct Assign {
  Ident target;
  AExpr value;
  bool operator==(const Assign&) const = default;
};

struct Seq {
  Instr first;
  Instr second;
  bool operator==(const Seq&) const = default;
};

struct While {
  BExpr test;
  Instr body;
  bool operator==(const While&) const = default;
};

inline const Instr::Node& Instr::node() const { return *node_; }

// ---------------------------------------------------------------------------
// Assertions and conditions

struct Test;
struct Not;
struct Conj;
struct Pred;

class Assert {
 public:
  using Node = std::variant<Test, Not, Conj, Pred>;

  Assert(Test t);
  Assert(Not n);
  Assert(Conj c);
  Assert(Pred p);

  const Node& node() const;

  friend bool operator==(const Assert& a, const Assert& b);

 private:
  std::shared_ptr<const Node> node_;
};

/// A boolean expression lifted to an assertion.
struct Test {
  BExpr cond;
  bool operator==(const Test&) const = default;
};

struct Not {
  Assert arg;
  bool operator==(const Not&) const = default;
};

struct Conj {
  Assert lhs;
  Assert rhs;
  bool operator==(const Conj&) const = default;
};

/// Named predicate applied to a (possibly empty) argument list.
struct Pred {
  Ident name;
  std::vector<AExpr> args;
  bool operator==(const Pred&) const = default;
};

inline const Assert::Node& Assert::node() const { return *node_; }

/// The implication `hyp -> concl`.
struct Condition {
  Assert hyp;
  Assert concl;
  bool operator==(const Condition&) const = default;
};

// ---------------------------------------------------------------------------
// Annotated instructions

struct Prec;
struct ASkip;
struct AAssign;
struct ASeq;
struct AWhile;

class AInstr {
 public:
  using Node = std::variant<Prec, ASkip, AAssign, ASeq, AWhile>;

  AInstr(Prec p);
  AInstr(ASkip s);
  AInstr(AAssign a);
  AInstr(ASeq s);
  AInstr(AWhile w);

  const Node& node() const;

  friend bool operator==(const AInstr& a, const AInstr& b);

 private:
  std::shared_ptr<const Node> node_;
};

/// `{ assertion } body`: the assertion must hold whenever body is reached.
struct Prec {
  Assert assertion;
  AInstr body;
  bool operator==(const Prec&) const = default;
};

struct ASkip {
  bool operator==(const ASkip&) const = default;
};

struct AAssign {
  Ident target;
  AExpr value;
  bool operator==(const AAssign&) const = default;
};

struct ASeq {
  AInstr first;
  AInstr second;
  bool operator==(const ASeq&) const = default;
};

struct AWhile {
  BExpr test;
  Assert invariant;
  AInstr body;
  bool operator==(const AWhile&) const = default;
};

inline const AInstr::Node& AInstr::node() const { return *node_; }

// ---------------------------------------------------------------------------
// Builders

AExpr var(Ident name);
AExpr num(Integer n);
AExpr plus(AExpr lhs, AExpr rhs);
BExpr lt(AExpr lhs, AExpr rhs);

Instr skip();
Instr assign(Ident target, AExpr value);
Instr seq(Instr first, Instr second);
Instr while_loop(BExpr test, Instr body);

Assert test(BExpr b);
Assert negate(Assert a);
Assert conj(Assert lhs, Assert rhs);
Assert pred(Ident name, std::vector<AExpr> args);

AInstr prec(Assert a, AInstr body);
AInstr askip();
AInstr aassign(Ident target, AExpr value);
AInstr aseq(AInstr first, AInstr second);
AInstr awhile(BExpr test, Assert invariant, AInstr body);

/// `0 < 1`; the assertion language has no truth constants.
const Assert& true_assert();
/// `0 < 0`.
const Assert& false_assert();

// ---------------------------------------------------------------------------
// Structural operations

/// Erases every Prec node and every loop invariant.
Instr un_annot(const AInstr& i);

/// Annotates every program point of i with false_assert (dead code).
AInstr mark(const Instr& i);

bool is_keyword(std::string_view word);
bool is_identifier(std::string_view word);

/// Variables in order of first occurrence (left to right, pre-order).
std::vector<Ident> variables(const AExpr& a);
std::vector<Ident> variables(const BExpr& b);
std::vector<Ident> variables(const Instr& i);
std::vector<Ident> variables(const Assert& a);
std::vector<Ident> variables(const Condition& c);
std::vector<Ident> variables(const AInstr& i);

/// Number of nodes of each kind; used to predict vcg output length.
struct AInstrCounts {
  std::size_t prec = 0;
  std::size_t loops = 0;
};
AInstrCounts count_nodes(const AInstr& i);

}  // namespace imp
