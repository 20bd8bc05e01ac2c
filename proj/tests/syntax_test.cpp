#include <gtest/gtest.h>

#include "imp/parse.hpp"
#include "imp/pretty.hpp"
#include "imp/syntax.hpp"
#include "support/gen.hpp"

namespace imp {
namespace {

const char* kSumAnnotated =
    "while x < n do [le(x,n) /\\ pp(y,x)] x:=x+1; y:=x+y done";

AInstr sum_annotated_ast() {
  return awhile(lt(var("x"), var("n")),
                conj(pred("le", {var("x"), var("n")}), pred("pp", {var("y"), var("x")})),
                aseq(aassign("x", plus(var("x"), num(1))), aassign("y", plus(var("x"), var("y")))));
}

Instr sum_bare_ast() {
  return while_loop(lt(var("x"), var("n")),
                    seq(assign("x", plus(var("x"), num(1))), assign("y", plus(var("x"), var("y")))));
}

TEST(Parse, SkipIsASkip) { EXPECT_EQ(parse_instr("skip"), askip()); }

TEST(Parse, SumProgramAnnotated) { EXPECT_EQ(parse_instr(kSumAnnotated), sum_annotated_ast()); }

TEST(Parse, CompactSpacing) {
  EXPECT_EQ(parse_instr("while x<n do [le(x,n)/\\pp(y,x)] x:=x+1;y:=x+y done"),
            sum_annotated_ast());
}

TEST(Parse, SequenceIsRightNested) {
  EXPECT_EQ(parse_instr("x:=1; y:=2"), aseq(aassign("x", num(1)), aassign("y", num(2))));
  EXPECT_EQ(parse_bare("a:=1; b:=2; c:=3"),
            seq(assign("a", num(1)), seq(assign("b", num(2)), assign("c", num(3)))));
}

TEST(Parse, BarePrograms) {
  EXPECT_EQ(parse_bare("skip"), skip());
  EXPECT_EQ(parse_bare("while x < n do x:=x+1; y:=x+y done"), sum_bare_ast());
  EXPECT_EQ(parse_bare("while 0 < 1 do skip done"), while_loop(lt(num(0), num(1)), skip()));
}

TEST(Parse, BareRejectsAnnotations) {
  EXPECT_THROW(parse_bare("{ 0 < 1 } skip"), ParseError);
  EXPECT_THROW(parse_bare(kSumAnnotated), ParseError);
}

TEST(Parse, AnnotatedLoopNeedsInvariant) {
  EXPECT_THROW(parse_instr("while x < n do skip done"), ParseError);
}

TEST(Parse, Assertions) {
  EXPECT_EQ(parse_assert("pp(y,n)"), pred("pp", {var("y"), var("n")}));
  EXPECT_EQ(parse_assert("~ x < 3 /\\ le(x,n)"),
            conj(negate(test(lt(var("x"), num(3)))), pred("le", {var("x"), var("n")})));
  EXPECT_EQ(parse_assert("0 < 1"), true_assert());
  EXPECT_EQ(parse_assert("a() /\\ b() /\\ c()"), parse_assert("a() /\\ (b() /\\ c())"));
  EXPECT_EQ(parse_assert("q()"), pred("q", {}));
}

TEST(Parse, ParenthesisedComparisonAndAssertion) {
  EXPECT_EQ(parse_assert("(x + 1) < 2"), test(lt(plus(var("x"), num(1)), num(2))));
  EXPECT_EQ(parse_assert("(0 < 1 /\\ p()) /\\ q()"),
            conj(conj(true_assert(), pred("p", {})), pred("q", {})));
}

TEST(Parse, PlusIsLeftAssociative) {
  EXPECT_EQ(parse_aexpr("1 + 2 + 3"), plus(plus(num(1), num(2)), num(3)));
  EXPECT_EQ(parse_aexpr("1 + (2 + 3)"), plus(num(1), plus(num(2), num(3))));
}

TEST(Parse, NegativeAndBigLiterals) {
  EXPECT_EQ(parse_aexpr("x + -3"), plus(var("x"), num(-3)));
  Integer big("123456789012345678901234567890");
  EXPECT_EQ(parse_aexpr("123456789012345678901234567890"), num(big));
  EXPECT_EQ(parse_aexpr("007"), num(7));
}

TEST(Parse, Condition) {
  EXPECT_EQ(parse_condition("le(x,n) -> 0 < 1"),
            (Condition{pred("le", {var("x"), var("n")}), true_assert()}));
}

TEST(Parse, KeywordsAreNotIdentifiers) {
  EXPECT_THROW(parse_bare("do := 1"), ParseError);
  EXPECT_THROW(parse_aexpr("skip"), ParseError);
  EXPECT_TRUE(is_identifier("_x1"));
  EXPECT_FALSE(is_identifier("1x"));
  EXPECT_FALSE(is_identifier("while"));
}

TEST(Parse, ErrorCarriesPosition) {
  try {
    parse_bare("x := 1;\n  y := ");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 8u);
    EXPECT_FALSE(e.expected().empty());
  }
  EXPECT_THROW(parse_bare("x := 1 junk"), ParseError);
  EXPECT_THROW(parse_aexpr("x - 1"), ParseError);
  EXPECT_THROW(parse_bare(""), ParseError);
}

TEST(Pretty, Basics) {
  EXPECT_EQ(pretty(askip()), "skip");
  EXPECT_EQ(pretty(plus(num(1), plus(var("x"), num(2)))), "1 + (x + 2)");
  EXPECT_EQ(pretty(plus(plus(num(1), var("x")), num(2))), "1 + x + 2");
  EXPECT_EQ(pretty(sum_annotated_ast()),
            "while x < n do [ le(x,n) /\\ pp(y,x) ] x := x + 1; y := x + y done");
  EXPECT_EQ(pretty(Condition{true_assert(), false_assert()}), "0 < 1 -> 0 < 0");
}

TEST(Pretty, GroupingNeededForRoundTrip) {
  AInstr left_seq = aseq(aseq(askip(), askip()), askip());
  EXPECT_EQ(pretty(left_seq), "(skip; skip); skip");
  EXPECT_EQ(parse_instr(pretty(left_seq)), left_seq);

  AInstr guarded_seq = prec(true_assert(), aseq(askip(), askip()));
  EXPECT_EQ(parse_instr(pretty(guarded_seq)), guarded_seq);

  Assert left_conj = conj(conj(pred("a", {}), pred("b", {})), pred("c", {}));
  EXPECT_EQ(parse_assert(pretty(left_conj)), left_conj);
  Assert negated_conj = negate(conj(pred("a", {}), pred("b", {})));
  EXPECT_EQ(parse_assert(pretty(negated_conj)), negated_conj);
}

TEST(Annot, UnAnnot) {
  EXPECT_EQ(un_annot(prec(true_assert(), askip())), skip());
  EXPECT_EQ(un_annot(sum_annotated_ast()), sum_bare_ast());
}

TEST(Annot, MarkUsesFalse) {
  const Assert f = false_assert();
  EXPECT_EQ(mark(skip()), prec(f, askip()));
  EXPECT_EQ(mark(seq(skip(), skip())), aseq(prec(f, askip()), prec(f, askip())));
  BExpr b = lt(var("x"), num(1));
  EXPECT_EQ(mark(while_loop(b, skip())), prec(f, awhile(b, f, prec(f, askip()))));
}

TEST(Annot, CountNodes) {
  AInstrCounts c = count_nodes(prec(true_assert(), sum_annotated_ast()));
  EXPECT_EQ(c.prec, 1u);
  EXPECT_EQ(c.loops, 1u);
}

TEST(Variables, FirstOccurrenceOrder) {
  EXPECT_EQ(variables(sum_bare_ast()), (std::vector<Ident>{"x", "n", "y"}));
}

TEST(SyntaxProperty, UnAnnotMarkIsIdentity) {
  testing::Gen gen(11);
  for (int k = 0; k < 500; ++k) {
    Instr i = gen.instr(5);
    ASSERT_EQ(un_annot(mark(i)), i) << pretty(i);
  }
}

TEST(SyntaxProperty, RoundTripAllTypes) {
  testing::Gen gen(12);
  for (int k = 0; k < 300; ++k) {
    AExpr a = gen.aexpr(5);
    ASSERT_EQ(parse_aexpr(pretty(a)), a) << pretty(a);
    BExpr b = gen.bexpr(4);
    ASSERT_EQ(parse_bexpr(pretty(b)), b) << pretty(b);
    Instr i = gen.instr(5);
    ASSERT_EQ(parse_bare(pretty(i)), i) << pretty(i);
    Assert s = gen.assertion(5);
    ASSERT_EQ(parse_assert(pretty(s)), s) << pretty(s);
    Condition c = gen.condition(4);
    ASSERT_EQ(parse_condition(pretty(c)), c) << pretty(c);
    AInstr ai = gen.ainstr(5);
    ASSERT_EQ(parse_instr(pretty(ai)), ai) << pretty(ai);
  }
}

}  // namespace
}  // namespace imp
