#include <gtest/gtest.h>

#include "imp/assertions.hpp"
#include "imp/concrete.hpp"
#include "imp/parse.hpp"
#include "imp/pretty.hpp"
#include "support/gen.hpp"

namespace imp {
namespace {

Valuation with(std::initializer_list<std::pair<const char*, int>> entries) {
  Valuation g;
  for (const auto& [name, value] : entries) g.set(name, value);
  return g;
}

const PredEnv& m = builtin_pred_env();

TEST(Total, Evaluation) {
  EXPECT_EQ(af_total(with({{"x", 3}}), parse_aexpr("x + 4")), 7);
  EXPECT_EQ(af_total(Valuation{}, parse_aexpr("z + z")), 0);
  EXPECT_EQ(lf_total(with({{"y", 3}, {"x", 2}}), {var("y"), var("x")}),
            (std::vector<Integer>{3, 2}));
  EXPECT_TRUE(bf_total(Valuation{}, parse_bexpr("z < 1")));
}

TEST(Subst, Examples) {
  EXPECT_EQ(a_subst(parse_assert("pp(y,x)"), "x", parse_aexpr("x + 1")),
            parse_assert("pp(y,x + 1)"));
  Assert inv = parse_assert("le(x,n) /\\ pp(y,x)");
  Assert once = a_subst(inv, "y", parse_aexpr("x + y"));
  EXPECT_EQ(a_subst(once, "x", parse_aexpr("x + 1")), parse_assert("le(x + 1,n) /\\ pp(x + 1 + y,x + 1)"));
  EXPECT_EQ(a_subst(parse_assert("x < y"), "y", num(3)), parse_assert("x < 3"));
}

TEST(Interp, Examples) {
  EXPECT_TRUE(i_a(m, Valuation{}, parse_assert("1 < 2")));
  EXPECT_TRUE(i_a(m, with({{"y", 3}, {"x", 2}}), parse_assert("pp(y,x)")));
  EXPECT_FALSE(i_a(m, with({{"x", 5}, {"n", 3}}), parse_assert("le(x,n)")));
  EXPECT_TRUE(i_c(m, Valuation{}, {false_assert(), parse_assert("x < 0")}));
  EXPECT_FALSE(i_c(m, Valuation{}, {true_assert(), false_assert()}));
  EXPECT_TRUE(i_c(m, with({{"n", 1}}), parse_condition("le(x,n) -> le(x,n)")));
}

TEST(Preds, Builtins) {
  std::vector<Integer> a{1, 2}, b{3, 3}, c{1}, d{6, 3};
  EXPECT_TRUE(f_p(m, "le")(a));
  EXPECT_FALSE(f_p(m, "pp")(b));
  EXPECT_FALSE(f_p(m, "le")(c));
  EXPECT_TRUE(f_p(m, "pp")(d));
  EXPECT_TRUE(f_p(m, "unknown")(c));
  EXPECT_EQ(unbound_predicates(m, parse_assert("le(x,y) /\\ ~ q(x) /\\ q()")),
            (std::vector<Ident>{"q"}));
}

TEST(Preds, FirstMatch) {
  PredEnv env;
  env.bind("p", [](std::span<const Integer>) { return false; });
  env.bind("p", [](std::span<const Integer>) { return true; });
  EXPECT_FALSE(i_a(env, Valuation{}, parse_assert("p()")));
}

TEST(Sampled, Examples) {
  Assert a = parse_assert("le(x,y) /\\ z < 3");
  EXPECT_FALSE(valid_sampled(m, {a, a}).refuted());
  SampledVerdict v = valid_sampled(m, parse_condition("0 < 1 -> x < 0"));
  ASSERT_TRUE(v.refuted());
  EXPECT_FALSE((*v.counterexample)("x") < 0);
  EXPECT_FALSE(valid_sampled(m, parse_condition("~ x < n /\\ le(x,n) /\\ pp(y,x) -> pp(y,n)")).refuted());
}

TEST(Sampled, SamplesCoverGridAndDoNotRepeatSeeds) {
  SampleSpec spec;
  spec.random_count = 10;
  auto samples = structured_samples({"a", "b"}, spec);
  EXPECT_EQ(samples.size(), 49u + 10u);
  EXPECT_EQ(samples, structured_samples({"a", "b"}, spec));
  auto none = structured_samples({}, spec);
  EXPECT_FALSE(none.empty());
}

TEST(ValuationText, RoundTrip) {
  Valuation g = with({{"x", -3}, {"y", 4}});
  EXPECT_EQ(parse_valuation(format_valuation(g)), g);
  EXPECT_EQ(parse_valuation("x=0"), Valuation{});
}

TEST(AssertionsProperty, StructuralInterpretation) {
  testing::Gen gen(41);
  for (int k = 0; k < 2000; ++k) {
    Assert a = gen.assertion(4), b = gen.assertion(4);
    Valuation g = gen.valuation();
    ASSERT_EQ(i_a(m, g, negate(a)), !i_a(m, g, a));
    ASSERT_EQ(i_a(m, g, conj(a, b)), i_a(m, g, a) && i_a(m, g, b));
  }
}

TEST(AssertionsProperty, SubstitutionOfAbsentVariableIsIdentity) {
  testing::Gen gen(42);
  for (int k = 0; k < 1000; ++k) {
    Assert a = gen.assertion(4);
    ASSERT_EQ(a_subst(a, "fresh", gen.aexpr(3)), a);
  }
}

TEST(AssertionsProperty, SubstitutionMatchesUpdate) {
  testing::Gen gen(43);
  int exercised = 0;
  for (int k = 0; k < 3000; ++k) {
    Env r1 = gen.env();
    if (r1.empty()) continue;
    Ident x = gen.pick(r1.names());
    AExpr e = gen.aexpr(3);
    auto v = af(r1, e);
    if (!v) continue;
    Env r2 = *update(r1, x, *v);
    Assert a = gen.assertion(4);
    Valuation g = gen.valuation();
    ++exercised;
    ASSERT_EQ(i_a(m, env_overlay(r1, g), a_subst(a, x, e)), i_a(m, env_overlay(r2, g), a))
        << pretty(a) << " [" << x << " <- " << pretty(e) << "]";
  }
  EXPECT_GT(exercised, 500);
}

}  // namespace
}  // namespace imp
