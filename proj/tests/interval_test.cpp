#include <gtest/gtest.h>

#include <algorithm>

#include "imp/interval.hpp"
#include "support/gen.hpp"

namespace imp {
namespace {

using D = IntervalDomain;
using testing::members;

constexpr int kClip = 6;

bool includes_all(const Interval& v, const std::vector<Integer>& xs) {
  return std::all_of(xs.begin(), xs.end(), [&](const Integer& n) { return v.contains(n); });
}

TEST(IntervalOracle, AddJoinWidenAreSound) {
  const auto all = testing::small_intervals(3);
  for (const auto& a : all) {
    for (const auto& b : all) {
      Interval sum = D::add(a, b), j = D::join(a, b), w = D::widen(a, b);
      for (const auto& n : members(a, kClip)) {
        for (const auto& m : members(b, kClip)) ASSERT_TRUE(sum.contains(n + m));
        ASSERT_TRUE(j.contains(n));
        ASSERT_TRUE(w.contains(n));
      }
      ASSERT_TRUE(includes_all(j, members(b, kClip)));
      ASSERT_TRUE(includes_all(w, members(b, kClip)));
      ASSERT_TRUE(D::included(j, w));
    }
  }
}

TEST(IntervalOracle, JoinIsLeast) {
  const auto all = testing::small_intervals(3);
  for (const auto& a : all) {
    for (const auto& b : all) {
      Interval j = D::join(a, b);
      for (const auto& c : all) {
        if (D::included(a, c) && D::included(b, c)) ASSERT_TRUE(D::included(j, c));
      }
    }
  }
}

TEST(IntervalOracle, RestrictIsExact) {
  const auto all = testing::small_intervals(3);
  for (const auto& v : all) {
    for (const auto& bound : all) {
      // Members of v below some member of bound.
      std::vector<Integer> below, above;
      for (const auto& n : members(v, kClip)) {
        if (!bound.hi || n < *bound.hi) below.push_back(n);
        if (!bound.lo || n >= *bound.lo) above.push_back(n);
      }
      auto lt = D::restrict_lt(v, bound);
      auto ge = D::restrict_ge(v, bound);
      ASSERT_EQ(lt.has_value(), !below.empty());
      ASSERT_EQ(ge.has_value(), !above.empty());
      for (const auto& n : members(v, kClip)) {
        ASSERT_EQ(lt && lt->contains(n), std::find(below.begin(), below.end(), n) != below.end());
        ASSERT_EQ(ge && ge->contains(n), std::find(above.begin(), above.end(), n) != above.end());
      }
      if (lt) ASSERT_TRUE(D::included(*lt, v));
      if (ge) ASSERT_TRUE(D::included(*ge, v));
    }
  }
}

TEST(IntervalOracle, OrderAndWideningChains) {
  const auto all = testing::small_intervals(3);
  for (const auto& a : all) {
    ASSERT_TRUE(D::included(a, a));
    ASSERT_TRUE(D::included(a, D::top()));
    for (const auto& b : all) {
      if (D::included(a, b) && D::included(b, a)) ASSERT_EQ(a, b);
      // Any widening chain settles after at most two growth steps.
      Interval w = a;
      for (int k = 0; k < 3; ++k) w = D::widen(w, D::join(w, b));
      ASSERT_EQ(D::widen(w, D::join(w, b)), w);
    }
  }
}

}  // namespace
}  // namespace imp
