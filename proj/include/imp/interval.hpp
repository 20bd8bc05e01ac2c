#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "imp/absint.hpp"
#include "imp/syntax.hpp"

namespace imp {

/// A non-empty, possibly unbounded interval of integers. A missing bound is
/// infinite. Emptiness is never stored; it shows up as a nullopt result of
/// Interval::meet and the restrict operations.
struct Interval {
  std::optional<Integer> lo;
  std::optional<Integer> hi;

  static Interval top() { return {}; }
  static Interval point(const Integer& n) { return {n, n}; }
  static Interval closed(const Integer& lo, const Integer& hi) { return {lo, hi}; }
  static Interval at_least(const Integer& lo) { return {lo, std::nullopt}; }
  static Interval at_most(const Integer& hi) { return {std::nullopt, hi}; }

  bool is_top() const { return !lo && !hi; }
  bool contains(const Integer& n) const { return (!lo || *lo <= n) && (!hi || n <= *hi); }

  static std::optional<Interval> meet(const Interval& a, const Interval& b);

  bool operator==(const Interval&) const = default;
};

/// `[lo,hi]` with `-inf` / `+inf` for missing bounds.
std::string to_string(const Interval& v);
Interval parse_interval(std::string_view text);

struct IntervalDomain {
  using Value = Interval;

  static Interval top() { return Interval::top(); }
  static Interval from_const(const Integer& n) { return Interval::point(n); }
  static Interval add(const Interval& a, const Interval& b);
  static bool included(const Interval& a, const Interval& b);
  static Interval join(const Interval& a, const Interval& b);
  /// Keeps each bound that did not grow and sends a grown bound to infinity.
  static Interval widen(const Interval& a, const Interval& b);
  /// Members of v that are below some member of bound: v meet (-inf, hi(bound)-1].
  static std::optional<Interval> restrict_lt(const Interval& v, const Interval& bound);
  /// Members of v that are at least some member of bound: v meet [lo(bound), +inf).
  static std::optional<Interval> restrict_ge(const Interval& v, const Interval& bound);
  /// `lo-1 < x /\ x < hi+1`, dropping the side of an infinite bound.
  static Assert to_assert(const Interval& v, const Ident& name);
};

static_assert(AbstractDomain<IntervalDomain>);

using IntervalAnalyzer = Analyzer<IntervalDomain>;
using IntervalEnv = AbEnv<Interval>;

/// `name=[lo,hi]` comma list, e.g. `x=[0,0],n=[3,+inf]`.
IntervalEnv parse_interval_env(std::string_view text);
std::string format_interval_env(const IntervalEnv& l);

}  // namespace imp
