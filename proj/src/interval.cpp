#include "imp/interval.hpp"

#include <stdexcept>

#include "text.hpp"

namespace imp {

namespace {

// Lower bounds compare with nullopt as -inf, upper bounds with nullopt as +inf.
bool lower_le(const std::optional<Integer>& a, const std::optional<Integer>& b) {
  if (!a) return true;
  if (!b) return false;
  return *a <= *b;
}

bool upper_le(const std::optional<Integer>& a, const std::optional<Integer>& b) {
  if (!b) return true;
  if (!a) return false;
  return *a <= *b;
}

}  // namespace

std::optional<Interval> Interval::meet(const Interval& a, const Interval& b) {
  Interval out{lower_le(a.lo, b.lo) ? b.lo : a.lo, upper_le(a.hi, b.hi) ? a.hi : b.hi};
  if (out.lo && out.hi && *out.lo > *out.hi) return std::nullopt;
  return out;
}

std::string to_string(const Interval& v) {
  return "[" + (v.lo ? to_string(*v.lo) : std::string("-inf")) + "," +
         (v.hi ? to_string(*v.hi) : std::string("+inf")) + "]";
}

Interval parse_interval(std::string_view source) {
  auto fail = [&] {
    return std::invalid_argument("invalid interval '" + std::string(source) + "'");
  };
  std::string_view s = text::trim(source);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw fail();
  s = s.substr(1, s.size() - 2);
  auto comma = s.find(',');
  if (comma == std::string_view::npos) throw fail();
  std::string_view lo_text = text::trim(s.substr(0, comma));
  std::string_view hi_text = text::trim(s.substr(comma + 1));

  Interval out;
  if (lo_text != "-inf") {
    auto n = parse_integer(lo_text);
    if (!n) throw fail();
    out.lo = std::move(*n);
  }
  if (hi_text != "+inf" && hi_text != "inf") {
    auto n = parse_integer(hi_text);
    if (!n) throw fail();
    out.hi = std::move(*n);
  }
  if (out.lo && out.hi && *out.lo > *out.hi) {
    throw std::invalid_argument("empty interval '" + std::string(source) + "'");
  }
  return out;
}

Interval IntervalDomain::add(const Interval& a, const Interval& b) {
  Interval out;
  if (a.lo && b.lo) out.lo = *a.lo + *b.lo;
  if (a.hi && b.hi) out.hi = *a.hi + *b.hi;
  return out;
}

bool IntervalDomain::included(const Interval& a, const Interval& b) {
  return lower_le(b.lo, a.lo) && upper_le(a.hi, b.hi);
}

Interval IntervalDomain::join(const Interval& a, const Interval& b) {
  return {lower_le(a.lo, b.lo) ? a.lo : b.lo, upper_le(a.hi, b.hi) ? b.hi : a.hi};
}

Interval IntervalDomain::widen(const Interval& a, const Interval& b) {
  Interval out = a;
  if (!lower_le(a.lo, b.lo)) out.lo.reset();
  if (!upper_le(b.hi, a.hi)) out.hi.reset();
  return out;
}

std::optional<Interval> IntervalDomain::restrict_lt(const Interval& v, const Interval& bound) {
  if (!bound.hi) return v;
  return Interval::meet(v, Interval::at_most(*bound.hi - 1));
}

std::optional<Interval> IntervalDomain::restrict_ge(const Interval& v, const Interval& bound) {
  if (!bound.lo) return v;
  return Interval::meet(v, Interval::at_least(*bound.lo));
}

Assert IntervalDomain::to_assert(const Interval& v, const Ident& name) {
  std::optional<Assert> lower;
  std::optional<Assert> upper;
  if (v.lo) lower = test(lt(num(*v.lo - 1), var(name)));
  if (v.hi) upper = test(lt(var(name), num(*v.hi + 1)));
  if (lower && upper) return conj(*lower, *upper);
  if (lower) return *lower;
  if (upper) return *upper;
  return true_assert();
}

IntervalEnv parse_interval_env(std::string_view source) {
  IntervalEnv out;
  for (auto item : text::split_items(source)) {
    auto [name, value] = text::split_binding(item);
    if (!is_identifier(name)) {
      throw std::invalid_argument("invalid variable name '" + std::string(name) + "'");
    }
    if (out.find(std::string(name))) {
      throw std::invalid_argument("variable '" + std::string(name) + "' is bound twice");
    }
    out.bindings().push_back({std::string(name), parse_interval(value)});
  }
  return out;
}

std::string format_interval_env(const IntervalEnv& l) {
  std::string out;
  for (const auto& b : l.bindings()) {
    if (!out.empty()) out += ',';
    out += b.name;
    out += '=';
    out += to_string(b.value);
  }
  return out;
}

}  // namespace imp
