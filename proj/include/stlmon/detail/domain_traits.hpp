#pragma once

// Value algebra of each semantics, shared by the oracle and the engines.

#include <algorithm>

#include "stlmon/domains.hpp"

namespace stlmon::detail {

struct RobustnessDomain {
  using Value = ExtendedReal;
  static constexpr bool kPartial = false;
  static Value top() { return kInfinity; }
  static Value neg(Value a) { return -a; }
  static Value conj(Value a, Value b) { return std::min(a, b); }
  static Value disj(Value a, Value b) { return std::max(a, b); }
  static Value atom(Comparison cmp, double v, double c) { return atom_robustness(cmp, v, c); }
  static Verdict verdict(Value v) { return Verdict::robustness(v); }
};

struct BooleanDomain {
  using Value = bool;
  static constexpr bool kPartial = false;
  static Value top() { return true; }
  static Value neg(Value a) { return !a; }
  static Value conj(Value a, Value b) { return a && b; }
  static Value disj(Value a, Value b) { return a || b; }
  static Value atom(Comparison cmp, double v, double c) { return atom_holds(cmp, v, c); }
  static Verdict verdict(Value v) { return Verdict::boolean(v); }
};

struct ThreeValuedDomain {
  using Value = ThreeValued;
  static constexpr bool kPartial = true;
  static Value top() { return ThreeValued::True; }
  static Value unknown() { return ThreeValued::Unknown; }
  static Value neg(Value a) { return kleene_not(a); }
  static Value conj(Value a, Value b) { return kleene_and(a, b); }
  static Value disj(Value a, Value b) { return kleene_or(a, b); }
  static Value atom(Comparison cmp, double v, double c) {
    return to_three_valued(atom_holds(cmp, v, c));
  }
  /// A non-Unknown verdict can never change on any extension.
  static bool decided(Value v) { return v != ThreeValued::Unknown; }
  static Verdict verdict(Value v) { return Verdict::three_valued(v); }
};

struct IntervalDomain {
  using Value = RobustnessInterval;
  static constexpr bool kPartial = true;
  static Value top() { return RobustnessInterval::point(kInfinity); }
  static Value unknown() { return RobustnessInterval::unknown(); }
  static Value neg(Value a) { return interval_negate(a); }
  static Value conj(Value a, Value b) { return interval_min(a, b); }
  static Value disj(Value a, Value b) { return interval_max(a, b); }
  static Value atom(Comparison cmp, double v, double c) {
    return RobustnessInterval::point(atom_robustness(cmp, v, c));
  }
  // Settled only once the horizon is covered; see engine_partial.cpp.
  static bool decided(const Value&) { return false; }
  static Verdict verdict(Value v) { return Verdict::interval(v); }
};

}  // namespace stlmon::detail
