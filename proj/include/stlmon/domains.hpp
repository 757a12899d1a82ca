#pragma once

#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <variant>

#include "stlmon/formula.hpp"

namespace stlmon {

/// Real robustness extended with +/-inf. Never NaN.
using ExtendedReal = double;

inline constexpr ExtendedReal kInfinity = std::numeric_limits<double>::infinity();

/// Enclosure [lo, hi] of every robustness value a partial trace can still reach.
struct RobustnessInterval {
  ExtendedReal lo = -kInfinity;
  ExtendedReal hi = kInfinity;

  static constexpr RobustnessInterval point(ExtendedReal v) { return {v, v}; }
  static constexpr RobustnessInterval unknown() { return {-kInfinity, kInfinity}; }

  bool is_point() const { return lo == hi; }

  friend bool operator==(const RobustnessInterval&, const RobustnessInterval&) = default;
};

enum class ThreeValued { False, Unknown, True };

/// Selects the verdict domain and emission policy of a monitor.
enum class Semantics { DelayedQuantitative, DelayedQualitative, EagerQualitative, Rosi };

/// `delayed-quantitative`, `delayed-qualitative`, `eager-qualitative`, `rosi`.
std::string_view to_string(Semantics s);

/// Accepts the tags above and the CamelCase enumerator names, case-insensitively.
Semantics parse_semantics(std::string_view text);

/// Robustness of `value cmp threshold` for the identity predicate.
ExtendedReal atom_robustness(Comparison cmp, double value, double threshold);

/// Boolean truth of `value cmp threshold`; EQ/NE use exact comparison.
bool atom_holds(Comparison cmp, double value, double threshold);

RobustnessInterval interval_negate(const RobustnessInterval& x);

/// Pairwise forms of interval_min / interval_max.
inline RobustnessInterval interval_min(const RobustnessInterval& a,
                                       const RobustnessInterval& b) {
  return {a.lo < b.lo ? a.lo : b.lo, a.hi < b.hi ? a.hi : b.hi};
}
inline RobustnessInterval interval_max(const RobustnessInterval& a,
                                       const RobustnessInterval& b) {
  return {a.lo > b.lo ? a.lo : b.lo, a.hi > b.hi ? a.hi : b.hi};
}

/// Throws std::invalid_argument on an empty list.
RobustnessInterval interval_min(std::span<const RobustnessInterval> xs);
RobustnessInterval interval_max(std::span<const RobustnessInterval> xs);

// Strong Kleene connectives.
inline ThreeValued kleene_not(ThreeValued a) {
  switch (a) {
    case ThreeValued::True: return ThreeValued::False;
    case ThreeValued::False: return ThreeValued::True;
    default: return ThreeValued::Unknown;
  }
}
inline ThreeValued kleene_and(ThreeValued a, ThreeValued b) { return a < b ? a : b; }
inline ThreeValued kleene_or(ThreeValued a, ThreeValued b) { return a > b ? a : b; }
inline ThreeValued kleene_implies(ThreeValued a, ThreeValued b) {
  return kleene_or(kleene_not(a), b);
}

inline ThreeValued to_three_valued(bool b) {
  return b ? ThreeValued::True : ThreeValued::False;
}

/// True if lo > 0, False if hi < 0, Unknown otherwise.
ThreeValued sign_abstraction(const RobustnessInterval& x);

std::string_view to_string(ThreeValued v);

/// Output of one evaluation under one of the four semantics.
class Verdict {
 public:
  using Value = std::variant<bool, ExtendedReal, ThreeValued, RobustnessInterval>;

  Verdict() = default;
  static Verdict boolean(bool b) { return Verdict(Value{std::in_place_index<0>, b}); }
  static Verdict robustness(ExtendedReal r) { return Verdict(Value{std::in_place_index<1>, r}); }
  static Verdict three_valued(ThreeValued v) { return Verdict(Value{std::in_place_index<2>, v}); }
  static Verdict interval(RobustnessInterval i) { return Verdict(Value{std::in_place_index<3>, i}); }

  const Value& value() const { return value_; }

  bool is_boolean() const { return value_.index() == 0; }
  bool is_robustness() const { return value_.index() == 1; }
  bool is_three_valued() const { return value_.index() == 2; }
  bool is_interval() const { return value_.index() == 3; }

  bool as_boolean() const { return std::get<0>(value_); }
  ExtendedReal as_robustness() const { return std::get<1>(value_); }
  ThreeValued as_three_valued() const { return std::get<2>(value_); }
  const RobustnessInterval& as_interval() const { return std::get<3>(value_); }

  /// Same tag; numeric payloads within `tolerance` (infinities must match).
  bool approx_equal(const Verdict& other, double tolerance) const;

  friend bool operator==(const Verdict&, const Verdict&) = default;

 private:
  explicit Verdict(Value v) : value_(std::move(v)) {}
  Value value_{std::in_place_index<0>, false};
};

/// `Boolean(true)`, `Robustness(1.5)`, `ThreeValued(Unknown)`,
/// `RobustnessInterval(-inf, -5.5)`.
std::string format_verdict(const Verdict& v);
std::ostream& operator<<(std::ostream& os, const Verdict& v);

}  // namespace stlmon
