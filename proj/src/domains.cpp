#include "stlmon/domains.hpp"

#include <cctype>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace stlmon {

ExtendedReal atom_robustness(Comparison cmp, double value, double threshold) {
  switch (cmp) {
    case Comparison::GT:
    case Comparison::GE: return value - threshold;
    case Comparison::LT:
    case Comparison::LE: return threshold - value;
    case Comparison::EQ: return -std::abs(value - threshold);
    case Comparison::NE: return std::abs(value - threshold);
  }
  return 0.0;
}

bool atom_holds(Comparison cmp, double value, double threshold) {
  switch (cmp) {
    case Comparison::LT: return value < threshold;
    case Comparison::LE: return value <= threshold;
    case Comparison::GT: return value > threshold;
    case Comparison::GE: return value >= threshold;
    case Comparison::EQ: return value == threshold;
    case Comparison::NE: return value != threshold;
  }
  return false;
}

RobustnessInterval interval_negate(const RobustnessInterval& x) { return {-x.hi, -x.lo}; }

RobustnessInterval interval_min(std::span<const RobustnessInterval> xs) {
  if (xs.empty()) throw std::invalid_argument("interval_min of an empty list");
  RobustnessInterval acc = xs.front();
  for (const auto& x : xs.subspan(1)) acc = interval_min(acc, x);
  return acc;
}

RobustnessInterval interval_max(std::span<const RobustnessInterval> xs) {
  if (xs.empty()) throw std::invalid_argument("interval_max of an empty list");
  RobustnessInterval acc = xs.front();
  for (const auto& x : xs.subspan(1)) acc = interval_max(acc, x);
  return acc;
}

ThreeValued sign_abstraction(const RobustnessInterval& x) {
  if (x.lo > 0) return ThreeValued::True;
  if (x.hi < 0) return ThreeValued::False;
  return ThreeValued::Unknown;
}

std::string_view to_string(ThreeValued v) {
  switch (v) {
    case ThreeValued::True: return "True";
    case ThreeValued::False: return "False";
    case ThreeValued::Unknown: return "Unknown";
  }
  return "?";
}

std::string_view to_string(Semantics s) {
  switch (s) {
    case Semantics::DelayedQuantitative: return "delayed-quantitative";
    case Semantics::DelayedQualitative: return "delayed-qualitative";
    case Semantics::EagerQualitative: return "eager-qualitative";
    case Semantics::Rosi: return "rosi";
  }
  return "?";
}

Semantics parse_semantics(std::string_view text) {
  std::string key;
  for (char c : text) {
    if (c == '-' || c == '_') continue;
    key += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  if (key == "delayedquantitative") return Semantics::DelayedQuantitative;
  if (key == "delayedqualitative") return Semantics::DelayedQualitative;
  if (key == "eagerqualitative") return Semantics::EagerQualitative;
  if (key == "rosi") return Semantics::Rosi;
  throw std::invalid_argument("unknown semantics '" + std::string(text) + "'");
}

namespace {
bool close(double a, double b, double tol) {
  if (std::isinf(a) || std::isinf(b)) return a == b;
  return std::abs(a - b) <= tol;
}
}  // namespace

bool Verdict::approx_equal(const Verdict& other, double tolerance) const {
  if (value_.index() != other.value_.index()) return false;
  switch (value_.index()) {
    case 1: return close(as_robustness(), other.as_robustness(), tolerance);
    case 3:
      return close(as_interval().lo, other.as_interval().lo, tolerance) &&
             close(as_interval().hi, other.as_interval().hi, tolerance);
    default: return *this == other;
  }
}

std::string format_verdict(const Verdict& v) {
  switch (v.value().index()) {
    case 0: return std::string("Boolean(") + (v.as_boolean() ? "true" : "false") + ")";
    case 1: return "Robustness(" + format_number(v.as_robustness()) + ")";
    case 2: return "ThreeValued(" + std::string(to_string(v.as_three_valued())) + ")";
    default:
      return "RobustnessInterval(" + format_number(v.as_interval().lo) + ", " +
             format_number(v.as_interval().hi) + ")";
  }
}

std::ostream& operator<<(std::ostream& os, const Verdict& v) { return os << format_verdict(v); }

}  // namespace stlmon
