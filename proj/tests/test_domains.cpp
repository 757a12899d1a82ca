#include <doctest.h>

#include <sstream>

#include "stlmon/domains.hpp"

using namespace stlmon;

TEST_CASE("atom robustness") {
  CHECK(atom_robustness(Comparison::LT, 125.5, 120.0) == -5.5);
  CHECK(atom_robustness(Comparison::GT, 15.0, 10.0) == 5.0);
  CHECK(atom_robustness(Comparison::EQ, 1.0, 1.0) == 0.0);
  CHECK(atom_robustness(Comparison::EQ, 3.0, 1.0) == -2.0);
  CHECK(atom_robustness(Comparison::NE, 3.0, 1.0) == 2.0);
  CHECK(atom_robustness(Comparison::GE, 1.0, 3.0) == -2.0);
  CHECK(atom_robustness(Comparison::LE, 1.0, 3.0) == 2.0);
}

TEST_CASE("atom truth") {
  CHECK(atom_holds(Comparison::LE, 1.0, 1.0));
  CHECK_FALSE(atom_holds(Comparison::LT, 1.0, 1.0));
  CHECK(atom_holds(Comparison::EQ, 1.0, 1.0));
  CHECK(atom_holds(Comparison::NE, 1.0, 2.0));
  CHECK_FALSE(atom_holds(Comparison::GE, 0.5, 1.0));
}

TEST_CASE("interval algebra") {
  const RobustnessInterval a{-kInfinity, -5.5};
  const RobustnessInterval b{0.0, kInfinity};
  CHECK(interval_min(a, b) == a);
  CHECK(interval_max(RobustnessInterval::point(-5), b) == b);
  CHECK(interval_negate(a) == RobustnessInterval{5.5, kInfinity});
  const RobustnessInterval xs[] = {{1, 3}, {-1, 4}, {2, 2}};
  CHECK(interval_min(xs) == RobustnessInterval{-1, 2});
  CHECK(interval_max(xs) == RobustnessInterval{2, 4});
  CHECK_THROWS_AS(interval_min(std::span<const RobustnessInterval>{}), std::invalid_argument);
}

TEST_CASE("kleene connectives") {
  using enum ThreeValued;
  CHECK(kleene_and(True, Unknown) == Unknown);
  CHECK(kleene_and(False, Unknown) == False);
  CHECK(kleene_or(True, Unknown) == True);
  CHECK(kleene_or(False, Unknown) == Unknown);
  CHECK(kleene_not(Unknown) == Unknown);
  CHECK(kleene_implies(False, Unknown) == True);
}

TEST_CASE("sign abstraction") {
  CHECK(sign_abstraction({0.5, 2}) == ThreeValued::True);
  CHECK(sign_abstraction({-2, -0.5}) == ThreeValued::False);
  CHECK(sign_abstraction({-1, 1}) == ThreeValued::Unknown);
}

TEST_CASE("semantics tags") {
  CHECK(parse_semantics("rosi") == Semantics::Rosi);
  CHECK(parse_semantics("EagerQualitative") == Semantics::EagerQualitative);
  CHECK(parse_semantics("delayed-qualitative") == Semantics::DelayedQualitative);
  CHECK(to_string(Semantics::DelayedQuantitative) == "delayed-quantitative");
  CHECK_THROWS(parse_semantics("fuzzy"));
}

TEST_CASE("verdict display") {
  CHECK(format_verdict(Verdict::interval({-kInfinity, -5.5})) == "RobustnessInterval(-inf, -5.5)");
  CHECK(format_verdict(Verdict::boolean(true)) == "Boolean(true)");
  CHECK(format_verdict(Verdict::robustness(1.5)) == "Robustness(1.5)");
  CHECK(format_verdict(Verdict::three_valued(ThreeValued::Unknown)) == "ThreeValued(Unknown)");
  std::ostringstream os;
  os << Verdict::three_valued(ThreeValued::False);
  CHECK(os.str() == "ThreeValued(False)");
}

TEST_CASE("verdict tolerance") {
  CHECK(Verdict::robustness(1.0).approx_equal(Verdict::robustness(1.0 + 1e-12), 1e-9));
  CHECK_FALSE(Verdict::robustness(1.0).approx_equal(Verdict::robustness(1.1), 1e-9));
  CHECK_FALSE(Verdict::robustness(1.0).approx_equal(Verdict::boolean(true), 1e-9));
  CHECK(Verdict::interval({-kInfinity, 2}).approx_equal(Verdict::interval({-kInfinity, 2}), 1e-9));
  CHECK_FALSE(Verdict::robustness(kInfinity).approx_equal(Verdict::robustness(1e300), 1e-9));
}
