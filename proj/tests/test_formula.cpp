#include <doctest.h>

#include <random>

#include "stlmon/formula.hpp"
#include "support.hpp"

using namespace stlmon;

TEST_CASE("parse: globally over a variable threshold") {
  auto f = parse_formula("G[0, 5] (temp < $MAX_TEMP)");
  auto expected = Formula::globally(
      TimeInterval::checked(0, 5),
      Formula::atom("temp", Comparison::LT, Threshold::variable("MAX_TEMP")));
  CHECK(f == expected);
}

TEST_CASE("parse: implication is looser than the eventually prefix") {
  auto f = parse_formula("pressure > 10.0 -> F[0, 2] valve_open == 1.0");
  auto expected = Formula::implication(
      Formula::atom("pressure", Comparison::GT, Threshold::constant(10.0)),
      Formula::eventually(TimeInterval::checked(0, 2),
                          Formula::atom("valve_open", Comparison::EQ, Threshold::constant(1.0))));
  CHECK(f == expected);
}

TEST_CASE("parse: literal true") { CHECK(parse_formula("true") == Formula::truth()); }

TEST_CASE("parse: reversed interval is rejected") {
  CHECK_THROWS_AS(parse_formula("G[5, 2] (x > 0)"), IntervalError);
  CHECK_THROWS_AS(parse_formula("F[-1, 2] (x > 0)"), IntervalError);
}

TEST_CASE("parse: precedence table") {
  auto a = Formula::atom("a", Comparison::GT, Threshold::constant(0));
  auto b = Formula::atom("b", Comparison::GT, Threshold::constant(0));
  auto c = Formula::atom("c", Comparison::GT, Threshold::constant(0));
  CHECK(parse_formula("a > 0 -> b > 0 and c > 0") ==
        Formula::implication(a, Formula::conjunction(b, c)));
  CHECK(parse_formula("not a > 0 and b > 0") ==
        Formula::conjunction(Formula::negation(a), b));
  CHECK(parse_formula("a > 0 -> b > 0 -> c > 0") ==
        Formula::implication(a, Formula::implication(b, c)));
  CHECK(parse_formula("a > 0 || b > 0 && c > 0") ==
        Formula::disjunction(a, Formula::conjunction(b, c)));
  const auto i1 = TimeInterval::checked(0, 1);
  const auto i2 = TimeInterval::checked(0, 2);
  CHECK(parse_formula("G[0,1] a > 0 U[0,2] b > 0") ==
        Formula::globally(i1, Formula::until(i2, a, b)));
  CHECK(parse_formula("a > 0 U[0,1] b > 0 U[0,2] c > 0") ==
        Formula::until(i2, Formula::until(i1, a, b), c));
  CHECK(parse_formula("a > 0 && b > 0 U[0,1] c > 0") ==
        Formula::conjunction(a, Formula::until(i1, b, c)));
}

TEST_CASE("parse: word and symbol spellings agree") {
  CHECK(parse_formula("globally[0,3] (x > 1 and y < 2)") == parse_formula("G[0,3] (x > 1 && y < 2)"));
  CHECK(parse_formula("eventually[1,2] not x >= 0") == parse_formula("F[1,2] !x >= 0"));
  CHECK(parse_formula("x > 0 until[0,4] y > 0") == parse_formula("x > 0 U[0,4] y > 0"));
  CHECK(parse_formula("x > 0 or y > 0 implies z != 1") == parse_formula("x > 0 || y > 0 -> z != 1"));
}

TEST_CASE("parse: signs and exponents in numbers") {
  auto f = parse_formula("x <= -2.5e-1");
  CHECK(f == Formula::atom("x", Comparison::LE, Threshold::constant(-0.25)));
  CHECK(parse_formula("x > +3") == Formula::atom("x", Comparison::GT, Threshold::constant(3)));
}

TEST_CASE("parse: environment substitution") {
  FormulaEnvironment env;
  env.define("phi1", parse_formula("G[0, 5] (temp < $MAX_TEMP)"));
  env.define("phi2", parse_formula("pressure > 10.0 -> F[0, 2] valve_open == 1.0"));
  auto f = parse_formula("phi1 and phi2", env);
  CHECK(f == Formula::conjunction(*env.find("phi1"), *env.find("phi2")));
}

TEST_CASE("environment: reserved words and collisions") {
  FormulaEnvironment env;
  CHECK_THROWS_AS(env.define("G", Formula::truth()), InvalidFormula);
  CHECK_THROWS_AS(env.define("until", Formula::truth()), InvalidFormula);
  CHECK_THROWS_AS(env.define("9lives", Formula::truth()), InvalidFormula);
  env.define("x", parse_formula("y > 0"));
  // `x` names a subformula here, so using it as a signal is ambiguous.
  CHECK_THROWS_AS(parse_formula("x && x > 1", env), Error);
}

TEST_CASE("parse: syntax errors carry positions") {
  try {
    parse_formula("G[0, 5] (temp <)");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 16);
    CHECK(std::string(e.what()).find("expected") != std::string::npos);
  }
  try {
    parse_formula("x > 0 &&\n  (y < 1");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_formula(""), SyntaxError);
  CHECK_THROWS_AS(parse_formula("x > 0 y"), SyntaxError);
  CHECK_THROWS_AS(parse_formula("G (x > 0)"), SyntaxError);
  CHECK_THROWS_AS(parse_formula("x ~ 0"), SyntaxError);
  CHECK_THROWS_AS(parse_formula("x > $"), SyntaxError);
}

TEST_CASE("temporal depth") {
  CHECK(temporal_depth(parse_formula("x > 0")) == 0);
  CHECK(temporal_depth(parse_formula("G[0,5] x > 0")) == 5);
  CHECK(temporal_depth(parse_formula("G[0, 1000](x > 0.5 -> F[0, 100](x < 0))")) == 1100);
  CHECK(temporal_depth(parse_formula("(F[1,3] x > 0) U[2,4] G[0,7] y > 0")) == 11);
}

TEST_CASE("free variables and signal names") {
  auto g = parse_formula("G[0, 5] (temp < $MAX_TEMP)");
  auto a = parse_formula("x > 0.5");
  CHECK(free_variables(g) == std::set<std::string>{"MAX_TEMP"});
  CHECK(free_variables(a).empty());
  CHECK(free_variables(Formula::conjunction(g, a)) == std::set<std::string>{"MAX_TEMP"});
  CHECK(signal_names(Formula::conjunction(g, a)) == std::set<std::string>{"temp", "x"});
}

TEST_CASE("format: canonical spellings") {
  CHECK(format_formula(parse_formula("G[0, 5] (temp < $MAX_TEMP)")) ==
        "G[0, 5] (temp < $MAX_TEMP)");
  CHECK(format_formula(Formula::truth()) == "true");
  CHECK(format_formula(Formula::until(
            TimeInterval::checked(0, 1000),
            Formula::atom("x", Comparison::LT, Threshold::constant(0.5)),
            Formula::atom("x", Comparison::LT, Threshold::constant(0.0)))) ==
        "(x < 0.5) U[0, 1000] (x < 0)");
}

TEST_CASE("format: round trip on random formulas") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 500; ++k) {
    auto f = testing::random_formula(rng, 4);
    auto text = format_formula(f);
    CAPTURE(text);
    CHECK(parse_formula(text) == f);
  }
}

TEST_CASE("temporal depth is monotone along the tree") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    auto f = testing::random_formula(rng, 4);
    const double h = temporal_depth(f);
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (requires { n.child; }) CHECK(h >= temporal_depth(n.child));
          if constexpr (requires { n.left; }) {
            CHECK(h >= temporal_depth(n.left));
            CHECK(h >= temporal_depth(n.right));
          }
          (void)sizeof(T);
        },
        f.node());
  }
}

TEST_CASE("format_number") {
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(-5.5) == "-5.5");
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(kInfinity) == "inf");
  CHECK(format_number(-kInfinity) == "-inf");
}
