#pragma once

#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "stlmon/error.hpp"

namespace stlmon {

enum class Comparison { LT, LE, GT, GE, EQ, NE };

std::string_view to_string(Comparison cmp);

/// Closed bounded interval [lower, upper] of relative time, in seconds.
struct TimeInterval {
  double lower = 0.0;
  double upper = 0.0;

  /// Throws IntervalError unless 0 <= lower <= upper < inf.
  static TimeInterval checked(double lower, double upper);

  friend bool operator==(const TimeInterval&, const TimeInterval&) = default;
};

/// Right-hand side of an atom: a numeric constant or a `$NAME` variable.
class Threshold {
 public:
  struct Const {
    double value;
    friend bool operator==(const Const&, const Const&) = default;
  };
  struct Var {
    std::string name;
    friend bool operator==(const Var&, const Var&) = default;
  };

  static Threshold constant(double value);
  static Threshold variable(std::string name);

  bool is_variable() const { return std::holds_alternative<Var>(value_); }
  const std::variant<Const, Var>& value() const { return value_; }

  friend bool operator==(const Threshold&, const Threshold&) = default;

 private:
  explicit Threshold(std::variant<Const, Var> v) : value_(std::move(v)) {}
  std::variant<Const, Var> value_;
};

namespace detail {
struct FormulaNode;
}

/// Immutable STL formula. Copies share structure.
class Formula {
 public:
  struct True {
    friend bool operator==(const True&, const True&) = default;
  };
  struct Atom;
  struct Not;
  struct And;
  struct Or;
  struct Implies;
  struct Eventually;
  struct Globally;
  struct Until;

  using Node =
      std::variant<True, Atom, Not, And, Or, Implies, Eventually, Globally, Until>;

  /// The formula `true`.
  Formula();

  static Formula truth();
  static Formula atom(std::string signal, Comparison cmp, Threshold rhs);
  static Formula negation(Formula child);
  static Formula conjunction(Formula left, Formula right);
  static Formula disjunction(Formula left, Formula right);
  static Formula implication(Formula left, Formula right);
  static Formula eventually(TimeInterval interval, Formula child);
  static Formula globally(TimeInterval interval, Formula child);
  static Formula until(TimeInterval interval, Formula left, Formula right);

  const Node& node() const;

  template <class T>
  bool is() const {
    return std::holds_alternative<T>(node());
  }

  /// Structural equality.
  friend bool operator==(const Formula& a, const Formula& b);

 private:
  explicit Formula(std::shared_ptr<const detail::FormulaNode> node)
      : node_(std::move(node)) {}
  std::shared_ptr<const detail::FormulaNode> node_;
};

struct Formula::Atom {
  std::string signal;
  Comparison cmp;
  Threshold rhs;
  friend bool operator==(const Atom&, const Atom&) = default;
};
struct Formula::Not {
  Formula child;
};
struct Formula::And {
  Formula left, right;
};
struct Formula::Or {
  Formula left, right;
};
struct Formula::Implies {
  Formula left, right;
};
struct Formula::Eventually {
  TimeInterval interval;
  Formula child;
};
struct Formula::Globally {
  TimeInterval interval;
  Formula child;
};
struct Formula::Until {
  TimeInterval interval;
  Formula left, right;
};

/// Named subformulas that bare identifiers resolve to while parsing.
class FormulaEnvironment {
 public:
  /// Throws InvalidFormula if `name` is a DSL keyword or not an identifier.
  void define(std::string name, Formula formula);

  const Formula* find(std::string_view name) const;
  bool empty() const { return entries_.empty(); }

 private:
  std::map<std::string, Formula, std::less<>> entries_;
};

bool is_reserved_word(std::string_view word);

/// Parses DSL text.
///
/// Precedence, loosest first: `->` (right associative), `||`, `&&`, the
/// prefix operators `!`, `G[a,b]`, `F[a,b]`, and finally the infix
/// `U[a,b]` (left associative). So `a -> b && c` is `a -> (b && c)`,
/// `!a && b` is `(!a) && b`, and `G[0,1] a U[0,2] b` is `G[0,1] (a U[0,2] b)`.
Formula parse_formula(std::string_view text, const FormulaEnvironment& env = {});

/// Canonical text; `parse_formula(format_formula(f)) == f`.
std::string format_formula(const Formula& formula);

/// Maximum future horizon, in seconds, needed to evaluate the formula.
double temporal_depth(const Formula& formula);

std::set<std::string> free_variables(const Formula& formula);

/// Every signal name referenced by an atom.
std::set<std::string> signal_names(const Formula& formula);

/// Shortest decimal text that reads back to the same double; `inf`/`-inf`.
std::string format_number(double value);

}  // namespace stlmon
