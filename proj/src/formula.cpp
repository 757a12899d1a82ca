#include "stlmon/formula.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cctype>
#include <cmath>

namespace stlmon {

namespace detail {
struct FormulaNode {
  Formula::Node node;
};
}  // namespace detail

namespace {

constexpr std::array<std::string_view, 11> kReservedWords = {
    "G", "F", "U", "globally", "eventually", "until",
    "and", "or", "not", "implies", "true"};

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto head = static_cast<unsigned char>(s.front());
  if (!(std::isalpha(head) || head == '_')) return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) {
    auto u = static_cast<unsigned char>(c);
    return std::isalnum(u) || u == '_';
  });
}

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

}  // namespace

SyntaxError::SyntaxError(std::string message, std::size_t line, std::size_t column)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      detail_(std::move(message)),
      line_(line),
      column_(column) {}

std::string_view to_string(Comparison cmp) {
  switch (cmp) {
    case Comparison::LT: return "<";
    case Comparison::LE: return "<=";
    case Comparison::GT: return ">";
    case Comparison::GE: return ">=";
    case Comparison::EQ: return "==";
    case Comparison::NE: return "!=";
  }
  return "?";
}

TimeInterval TimeInterval::checked(double lower, double upper) {
  if (!std::isfinite(lower) || !std::isfinite(upper)) {
    throw IntervalError("temporal bounds must be finite");
  }
  if (lower < 0.0) {
    throw IntervalError("interval lower bound " + format_number(lower) +
                        " is negative");
  }
  if (lower > upper) {
    throw IntervalError("interval [" + format_number(lower) + ", " +
                        format_number(upper) + "] has lower bound above upper bound");
  }
  return TimeInterval{lower, upper};
}

Threshold Threshold::constant(double value) {
  if (std::isnan(value)) throw InvalidFormula("threshold is NaN");
  return Threshold(Const{value});
}

Threshold Threshold::variable(std::string name) {
  if (name.empty()) throw InvalidFormula("variable name is empty");
  return Threshold(Var{std::move(name)});
}

namespace {
Formula::Node make_true() { return Formula::True{}; }
}  // namespace

Formula::Formula()
    : node_(std::make_shared<const detail::FormulaNode>(detail::FormulaNode{make_true()})) {}

const Formula::Node& Formula::node() const { return node_->node; }

#define STLMON_MAKE(expr) \
  Formula(std::make_shared<const detail::FormulaNode>(detail::FormulaNode{Node{expr}}))

Formula Formula::truth() { return Formula(); }

Formula Formula::atom(std::string signal, Comparison cmp, Threshold rhs) {
  if (signal.empty()) throw InvalidFormula("signal name is empty");
  return STLMON_MAKE((Atom{std::move(signal), cmp, std::move(rhs)}));
}
Formula Formula::negation(Formula child) { return STLMON_MAKE(Not{std::move(child)}); }
Formula Formula::conjunction(Formula left, Formula right) {
  return STLMON_MAKE((And{std::move(left), std::move(right)}));
}
Formula Formula::disjunction(Formula left, Formula right) {
  return STLMON_MAKE((Or{std::move(left), std::move(right)}));
}
Formula Formula::implication(Formula left, Formula right) {
  return STLMON_MAKE((Implies{std::move(left), std::move(right)}));
}
Formula Formula::eventually(TimeInterval interval, Formula child) {
  interval = TimeInterval::checked(interval.lower, interval.upper);
  return STLMON_MAKE((Eventually{interval, std::move(child)}));
}
Formula Formula::globally(TimeInterval interval, Formula child) {
  interval = TimeInterval::checked(interval.lower, interval.upper);
  return STLMON_MAKE((Globally{interval, std::move(child)}));
}
Formula Formula::until(TimeInterval interval, Formula left, Formula right) {
  interval = TimeInterval::checked(interval.lower, interval.upper);
  return STLMON_MAKE((Until{interval, std::move(left), std::move(right)}));
}

#undef STLMON_MAKE

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = a.node();
  const auto& y = b.node();
  if (x.index() != y.index()) return false;
  return std::visit(
      overloaded{
          [](const Formula::True&) { return true; },
          [&](const Formula::Atom& n) { return n == std::get<Formula::Atom>(y); },
          [&](const Formula::Not& n) { return n.child == std::get<Formula::Not>(y).child; },
          [&](const Formula::And& n) {
            const auto& o = std::get<Formula::And>(y);
            return n.left == o.left && n.right == o.right;
          },
          [&](const Formula::Or& n) {
            const auto& o = std::get<Formula::Or>(y);
            return n.left == o.left && n.right == o.right;
          },
          [&](const Formula::Implies& n) {
            const auto& o = std::get<Formula::Implies>(y);
            return n.left == o.left && n.right == o.right;
          },
          [&](const Formula::Eventually& n) {
            const auto& o = std::get<Formula::Eventually>(y);
            return n.interval == o.interval && n.child == o.child;
          },
          [&](const Formula::Globally& n) {
            const auto& o = std::get<Formula::Globally>(y);
            return n.interval == o.interval && n.child == o.child;
          },
          [&](const Formula::Until& n) {
            const auto& o = std::get<Formula::Until>(y);
            return n.interval == o.interval && n.left == o.left && n.right == o.right;
          },
      },
      x);
}

bool is_reserved_word(std::string_view word) {
  return std::find(kReservedWords.begin(), kReservedWords.end(), word) !=
         kReservedWords.end();
}

void FormulaEnvironment::define(std::string name, Formula formula) {
  if (!is_identifier(name)) {
    throw InvalidFormula("'" + name + "' is not a valid formula name");
  }
  if (is_reserved_word(name)) {
    throw InvalidFormula("'" + name + "' is a reserved word");
  }
  entries_.insert_or_assign(std::move(name), std::move(formula));
}

const Formula* FormulaEnvironment::find(std::string_view name) const {
  auto it = entries_.find(name);
  return it == entries_.end() ? nullptr : &it->second;
}

std::string format_number(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (std::isnan(value)) return "nan";
  if (value == 0.0) return "0";
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), end);
}

namespace {

void format_into(const Formula& f, std::string& out);

void format_operand(const Formula& f, std::string& out) {
  if (f.is<Formula::True>()) {
    out += "true";
    return;
  }
  out += '(';
  format_into(f, out);
  out += ')';
}

void format_binary(const Formula& l, std::string_view op, const Formula& r,
                   std::string& out) {
  format_operand(l, out);
  out += ' ';
  out += op;
  out += ' ';
  format_operand(r, out);
}

std::string interval_text(const TimeInterval& i) {
  return "[" + format_number(i.lower) + ", " + format_number(i.upper) + "]";
}

void format_into(const Formula& f, std::string& out) {
  std::visit(overloaded{
                 [&](const Formula::True&) { out += "true"; },
                 [&](const Formula::Atom& a) {
                   out += a.signal;
                   out += ' ';
                   out += to_string(a.cmp);
                   out += ' ';
                   std::visit(overloaded{
                                  [&](const Threshold::Const& c) { out += format_number(c.value); },
                                  [&](const Threshold::Var& v) { out += "$" + v.name; },
                              },
                              a.rhs.value());
                 },
                 [&](const Formula::Not& n) {
                   out += '!';
                   format_operand(n.child, out);
                 },
                 [&](const Formula::And& n) { format_binary(n.left, "&&", n.right, out); },
                 [&](const Formula::Or& n) { format_binary(n.left, "||", n.right, out); },
                 [&](const Formula::Implies& n) { format_binary(n.left, "->", n.right, out); },
                 [&](const Formula::Eventually& n) {
                   out += "F" + interval_text(n.interval) + " ";
                   format_operand(n.child, out);
                 },
                 [&](const Formula::Globally& n) {
                   out += "G" + interval_text(n.interval) + " ";
                   format_operand(n.child, out);
                 },
                 [&](const Formula::Until& n) {
                   format_binary(n.left, "U" + interval_text(n.interval), n.right, out);
                 },
             },
             f.node());
}

template <class Visit>
void walk(const Formula& f, Visit&& visit) {
  visit(f);
  std::visit(overloaded{
                 [](const Formula::True&) {},
                 [](const Formula::Atom&) {},
                 [&](const Formula::Not& n) { walk(n.child, visit); },
                 [&](const Formula::Eventually& n) { walk(n.child, visit); },
                 [&](const Formula::Globally& n) { walk(n.child, visit); },
                 [&](const auto& n) {
                   walk(n.left, visit);
                   walk(n.right, visit);
                 },
             },
             f.node());
}

}  // namespace

std::string format_formula(const Formula& formula) {
  std::string out;
  format_into(formula, out);
  return out;
}

double temporal_depth(const Formula& formula) {
  return std::visit(
      overloaded{
          [](const Formula::True&) { return 0.0; },
          [](const Formula::Atom&) { return 0.0; },
          [](const Formula::Not& n) { return temporal_depth(n.child); },
          [](const Formula::Eventually& n) {
            return n.interval.upper + temporal_depth(n.child);
          },
          [](const Formula::Globally& n) {
            return n.interval.upper + temporal_depth(n.child);
          },
          [](const Formula::Until& n) {
            return n.interval.upper +
                   std::max(temporal_depth(n.left), temporal_depth(n.right));
          },
          [](const auto& n) {
            return std::max(temporal_depth(n.left), temporal_depth(n.right));
          },
      },
      formula.node());
}

std::set<std::string> free_variables(const Formula& formula) {
  std::set<std::string> out;
  walk(formula, [&](const Formula& f) {
    if (const auto* a = std::get_if<Formula::Atom>(&f.node())) {
      if (const auto* v = std::get_if<Threshold::Var>(&a->rhs.value())) out.insert(v->name);
    }
  });
  return out;
}

std::set<std::string> signal_names(const Formula& formula) {
  std::set<std::string> out;
  walk(formula, [&](const Formula& f) {
    if (const auto* a = std::get_if<Formula::Atom>(&f.node())) out.insert(a->signal);
  });
  return out;
}

}  // namespace stlmon
