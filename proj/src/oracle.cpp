#include "stlmon/oracle.hpp"

#include <algorithm>
#include <optional>
#include <unordered_map>

#include "stlmon/detail/domain_traits.hpp"

namespace stlmon {

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

// Evaluates formulas at grid indices; index grid.size() is the virtual
// sample past the frontier.
template <class D>
class Evaluator {
 public:
  using Value = typename D::Value;

  Evaluator(const Trace& trace, const VariableSchedule& variables)
      : trace_(trace), variables_(variables), grid_(trace.grid()), frontier_(trace.frontier()) {}

  const std::vector<double>& grid() const { return grid_; }

  std::size_t index_of(double t) const {
    auto it = std::find(grid_.begin(), grid_.end(), t);
    if (it == grid_.end()) throw NotOnGrid("time " + format_number(t) + " is not on the grid");
    return static_cast<std::size_t>(it - grid_.begin());
  }

  Value eval(const Formula& f, std::size_t i) {
    auto& row = memo_[&f.node()];
    if (row.size() < grid_.size() + 1) row.resize(grid_.size() + 1);
    if (row[i]) return *row[i];
    Value v = compute(f, i);
    // `compute` may have grown the map; look the row up again.
    memo_[&f.node()][i] = v;
    return v;
  }

 private:
  std::size_t virtual_index() const { return grid_.size(); }

  [[noreturn]] void insufficient() const {
    throw InsufficientTrace("trace does not cover the temporal horizon");
  }

  Value unknown() const {
    if constexpr (D::kPartial) {
      return D::unknown();
    } else {
      insufficient();
    }
  }

  // Window members (grid indices, possibly the virtual index) at index i.
  std::vector<std::size_t> window(std::size_t i, const TimeInterval& in) const {
    std::vector<std::size_t> members;
    const double t = grid_[i];
    const double lo = t + in.lower;
    const double hi = t + in.upper;
    if (lo > frontier_) {
      members.push_back(virtual_index());
      return members;
    }
    std::optional<std::size_t> held;
    for (std::size_t g = 0; g < grid_.size(); ++g) {
      if (grid_[g] <= lo) held = g;
    }
    members.push_back(*held);
    for (std::size_t g = 0; g < grid_.size(); ++g) {
      if (grid_[g] > lo && grid_[g] <= hi) members.push_back(g);
    }
    if (hi > frontier_) members.push_back(virtual_index());
    return members;
  }

  Value compute(const Formula& f, std::size_t i) {
    const bool is_virtual = i == virtual_index();
    return std::visit(
        overloaded{
            [&](const Formula::True&) { return D::top(); },
            [&](const Formula::Atom& a) -> Value {
              if (is_virtual) return unknown();
              const double t = grid_[i];
              double threshold = 0.0;
              if (const auto* c = std::get_if<Threshold::Const>(&a.rhs.value())) {
                threshold = c->value;
              } else {
                const auto& name = std::get<Threshold::Var>(a.rhs.value()).name;
                const auto& vars = variables_.at(t);
                auto it = vars.find(name);
                if (it == vars.end()) throw UnboundVariable(name);
                threshold = it->second;
              }
              return D::atom(a.cmp, trace_.value_at(a.signal, t), threshold);
            },
            [&](const Formula::Not& n) { return D::neg(eval(n.child, i)); },
            [&](const Formula::And& n) { return D::conj(eval(n.left, i), eval(n.right, i)); },
            [&](const Formula::Or& n) { return D::disj(eval(n.left, i), eval(n.right, i)); },
            [&](const Formula::Implies& n) {
              return D::disj(D::neg(eval(n.left, i)), eval(n.right, i));
            },
            [&](const Formula::Eventually& n) {
              if (is_virtual) return eval(n.child, i);
              auto members = window(i, n.interval);
              Value acc = eval(n.child, members.front());
              for (auto g : members) acc = D::disj(acc, eval(n.child, g));
              return acc;
            },
            [&](const Formula::Globally& n) {
              if (is_virtual) return eval(n.child, i);
              auto members = window(i, n.interval);
              Value acc = eval(n.child, members.front());
              for (auto g : members) acc = D::conj(acc, eval(n.child, g));
              return acc;
            },
            [&](const Formula::Until& n) {
              if (is_virtual) return D::conj(eval(n.right, i), eval(n.left, i));
              auto candidates = window(i, n.interval);
              std::optional<Value> best;
              for (auto c : candidates) {
                // min of the left operand over grid points in [t, c], plus
                // the virtual sample itself when c is virtual.
                Value inner = eval(n.right, c);
                for (std::size_t g = i; g < grid_.size() && (c == virtual_index() || g <= c); ++g) {
                  inner = D::conj(inner, eval(n.left, g));
                }
                if (c == virtual_index()) inner = D::conj(inner, eval(n.left, c));
                best = best ? D::disj(*best, inner) : inner;
              }
              return *best;
            },
        },
        f.node());
  }

  const Trace& trace_;
  const VariableSchedule& variables_;
  std::vector<double> grid_;
  double frontier_;
  std::unordered_map<const void*, std::vector<std::optional<Value>>> memo_;
};

template <class D>
typename D::Value evaluate_one(const Trace& trace, const Formula& formula,
                               const Variables& variables, double t) {
  VariableSchedule schedule(variables);
  Evaluator<D> ev(trace, schedule);
  auto i = ev.index_of(t);
  if constexpr (!D::kPartial) {
    if (!(t + temporal_depth(formula) <= trace.frontier())) {
      throw InsufficientTrace("trace ends at " + format_number(trace.frontier()) +
                              ", before t + H = " +
                              format_number(t + temporal_depth(formula)));
    }
  }
  return ev.eval(formula, i);
}

template <class D>
std::vector<Verdict> evaluate_many(const Trace& trace, const Formula& formula,
                                   const VariableSchedule& variables,
                                   std::span<const double> times) {
  Evaluator<D> ev(trace, variables);
  std::vector<Verdict> out;
  out.reserve(times.size());
  const double depth = temporal_depth(formula);
  for (double t : times) {
    auto i = ev.index_of(t);
    if constexpr (!D::kPartial) {
      if (!(t + depth <= trace.frontier())) {
        throw InsufficientTrace("trace does not cover the temporal horizon");
      }
    }
    out.push_back(D::verdict(ev.eval(formula, i)));
  }
  return out;
}

}  // namespace

ExtendedReal naive_robustness(const Trace& trace, const Formula& formula,
                              const Variables& variables, double t) {
  return evaluate_one<detail::RobustnessDomain>(trace, formula, variables, t);
}

bool naive_boolean(const Trace& trace, const Formula& formula, const Variables& variables,
                   double t) {
  return evaluate_one<detail::BooleanDomain>(trace, formula, variables, t);
}

RobustnessInterval naive_rosi(const Trace& prefix, const Formula& formula,
                              const Variables& variables, double t) {
  return evaluate_one<detail::IntervalDomain>(prefix, formula, variables, t);
}

ThreeValued naive_three_valued(const Trace& prefix, const Formula& formula,
                               const Variables& variables, double t) {
  return evaluate_one<detail::ThreeValuedDomain>(prefix, formula, variables, t);
}

std::vector<Verdict> oracle_verdicts(const Trace& trace, const Formula& formula,
                                     const VariableSchedule& variables, Semantics semantics,
                                     std::span<const double> times) {
  switch (semantics) {
    case Semantics::DelayedQuantitative:
      return evaluate_many<detail::RobustnessDomain>(trace, formula, variables, times);
    case Semantics::DelayedQualitative:
      return evaluate_many<detail::BooleanDomain>(trace, formula, variables, times);
    case Semantics::EagerQualitative:
      return evaluate_many<detail::ThreeValuedDomain>(trace, formula, variables, times);
    case Semantics::Rosi:
      return evaluate_many<detail::IntervalDomain>(trace, formula, variables, times);
  }
  return {};
}

}  // namespace stlmon
