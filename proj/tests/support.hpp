#pragma once

// Random formulas and traces for property tests, and a replay helper that
// drives a monitor while recording what the reference evaluator needs.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "stlmon/monitor.hpp"
#include "stlmon/oracle.hpp"

namespace stlmon::testing {

struct VariableChange {
  std::size_t before_step;
  std::string name;
  double value;
};

struct RandomCase {
  Formula formula;
  std::vector<std::string> signals;
  std::vector<Step> steps;
  Variables variables;
  std::vector<VariableChange> changes;
};

// Dyadic steps keep every `t + a` sum exact.
inline double dyadic(std::mt19937_64& rng, int lo, int hi, double unit) {
  return unit * std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline TimeInterval random_interval(std::mt19937_64& rng) {
  const double a = dyadic(rng, 0, 12, 0.5);
  const double b = std::min(10.0, a + dyadic(rng, 0, 12, 0.5));
  return TimeInterval::checked(std::min(a, b), b);
}

inline Formula random_atom(std::mt19937_64& rng) {
  static const char* kSignals[] = {"x", "y", "z"};
  static const Comparison kCmps[] = {Comparison::LT, Comparison::LE, Comparison::GT,
                                     Comparison::GE, Comparison::EQ, Comparison::NE};
  std::uniform_int_distribution<int> sig(0, 2), cmp(0, 5), pct(0, 99);
  const auto rhs = pct(rng) < 15 ? Threshold::variable("V")
                                 : Threshold::constant(dyadic(rng, -4, 4, 0.5));
  return Formula::atom(kSignals[sig(rng)], kCmps[cmp(rng)], rhs);
}

inline Formula random_formula(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, 9);
  if (depth == 0) return random_atom(rng);
  switch (pick(rng)) {
    case 0: return random_atom(rng);
    case 1: return Formula::negation(random_formula(rng, depth - 1));
    case 2:
      return Formula::conjunction(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 3:
      return Formula::disjunction(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 4:
      return Formula::implication(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 5:
    case 6: return Formula::globally(random_interval(rng), random_formula(rng, depth - 1));
    case 7: return Formula::eventually(random_interval(rng), random_formula(rng, depth - 1));
    case 8:
      return Formula::until(random_interval(rng), random_formula(rng, depth - 1),
                            random_formula(rng, depth - 1));
    default:
      return pick(rng) == 0 ? Formula::truth()
                            : Formula::conjunction(Formula::truth(), random_formula(rng, depth - 1));
  }
}

/// 1-3 signals, at most `max_samples` samples in total, formula depth <= 4,
/// temporal bounds <= 10 s.
inline RandomCase random_case(std::mt19937_64& rng, std::size_t max_samples = 50) {
  RandomCase c;
  do {
    c.formula = random_formula(rng, std::uniform_int_distribution<int>(1, 4)(rng));
  } while (signal_names(c.formula).empty());
  for (const auto& s : signal_names(c.formula)) c.signals.push_back(s);
  c.variables["V"] = dyadic(rng, -4, 4, 0.5);

  const auto per_signal = std::max<std::size_t>(1, max_samples / c.signals.size());
  for (const auto& s : c.signals) {
    const auto n = std::uniform_int_distribution<std::size_t>(1, per_signal)(rng);
    double t = dyadic(rng, 0, 8, 0.25);
    for (std::size_t k = 0; k < n; ++k) {
      c.steps.push_back(Step{s, dyadic(rng, -6, 6, 0.5), t});
      t += dyadic(rng, 1, 8, 0.25);
    }
  }
  std::shuffle(c.steps.begin(), c.steps.end(), rng);
  std::stable_sort(c.steps.begin(), c.steps.end(),
                   [](const Step& a, const Step& b) { return a.timestamp < b.timestamp; });

  if (!free_variables(c.formula).empty()) {
    const auto changes = std::uniform_int_distribution<int>(0, 2)(rng);
    for (int k = 0; k < changes; ++k) {
      c.changes.push_back(VariableChange{
          std::uniform_int_distribution<std::size_t>(0, c.steps.size())(rng), "V",
          dyadic(rng, -4, 4, 0.5)});
    }
    std::sort(c.changes.begin(), c.changes.end(),
              [](const auto& a, const auto& b) { return a.before_step < b.before_step; });
  }
  return c;
}

struct Replay {
  std::vector<Event> events;
  std::vector<std::size_t> step_of_event;  // index of the update that emitted it
  Trace trace;
  VariableSchedule schedule;
  double frontier;
};

inline Replay replay(const RandomCase& c, Semantics semantics, Algorithm algorithm) {
  Replay r{{}, {}, Trace(c.signals), VariableSchedule(c.variables), 0.0};
  auto monitor = Monitor::builder()
                     .formula(c.formula)
                     .semantics(semantics)
                     .algorithm(algorithm)
                     .variables(c.variables)
                     .build();
  Variables current = c.variables;
  std::size_t next_change = 0;
  for (std::size_t i = 0; i <= c.steps.size(); ++i) {
    while (next_change < c.changes.size() && c.changes[next_change].before_step == i) {
      const auto& ch = c.changes[next_change++];
      monitor.set_variable(ch.name, ch.value);
      current[ch.name] = ch.value;
      r.schedule.change(monitor.frontier(), current);
    }
    if (i == c.steps.size()) break;
    const auto& s = c.steps[i];
    r.trace.append(s.signal, s.timestamp, s.value);
    for (auto& e : monitor.update(s).events) {
      r.events.push_back(e);
      r.step_of_event.push_back(i);
    }
  }
  r.frontier = monitor.frontier();
  return r;
}

inline bool same_verdict(const Verdict& a, const Verdict& b) { return a.approx_equal(b, 1e-9); }

}  // namespace stlmon::testing
