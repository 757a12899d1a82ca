#include "stlmon/monitor.hpp"

#include <cctype>
#include <cmath>
#include <deque>
#include <ostream>
#include <set>

#include "engine.hpp"

namespace stlmon {

std::string_view to_string(Algorithm a) {
  return a == Algorithm::Incremental ? "incremental" : "naive";
}

Algorithm parse_algorithm(std::string_view text) {
  std::string lower;
  for (char c : text) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "incremental") return Algorithm::Incremental;
  if (lower == "naive") return Algorithm::Naive;
  throw std::invalid_argument("unknown algorithm '" + std::string(text) + "'");
}

std::string format_event(const Event& e) {
  return "t=" + format_number(e.time) + "s: " + format_verdict(e.verdict);
}

std::ostream& operator<<(std::ostream& os, const MonitorOutput& out) {
  for (const auto& e : out.events) os << format_event(e) << '\n';
  return os;
}

BatchUpdateError::BatchUpdateError(std::size_t failed_index, MonitorOutput partial,
                                   std::exception_ptr cause, const std::string& what)
    : Error("step " + std::to_string(failed_index) + ": " + what),
      failed_index_(failed_index),
      partial_(std::move(partial)),
      cause_(std::move(cause)) {}

namespace detail {

AtomSpec resolve_atom(const Formula::Atom& atom, const SignalTable& signals,
                      const VariableTable& variables) {
  AtomSpec spec{signals.index(atom.signal), atom.cmp, false, 0.0, 0};
  if (const auto* c = std::get_if<Threshold::Const>(&atom.rhs.value())) {
    spec.constant = c->value;
  } else {
    spec.is_variable = true;
    spec.variable = variables.index(std::get<Threshold::Var>(atom.rhs.value()).name);
  }
  return spec;
}

}  // namespace detail

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

struct History {
  std::deque<Sample> samples;  // from the sample held at the last grid point
  bool any = false;
  double first = 0.0;
  double last = 0.0;
};

}  // namespace

struct Monitor::Impl {
  MonitorConfig config;
  double depth = 0.0;
  detail::SignalTable signals;
  detail::VariableTable variables;
  std::vector<History> histories;
  std::size_t reported = 0;  // signals with at least one sample
  std::set<double> unresolved;
  double frontier = kNegInf;
  double start = kNegInf;
  detail::Grid grid;
  std::unique_ptr<detail::Evaluator> evaluator;

  std::size_t updates = 0;
  std::size_t cache_sum = 0;
  CacheStats stats;

  explicit Impl(MonitorConfig c) : config(std::move(c)) {
    depth = stlmon::temporal_depth(config.formula);
    for (const auto& s : signal_names(config.formula)) signals.names.push_back(s);
    histories.resize(signals.names.size());
    for (const auto& name : free_variables(config.formula)) {
      auto it = config.variables.find(name);
      if (it == config.variables.end()) throw UnboundVariable(name);
      variables.names.push_back(name);
      variables.values.push_back(it->second);
    }
    if (config.algorithm == Algorithm::Naive) {
      evaluator = detail::make_naive_evaluator(config, signals);
    } else if (config.semantics == Semantics::DelayedQuantitative ||
               config.semantics == Semantics::DelayedQualitative) {
      evaluator = detail::make_delayed_evaluator(config, signals, variables);
    } else {
      evaluator = detail::make_partial_evaluator(config, signals, variables);
    }
  }

  MonitorOutput update(const Step& step) {
    if (!std::isfinite(step.timestamp) || !std::isfinite(step.value)) {
      throw Error("step for signal '" + step.signal + "' has a non-finite timestamp or value");
    }
    const auto s = signals.index(step.signal);
    if (s == signals.names.size()) throw UnknownSignal(step.signal);
    auto& h = histories[s];
    if (h.any && !(step.timestamp > h.last)) {
      throw NonMonotonicTimestamp(step.signal, h.last, step.timestamp);
    }

    evaluator->on_step(step);
    h.samples.push_back(Sample{step.timestamp, step.value});
    if (!h.any) {
      h.any = true;
      h.first = step.timestamp;
      ++reported;
    }
    h.last = step.timestamp;
    unresolved.insert(step.timestamp);

    MonitorOutput out;
    std::vector<detail::NewPoint> points;
    if (reported == histories.size()) {
      double f = kInfinity;
      start = kNegInf;
      for (const auto& hh : histories) {
        f = std::min(f, hh.last);
        start = std::max(start, hh.first);
      }
      frontier = f;
      while (!unresolved.empty() && *unresolved.begin() <= frontier) {
        const double t = *unresolved.begin();
        unresolved.erase(unresolved.begin());
        if (t < start) continue;
        points.push_back(detail::NewPoint{t, held_values(t)});
      }
    }
    for (const auto& p : points) grid.push(p.time);
    grid.set_frontier(frontier);
    evaluator->advance(detail::Context{grid, points, variables}, out);
    grid.trim(evaluator->grid_needed_from());

    stats.current = evaluator->cache_size();
    ++updates;
    cache_sum += stats.current;
    stats.max = std::max(stats.max, stats.current);
    stats.average = static_cast<double>(cache_sum) / static_cast<double>(updates);
    return out;
  }

  // Zero-order-hold value of every signal at t, dropping samples that no
  // later grid point can hold.
  std::vector<double> held_values(double t) {
    std::vector<double> values(histories.size());
    for (std::size_t s = 0; s < histories.size(); ++s) {
      auto& q = histories[s].samples;
      while (q.size() > 1 && q[1].time <= t) q.pop_front();
      values[s] = q.front().value;
    }
    return values;
  }
};

Monitor::Monitor(MonitorConfig config) : impl_(std::make_unique<Impl>(std::move(config))) {}
Monitor::~Monitor() = default;
Monitor::Monitor(Monitor&&) noexcept = default;
Monitor& Monitor::operator=(Monitor&&) noexcept = default;

MonitorBuilder Monitor::builder() { return MonitorBuilder{}; }

MonitorOutput Monitor::update(const Step& step) { return impl_->update(step); }

MonitorOutput Monitor::update_batch(std::span<const Step> steps) {
  MonitorOutput out;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    try {
      out.append(impl_->update(steps[i]));
    } catch (const std::exception& e) {
      throw BatchUpdateError(i, std::move(out), std::current_exception(), e.what());
    }
  }
  return out;
}

void Monitor::set_variable(const std::string& name, double value) {
  auto it = impl_->config.variables.find(name);
  if (it == impl_->config.variables.end()) throw UnboundVariable(name);
  it->second = value;
  auto& vars = impl_->variables;
  const auto idx = vars.index(name);
  if (idx < vars.names.size()) vars.values[idx] = value;
  impl_->evaluator->on_variables_changed(impl_->frontier, impl_->config.variables);
}

CacheStats Monitor::cache_stats() const { return impl_->stats; }
const MonitorConfig& Monitor::config() const { return impl_->config; }
double Monitor::temporal_depth() const { return impl_->depth; }
double Monitor::frontier() const { return impl_->frontier; }

}  // namespace stlmon
