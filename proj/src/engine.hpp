#pragma once

#include <algorithm>
#include <cassert>
#include <deque>
#include <limits>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "stlmon/monitor.hpp"

namespace stlmon::detail {

/// Resolved evaluation grid: every point at or before the frontier, indexed
/// globally from 0. Old points are dropped once no node needs them.
class Grid {
 public:
  std::size_t size() const { return base_ + times_.size(); }
  std::size_t base() const { return base_; }
  double at(std::size_t idx) const {
    assert(idx >= base_ && idx < size());
    return times_[idx - base_];
  }
  double frontier() const { return frontier_; }

  /// Index of the latest retained point at or before `x`.
  std::size_t held_index(double x) const {
    auto it = std::upper_bound(times_.begin(), times_.end(), x);
    assert(it != times_.begin());
    return base_ + static_cast<std::size_t>(it - times_.begin()) - 1;
  }

  void push(double t) { times_.push_back(t); }
  void set_frontier(double f) { frontier_ = f; }
  void trim(std::size_t keep_from) {
    while (base_ < keep_from && !times_.empty()) {
      times_.pop_front();
      ++base_;
    }
  }

 private:
  std::deque<double> times_;
  std::size_t base_ = 0;
  double frontier_ = -std::numeric_limits<double>::infinity();
};

/// Zero-order-hold values of every formula signal at one new grid point.
struct NewPoint {
  double time;
  std::vector<double> values;  // indexed like SignalTable::names
};

struct SignalTable {
  std::vector<std::string> names;
  std::size_t index(const std::string& name) const {
    auto it = std::find(names.begin(), names.end(), name);
    return static_cast<std::size_t>(it - names.begin());
  }
};

struct VariableTable {
  std::vector<std::string> names;
  std::vector<double> values;
  std::size_t index(const std::string& name) const {
    auto it = std::find(names.begin(), names.end(), name);
    return static_cast<std::size_t>(it - names.begin());
  }
};

struct Context {
  const Grid& grid;
  std::span<const NewPoint> points;  // the last points.size() grid indices
  const VariableTable& variables;
};

/// Atom operand, resolved against the signal and variable tables.
struct AtomSpec {
  std::size_t signal;
  Comparison cmp;
  bool is_variable;
  double constant;
  std::size_t variable;

  double threshold(const VariableTable& vars) const {
    return is_variable ? vars.values[variable] : constant;
  }
};

AtomSpec resolve_atom(const Formula::Atom& atom, const SignalTable& signals,
                      const VariableTable& variables);

/// Semantics-specific evaluation strategy behind a Monitor.
class Evaluator {
 public:
  virtual ~Evaluator() = default;

  virtual void on_step(const Step&) {}
  virtual void on_variables_changed(double /*frontier*/, const Variables&) {}

  /// Consumes newly resolved grid points and appends verdict events.
  virtual void advance(const Context& ctx, MonitorOutput& out) = 0;

  virtual std::size_t cache_size() const = 0;
  /// Smallest grid index still referenced.
  virtual std::size_t grid_needed_from() const = 0;
};

std::unique_ptr<Evaluator> make_delayed_evaluator(const MonitorConfig& config,
                                                  const SignalTable& signals,
                                                  const VariableTable& variables);
std::unique_ptr<Evaluator> make_partial_evaluator(const MonitorConfig& config,
                                                  const SignalTable& signals,
                                                  const VariableTable& variables);
std::unique_ptr<Evaluator> make_naive_evaluator(const MonitorConfig& config,
                                                const SignalTable& signals);

}  // namespace stlmon::detail
