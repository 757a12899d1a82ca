#pragma once

#include <map>
#include <string>
#include <vector>

#include "stlmon/error.hpp"

namespace stlmon {

/// Variable bindings for `$NAME` thresholds.
using Variables = std::map<std::string, double>;

struct Sample {
  double time;
  double value;
};

/// Timestamped samples of a fixed set of signals, interpreted by zero-order hold.
///
/// The frontier is the minimum over signals of the latest timestamp (-inf
/// until every signal has a sample). The evaluation grid is the sorted union
/// of all timestamps t with start <= t <= frontier, where start is the
/// latest first timestamp over all signals.
class Trace {
 public:
  explicit Trace(std::vector<std::string> signals);

  /// Throws NonMonotonicTimestamp unless `time` exceeds the signal's last
  /// timestamp, and std::out_of_range for a signal outside the set.
  void append(const std::string& signal, double time, double value);

  const std::vector<std::string>& signals() const { return signals_; }
  const std::vector<Sample>& samples(const std::string& signal) const;

  double frontier() const;
  std::vector<double> grid() const;

  /// Value of the latest sample at or before `time`. Throws
  /// InsufficientTrace if the signal has no such sample.
  double value_at(const std::string& signal, double time) const;

 private:
  std::vector<std::string> signals_;
  std::map<std::string, std::vector<Sample>, std::less<>> samples_;
};

/// Piecewise-constant variable context: the bindings in force for a grid
/// point at time t are those of the last change whose `after` time is < t.
class VariableSchedule {
 public:
  VariableSchedule() = default;
  explicit VariableSchedule(Variables initial);

  /// Bindings for grid points strictly later than `after`.
  void change(double after, Variables bindings);

  const Variables& at(double time) const;

 private:
  struct Change {
    double after;
    Variables bindings;
  };
  std::vector<Change> changes_;
};

}  // namespace stlmon
