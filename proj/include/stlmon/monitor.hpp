#pragma once

#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "stlmon/domains.hpp"
#include "stlmon/formula.hpp"
#include "stlmon/trace.hpp"

namespace stlmon {

/// One timestamped sample of one named signal.
struct Step {
  std::string signal;
  double value = 0.0;
  double timestamp = 0.0;
};

enum class Algorithm { Incremental, Naive };

/// How asynchronous signals are aligned. Only zero-order hold is supported.
enum class Synchronization { ZeroOrderHold };

std::string_view to_string(Algorithm a);
Algorithm parse_algorithm(std::string_view text);

struct MonitorConfig {
  Formula formula;
  Semantics semantics = Semantics::DelayedQuantitative;
  Algorithm algorithm = Algorithm::Incremental;
  Variables variables;
  Synchronization synchronization = Synchronization::ZeroOrderHold;
};

/// A step for a signal the formula never mentions.
class UnknownSignal : public Error {
 public:
  explicit UnknownSignal(std::string signal)
      : Error("signal '" + signal + "' does not occur in the formula"),
        signal_(std::move(signal)) {}
  const std::string& signal() const noexcept { return signal_; }

 private:
  std::string signal_;
};

struct Event {
  double time = 0.0;
  Verdict verdict;
  bool final = true;
};

/// Verdict events produced by one update, ordered by evaluation time.
struct MonitorOutput {
  std::vector<Event> events;

  bool empty() const { return events.empty(); }
  void append(const MonitorOutput& other) {
    events.insert(events.end(), other.events.begin(), other.events.end());
  }
};

/// `t=<time>s: <verdict>`, one line per event.
std::string format_event(const Event& e);
std::ostream& operator<<(std::ostream& os, const MonitorOutput& out);

/// K: elements cached by all temporal operators, sampled after each update.
struct CacheStats {
  std::size_t current = 0;
  double average = 0.0;
  std::size_t max = 0;
};

/// Thrown by update_batch; carries the events emitted before the failing step.
class BatchUpdateError : public Error {
 public:
  BatchUpdateError(std::size_t failed_index, MonitorOutput partial, std::exception_ptr cause,
                   const std::string& what);

  std::size_t failed_index() const noexcept { return failed_index_; }
  const MonitorOutput& partial() const noexcept { return partial_; }
  std::exception_ptr cause() const noexcept { return cause_; }

 private:
  std::size_t failed_index_;
  MonitorOutput partial_;
  std::exception_ptr cause_;
};

class MonitorBuilder;

namespace detail {
class Evaluator;
}

/// Online STL monitor over a stream of asynchronously sampled signals.
///
/// Not thread-safe: one monitor is driven by one caller at a time.
class Monitor {
 public:
  /// Throws UnboundVariable for a `$NAME` without binding.
  explicit Monitor(MonitorConfig config);
  ~Monitor();
  Monitor(Monitor&&) noexcept;
  Monitor& operator=(Monitor&&) noexcept;

  static MonitorBuilder builder();

  /// Throws NonMonotonicTimestamp or UnknownSignal; the monitor is left
  /// unchanged in that case.
  MonitorOutput update(const Step& step);
  MonitorOutput update_batch(std::span<const Step> steps);

  /// Affects atoms evaluated after this call; cached results are kept.
  void set_variable(const std::string& name, double value);

  CacheStats cache_stats() const;
  const MonitorConfig& config() const;
  double temporal_depth() const;
  /// Minimum over signals of their latest timestamp (-inf before all reported).
  double frontier() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Fluent construction with defaults for every option.
class MonitorBuilder {
 public:
  MonitorBuilder& formula(Formula f) {
    config_.formula = std::move(f);
    return *this;
  }
  MonitorBuilder& semantics(Semantics s) {
    config_.semantics = s;
    return *this;
  }
  MonitorBuilder& algorithm(Algorithm a) {
    config_.algorithm = a;
    return *this;
  }
  MonitorBuilder& variables(Variables v) {
    config_.variables = std::move(v);
    return *this;
  }
  MonitorBuilder& synchronization_strategy(Synchronization s) {
    config_.synchronization = s;
    return *this;
  }
  Monitor build() const { return Monitor(config_); }

 private:
  MonitorConfig config_;
};

}  // namespace stlmon
