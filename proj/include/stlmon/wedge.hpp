#pragma once

#include <deque>
#include <functional>
#include <limits>
#include <string>

#include "stlmon/error.hpp"

namespace stlmon {

enum class WedgeMode { Min, Max };

/// Streaming sliding-window extremum (Lemire's monotonic wedge).
///
/// Values strictly increase front to back in Min mode and strictly decrease
/// in Max mode, so the front is always the extremum of the retained window.
/// Each entry also remembers the timestamp of the push that followed it,
/// which lets `query_holding` treat the stream as piecewise constant.
template <class T>
class Wedge {
 public:
  struct Entry {
    double time;
    T value;
    double next_time;
  };

  explicit Wedge(WedgeMode mode = WedgeMode::Min) : mode_(mode) {}

  WedgeMode mode() const { return mode_; }

  void push(double t, T v) {
    if (pushed_any_ && !(t > last_time_)) {
      throw NonMonotonicTimestamp("wedge", last_time_, t);
    }
    if (!entries_.empty()) entries_.back().next_time = t;
    while (!entries_.empty() && !better(entries_.back().value, v)) entries_.pop_back();
    entries_.push_back(Entry{t, std::move(v), kOpen});
    last_time_ = t;
    pushed_any_ = true;
  }

  /// Evicts entries with timestamp < window_lo and returns the extremum of
  /// what remains. Throws EmptyWindow if nothing remains.
  const T& query(double window_lo) {
    while (!entries_.empty() && entries_.front().time < window_lo) entries_.pop_front();
    if (entries_.empty()) throw EmptyWindow();
    return entries_.front().value;
  }

  /// Like `query`, but keeps the sample whose hold period covers `point`
  /// (the latest pushed sample at or before it): an entry is evicted only
  /// once its successor was pushed at or before `point`.
  const T& query_holding(double point) {
    while (!entries_.empty() && entries_.front().next_time <= point) entries_.pop_front();
    if (entries_.empty()) throw EmptyWindow();
    return entries_.front().value;
  }

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::deque<Entry>& entries() const { return entries_; }

 private:
  static constexpr double kOpen = std::numeric_limits<double>::infinity();

  // True when `kept` must stay in front of a newly pushed `incoming`.
  bool better(const T& kept, const T& incoming) const {
    return mode_ == WedgeMode::Min ? kept < incoming : incoming < kept;
  }

  WedgeMode mode_;
  std::deque<Entry> entries_;
  double last_time_ = 0.0;
  bool pushed_any_ = false;
};

}  // namespace stlmon
