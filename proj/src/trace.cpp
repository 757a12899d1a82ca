#include "stlmon/trace.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "stlmon/formula.hpp"

namespace stlmon {

NonMonotonicTimestamp::NonMonotonicTimestamp(std::string signal, double previous,
                                             double offered)
    : Error("non-monotonic timestamp for signal '" + signal + "': " +
            format_number(offered) + " does not exceed " + format_number(previous)),
      signal_(std::move(signal)),
      previous_(previous),
      offered_(offered) {}

Trace::Trace(std::vector<std::string> signals) : signals_(std::move(signals)) {
  for (const auto& s : signals_) samples_[s];
}

void Trace::append(const std::string& signal, double time, double value) {
  auto it = samples_.find(signal);
  if (it == samples_.end()) throw std::out_of_range("unknown signal '" + signal + "'");
  auto& v = it->second;
  if (!v.empty() && !(time > v.back().time)) {
    throw NonMonotonicTimestamp(signal, v.back().time, time);
  }
  v.push_back(Sample{time, value});
}

const std::vector<Sample>& Trace::samples(const std::string& signal) const {
  auto it = samples_.find(signal);
  if (it == samples_.end()) throw std::out_of_range("unknown signal '" + signal + "'");
  return it->second;
}

double Trace::frontier() const {
  if (signals_.empty()) return -std::numeric_limits<double>::infinity();
  double f = std::numeric_limits<double>::infinity();
  for (const auto& [name, v] : samples_) {
    if (v.empty()) return -std::numeric_limits<double>::infinity();
    f = std::min(f, v.back().time);
  }
  return f;
}

std::vector<double> Trace::grid() const {
  double f = frontier();
  if (f == -std::numeric_limits<double>::infinity()) return {};
  double start = -std::numeric_limits<double>::infinity();
  for (const auto& [name, v] : samples_) start = std::max(start, v.front().time);
  std::vector<double> out;
  for (const auto& [name, v] : samples_) {
    for (const auto& s : v) {
      if (s.time >= start && s.time <= f) out.push_back(s.time);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

double Trace::value_at(const std::string& signal, double time) const {
  const auto& v = samples(signal);
  auto it = std::upper_bound(v.begin(), v.end(), time,
                             [](double t, const Sample& s) { return t < s.time; });
  if (it == v.begin()) {
    throw InsufficientTrace("signal '" + signal + "' has no sample at or before " +
                            format_number(time));
  }
  return std::prev(it)->value;
}

VariableSchedule::VariableSchedule(Variables initial) {
  changes_.push_back(Change{-std::numeric_limits<double>::infinity(), std::move(initial)});
}

void VariableSchedule::change(double after, Variables bindings) {
  if (!changes_.empty() && after < changes_.back().after) {
    throw std::invalid_argument("variable schedule changes must be ordered");
  }
  changes_.push_back(Change{after, std::move(bindings)});
}

const Variables& VariableSchedule::at(double time) const {
  static const Variables kEmpty;
  const Variables* out = &kEmpty;
  for (const auto& c : changes_) {
    if (c.after < time) out = &c.bindings;
  }
  return *out;
}

}  // namespace stlmon
