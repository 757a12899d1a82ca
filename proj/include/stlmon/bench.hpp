#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stlmon/monitor.hpp"

namespace stlmon {

struct BenchCase {
  std::string name;  // e.g. "phi3" or "until_b500"
  std::string formula;
  Semantics semantics;
};

struct BenchResult {
  std::string name;
  std::string formula;
  Semantics semantics = Semantics::DelayedQuantitative;
  Algorithm algorithm = Algorithm::Incremental;
  std::size_t samples = 0;
  std::size_t runs = 0;
  double per_sample_mean = 0.0;  // microseconds, mean over runs
  double per_sample_std = 0.0;   // microseconds, population std over runs
  double cache_avg = 0.0;
  std::size_t cache_max = 0;
};

/// Which part of the published suite to select.
enum class SuitePart { All, Table, Sweep };

/// Formulas phi1..phi3 and the bound sweeps for G, F and U with
/// b in {1, 100, 200, ..., 5000}; Rosi sweeps stop at b = 1000.
std::vector<BenchCase> paper_suite(SuitePart part = SuitePart::All,
                                   std::optional<Semantics> only = std::nullopt);

/// Feeds `trace` through a fresh monitor `runs` times after one untimed
/// warm-up run, timing each update with a monotonic clock.
BenchResult run_bench(const BenchCase& c, const std::vector<Step>& trace, std::size_t runs,
                      Algorithm algorithm = Algorithm::Incremental, bool warmup = true);

/// Machine-readable report: {"results": [BenchResult...]}.
std::string bench_report_json(const std::vector<BenchResult>& results);

/// Fixed-width text table of the results.
std::string bench_table(const std::vector<BenchResult>& results);

}  // namespace stlmon
