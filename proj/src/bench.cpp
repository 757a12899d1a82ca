#include "stlmon/bench.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <json.hpp>

namespace stlmon {

namespace {

constexpr Semantics kAllSemantics[] = {Semantics::DelayedQuantitative,
                                       Semantics::DelayedQualitative,
                                       Semantics::EagerQualitative, Semantics::Rosi};

std::vector<int> sweep_bounds() {
  std::vector<int> bounds{1};
  for (int b = 100; b <= 5000; b += 100) bounds.push_back(b);
  return bounds;
}

}  // namespace

std::vector<BenchCase> paper_suite(SuitePart part, std::optional<Semantics> only) {
  std::vector<BenchCase> cases;
  for (auto sem : kAllSemantics) {
    if (only && *only != sem) continue;
    if (part != SuitePart::Sweep) {
      cases.push_back({"phi1", "(x < 0.5) && (x > -0.5)", sem});
      cases.push_back({"phi2", "G[0, 1000] ((x > 0.5) -> (F[0, 100] (x < 0)))", sem});
      cases.push_back({"phi3", "(x < 0.5) U[0, 1000] (x < 0)", sem});
    }
    if (part == SuitePart::Table) continue;
    for (int b : sweep_bounds()) {
      if (sem == Semantics::Rosi && b > 1000) break;
      const auto bs = std::to_string(b);
      cases.push_back({"globally_b" + bs, "G[0, " + bs + "] (x > 0)", sem});
      cases.push_back({"eventually_b" + bs, "F[0, " + bs + "] (x > 0)", sem});
      cases.push_back({"until_b" + bs, "(x > 0) U[0, " + bs + "] (x < 0)", sem});
    }
  }
  return cases;
}

BenchResult run_bench(const BenchCase& c, const std::vector<Step>& trace, std::size_t runs,
                      Algorithm algorithm, bool warmup) {
  using Clock = std::chrono::steady_clock;
  if (runs == 0) runs = 1;
  const auto formula = parse_formula(c.formula);

  BenchResult r;
  r.name = c.name;
  r.formula = c.formula;
  r.semantics = c.semantics;
  r.algorithm = algorithm;
  r.samples = trace.size();
  r.runs = runs;

  std::vector<double> means;
  for (std::size_t run = 0; run < runs + (warmup ? 1 : 0); ++run) {
    auto monitor = Monitor::builder().formula(formula).semantics(c.semantics).algorithm(algorithm).build();
    Clock::duration total{};
    for (const auto& step : trace) {
      const auto t0 = Clock::now();
      auto out = monitor.update(step);
      total += Clock::now() - t0;
    }
    const auto stats = monitor.cache_stats();
    r.cache_avg = stats.average;
    r.cache_max = stats.max;
    if (warmup && run == 0) continue;
    const double us = std::chrono::duration<double, std::micro>(total).count();
    means.push_back(trace.empty() ? 0.0 : us / static_cast<double>(trace.size()));
  }

  double sum = 0.0;
  for (double m : means) sum += m;
  r.per_sample_mean = sum / static_cast<double>(means.size());
  double var = 0.0;
  for (double m : means) var += (m - r.per_sample_mean) * (m - r.per_sample_mean);
  r.per_sample_std = std::sqrt(var / static_cast<double>(means.size()));
  return r;
}

std::string bench_report_json(const std::vector<BenchResult>& results) {
  nlohmann::json report;
  report["results"] = nlohmann::json::array();
  for (const auto& r : results) {
    report["results"].push_back({
        {"name", r.name},
        {"formula", r.formula},
        {"semantics", std::string(to_string(r.semantics))},
        {"algorithm", std::string(to_string(r.algorithm))},
        {"samples", r.samples},
        {"runs", r.runs},
        {"per_sample_mean_us", r.per_sample_mean},
        {"per_sample_std_us", r.per_sample_std},
        {"cache_avg", r.cache_avg},
        {"cache_max", r.cache_max},
    });
  }
  return report.dump(2) + "\n";
}

std::string bench_table(const std::vector<BenchResult>& results) {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%-16s %-21s %12s %12s %10s %8s\n", "case", "semantics",
                "mean_us", "std_us", "K_avg", "K_max");
  out += line;
  for (const auto& r : results) {
    std::snprintf(line, sizeof line, "%-16s %-21s %12.4f %12.4f %10.2f %8zu\n", r.name.c_str(),
                  std::string(to_string(r.semantics)).c_str(), r.per_sample_mean,
                  r.per_sample_std, r.cache_avg, r.cache_max);
    out += line;
  }
  return out;
}

}  // namespace stlmon
