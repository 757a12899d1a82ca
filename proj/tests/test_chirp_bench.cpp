#include <doctest.h>

#include <cmath>
#include <json.hpp>
#include <numbers>

#include "stlmon/bench.hpp"
#include "stlmon/chirp.hpp"

using namespace stlmon;

TEST_CASE("chirp: starts at zero and stays in range") {
  auto steps = generate_chirp({});
  REQUIRE(steps.size() == 20000);
  CHECK(steps[0].value == 0.0);
  CHECK(steps[0].timestamp == 0.0);
  CHECK(steps[1].timestamp == 1.0);
  for (const auto& s : steps) {
    CHECK(s.signal == "x");
    CHECK(s.value >= -1.0);
    CHECK(s.value <= 1.0);
  }
}

TEST_CASE("chirp: phase derivative at both ends") {
  ChirpSpec spec;
  const double h = 1e-3;
  const double T = spec.duration;
  auto rate = [&](double t) {
    return 2 * std::numbers::pi * (chirp_phase(spec, t + h) - chirp_phase(spec, t - h)) / (2 * h);
  };
  CHECK(rate(T) == doctest::Approx(2 * std::numbers::pi * spec.f1).epsilon(1e-6));
  CHECK(rate(0) == doctest::Approx(2 * std::numbers::pi * spec.f0).epsilon(1e-6));
}

TEST_CASE("chirp: invalid parameters") {
  CHECK_THROWS_AS(generate_chirp({0.1, 1e-4, -1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(generate_chirp({0, 1e-4, 10, 1}), std::invalid_argument);
}

TEST_CASE("bench suite contents") {
  auto all = paper_suite();
  // 3 table formulas and 51 bounds x 3 sweeps per semantics, Rosi up to b = 1000.
  CHECK(all.size() == 3 * (3 + 3 * 51) + (3 + 3 * 11));
  auto rosi = paper_suite(SuitePart::Sweep, Semantics::Rosi);
  for (const auto& c : rosi) CHECK(c.semantics == Semantics::Rosi);
  CHECK(rosi.size() == 33);
  CHECK(paper_suite(SuitePart::Table, Semantics::EagerQualitative).size() == 3);
  for (const auto& c : all) CHECK_NOTHROW(parse_formula(c.formula));
}

TEST_CASE("bench run and report") {
  ChirpSpec spec;
  spec.duration = 300;
  auto trace = generate_chirp(spec);
  auto r = run_bench({"phi1", "(x < 0.5) && (x > -0.5)", Semantics::DelayedQuantitative}, trace, 2);
  CHECK(r.runs == 2);
  CHECK(r.samples == 300);
  CHECK(r.cache_max == 0);
  CHECK(r.per_sample_mean > 0);
  CHECK(r.per_sample_std >= 0);
  auto j = nlohmann::json::parse(bench_report_json({r}));
  REQUIRE(j["results"].size() == 1);
  const auto& e = j["results"][0];
  for (auto key : {"name", "formula", "semantics", "algorithm", "samples", "runs",
                   "per_sample_mean_us", "per_sample_std_us", "cache_avg", "cache_max"}) {
    CHECK(e.contains(key));
  }
  CHECK(e["semantics"] == "delayed-quantitative");
  CHECK(bench_table({r}).find("phi1") != std::string::npos);
}
