#include <doctest.h>

#include <optional>
#include <random>

#include "stlmon/wedge.hpp"

using namespace stlmon;

TEST_CASE("wedge: dominated values leave on push") {
  Wedge<double> w(WedgeMode::Min);
  w.push(0, 3);
  w.push(1, 1);
  REQUIRE(w.size() == 1);
  CHECK(w.entries().front().time == 1);
  CHECK(w.entries().front().value == 1);
}

TEST_CASE("wedge: increasing values are kept") {
  Wedge<double> w(WedgeMode::Min);
  w.push(0, 1);
  w.push(1, 3);
  REQUIRE(w.size() == 2);
  CHECK(w.query(0.5) == 3);
}

TEST_CASE("wedge: query evicts before reading") {
  Wedge<double> w(WedgeMode::Min);
  w.push(0, 1);
  w.push(1, 3);
  CHECK(w.query(0) == 1);
  CHECK_THROWS_AS(w.query(2), EmptyWindow);
}

TEST_CASE("wedge: equal values keep only the newest") {
  Wedge<double> w(WedgeMode::Max);
  w.push(0, 2);
  w.push(1, 2);
  CHECK(w.size() == 1);
  CHECK(w.entries().front().time == 1);
}

TEST_CASE("wedge: timestamps must increase") {
  Wedge<double> w;
  w.push(1, 0);
  CHECK_THROWS_AS(w.push(1, 0), NonMonotonicTimestamp);
  CHECK_THROWS_AS(w.push(0.5, 0), NonMonotonicTimestamp);
}

TEST_CASE("wedge: holding query keeps the sample in force at the point") {
  Wedge<double> w(WedgeMode::Min);
  w.push(0, 1);
  w.push(2, 5);
  w.push(4, 3);
  // At 1 the value pushed at 0 is still held.
  CHECK(w.query_holding(1) == 1);
  // At 2 the sample from 0 is superseded.
  CHECK(w.query_holding(2) == 3);
  CHECK(w.query_holding(10) == 3);
}

TEST_CASE("wedge: random pushes against a brute-force scan") {
  std::mt19937_64 rng(3);
  for (int round = 0; round < 50; ++round) {
    const auto mode = round % 2 ? WedgeMode::Max : WedgeMode::Min;
    Wedge<int> w(mode);
    std::vector<std::pair<double, int>> all;
    double t = 0, lo = 0;
    for (int k = 0; k < 200; ++k) {
      t += std::uniform_int_distribution<int>(1, 3)(rng);
      const int v = std::uniform_int_distribution<int>(-5, 5)(rng);
      w.push(t, v);
      all.emplace_back(t, v);
      lo = std::max(lo, t - std::uniform_int_distribution<int>(0, 12)(rng));
      std::optional<int> best;
      for (auto& [ts, vs] : all) {
        if (ts >= lo) best = !best ? vs : (mode == WedgeMode::Min ? std::min(*best, vs) : std::max(*best, vs));
      }
      REQUIRE(best);
      CHECK(w.query(lo) == *best);
    }
  }
}
