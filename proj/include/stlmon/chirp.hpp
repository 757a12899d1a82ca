#pragma once

#include <vector>

#include "stlmon/monitor.hpp"

namespace stlmon {

/// Linear chirp x(t) = sin(2*pi*(f0*t + (f1 - f0)*t^2 / (2*T))), T = duration.
struct ChirpSpec {
  double f0 = 0.1;
  double f1 = 1e-4;
  double duration = 20000.0;
  double sample_rate = 1.0;
};

/// Phase in cycles (not radians) at time t.
double chirp_phase(const ChirpSpec& spec, double t);

/// duration * sample_rate samples of signal "x" at t = k / sample_rate.
/// Throws std::invalid_argument unless every field is positive and finite.
std::vector<Step> generate_chirp(const ChirpSpec& spec);

}  // namespace stlmon
