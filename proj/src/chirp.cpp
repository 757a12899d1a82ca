#include "stlmon/chirp.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace stlmon {

double chirp_phase(const ChirpSpec& spec, double t) {
  return spec.f0 * t + (spec.f1 - spec.f0) * t * t / (2.0 * spec.duration);
}

std::vector<Step> generate_chirp(const ChirpSpec& spec) {
  for (double v : {spec.f0, spec.f1, spec.duration, spec.sample_rate}) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw std::invalid_argument("chirp parameters must be positive and finite");
    }
  }
  const auto n = static_cast<std::size_t>(std::llround(spec.duration * spec.sample_rate));
  std::vector<Step> steps;
  steps.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = static_cast<double>(k) / spec.sample_rate;
    steps.push_back(Step{"x", std::sin(2.0 * std::numbers::pi * chirp_phase(spec, t)), t});
  }
  return steps;
}

}  // namespace stlmon
