#pragma once

#include <span>
#include <utility>
#include <vector>

#include "stlmon/domains.hpp"
#include "stlmon/formula.hpp"
#include "stlmon/trace.hpp"

namespace stlmon {

// Reference evaluator: direct recursion with exhaustive window scans over
// the synchronized trace. It shares no code with the incremental engine
// beyond the value algebra.
//
// Window of G[a,b] / F[a,b] at grid time t: the held value at t+a (latest
// grid point at or before t+a) plus every grid point in (t+a, t+b].
// phi U[a,b] psi at t takes the max over candidates t' from the same window
// of min(psi(t'), min of phi over grid points in [t, t']).
//
// On a partial trace, one virtual sample sits just past the frontier. Its
// atoms are unknown, and it joins every window reaching past the frontier
// (replacing the held value when t+a itself lies past the frontier).

/// Robustness at grid time t. Throws InsufficientTrace unless
/// frontier >= t + temporal_depth(formula), NotOnGrid if t is not a grid
/// point, UnboundVariable for a missing binding.
ExtendedReal naive_robustness(const Trace& trace, const Formula& formula,
                              const Variables& variables, double t);
bool naive_boolean(const Trace& trace, const Formula& formula, const Variables& variables,
                   double t);

/// Partial-trace semantics; t must be on the grid of the prefix.
RobustnessInterval naive_rosi(const Trace& prefix, const Formula& formula,
                              const Variables& variables, double t);
ThreeValued naive_three_valued(const Trace& prefix, const Formula& formula,
                               const Variables& variables, double t);

/// Evaluates all `times` under `semantics` with one shared memo table.
/// Delayed semantics require the horizon to be covered for each time.
std::vector<Verdict> oracle_verdicts(const Trace& trace, const Formula& formula,
                                     const VariableSchedule& variables, Semantics semantics,
                                     std::span<const double> times);

}  // namespace stlmon
