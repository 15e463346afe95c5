#pragma once

#include <vector>

#include "turnpike/system.hpp"

namespace turnpike {

/// Per-index admissibility of a trajectory against the system's boxes.
struct AdmissibilityReport {
  std::vector<bool> state_ok;    // one entry per state x(0..T)
  std::vector<bool> control_ok;  // one entry per control u(0..T-1)
  bool admissible = true;
  int first_violation = -1;          // time index of the first failure, -1 if none
  std::string first_violation_kind;  // "state" or "control"
};

/// Rolls the dynamics forward from x0 under the given controls.
/// Does not enforce admissibility; throws NumericOverflowError if the
/// dynamics produce a non-finite state.
Trajectory simulate(const ControlSystem& sys, const Vec& x0, const std::vector<Vec>& controls);

/// Sum of stage costs along the trajectory (+inf if any stage is +inf).
/// Throws ConsistencyError if the trajectory does not satisfy the dynamics.
double trajectory_cost(const ControlSystem& sys, const Trajectory& traj);

AdmissibilityReport check_admissible(const ControlSystem& sys, const Trajectory& traj);

}  // namespace turnpike
