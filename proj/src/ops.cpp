#include "turnpike/ops.hpp"

namespace turnpike {

Trajectory simulate(const ControlSystem& sys, const Vec& x0, const std::vector<Vec>& controls) {
  if (!is_finite(x0)) throw DomainError("initial state must be finite");
  Trajectory traj;
  traj.states.reserve(controls.size() + 1);
  traj.controls = controls;
  traj.states.push_back(x0);
  Vec x = x0;
  for (size_t t = 0; t < controls.size(); ++t) {
    if (!is_finite(controls[t])) throw DomainError("control at step " + std::to_string(t) + " is not finite");
    x = sys.dynamics(x, controls[t]);
    if (!is_finite(x))
      throw NumericOverflowError("dynamics produced a non-finite state at step " + std::to_string(t),
                                 static_cast<int>(t));
    traj.states.push_back(x);
  }
  return traj;
}

double trajectory_cost(const ControlSystem& sys, const Trajectory& traj) {
  traj.validate_shape();
  for (int t = 0; t < traj.horizon(); ++t) {
    Vec pred = sys.dynamics(traj.states[t], traj.controls[t]);
    double err = (traj.states[t + 1] - pred).lpNorm<Eigen::Infinity>();
    if (!(err <= kDynamicConsistencyTol))
      throw ConsistencyError("trajectory inconsistent with dynamics at step " + std::to_string(t), t);
  }
  double total = 0.0;
  for (int t = 0; t < traj.horizon(); ++t) {
    double c = sys.stage_cost(traj.states[t], traj.controls[t]);
    if (c == kInf) return kInf;
    total += c;
  }
  return total;
}

AdmissibilityReport check_admissible(const ControlSystem& sys, const Trajectory& traj) {
  AdmissibilityReport rep;
  rep.state_ok.reserve(traj.states.size());
  rep.control_ok.reserve(traj.controls.size());
  auto note = [&](bool ok, int t, const char* kind) {
    if (!ok && rep.admissible) {
      rep.admissible = false;
      rep.first_violation = t;
      rep.first_violation_kind = kind;
    }
  };
  for (size_t t = 0; t < traj.states.size(); ++t) {
    bool ok = sys.state_box.contains(traj.states[t]);
    rep.state_ok.push_back(ok);
    note(ok, static_cast<int>(t), "state");
  }
  for (size_t t = 0; t < traj.controls.size(); ++t) {
    bool ok = sys.control_box.contains(traj.controls[t]);
    rep.control_ok.push_back(ok);
    note(ok, static_cast<int>(t), "control");
  }
  return rep;
}

}  // namespace turnpike
