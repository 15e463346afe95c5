#pragma once

#include "turnpike/dissipativity.hpp"

namespace turnpike {

/// The exceptional-time set Q = { t in [0,T] : |x(t) - x^e| > eps }.
struct TurnpikeReport {
  double epsilon = 0.0;
  std::vector<int> q_set;  // sorted time indices outside the ball
  int q_count = 0;
  int horizon = 0;
  double initial_distance = 0.0;
  double max_dist = 0.0;
  int approach_arc_len = 0;  // maximal prefix 0,1,2,... contained in Q
  int leaving_arc_len = 0;   // maximal suffix ...,T-1,T contained in Q

  bool contains(int t) const;
};

TurnpikeReport q_measure(const Trajectory& traj, const Vec& x_e, double epsilon);

struct SweepRow {
  Vec x0;
  int T = 0;
  TurnpikeReport report;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  int max_q = 0;
  // true when the maximum |Q| is already attained at the smallest horizon
  // (the desk-scale witness for a horizon-independent bound)
  bool bounded_at_first_horizon = false;
};

/// Solves each (x0, T), applies q_measure, and aggregates.
SweepResult turnpike_constant(const ControlSystem& sys, const Vec& x_e, double epsilon,
                              const std::vector<int>& horizons, const std::vector<Vec>& initials,
                              const Grid& grid, const TerminalConditions& terminal = {});

/// Exponential envelope |x(t)-x^e| <= C (e^{-sigma t} + e^{-sigma (T-t)}).
struct EnvelopeFit {
  double C = 0.0;
  double sigma = 0.0;
  bool satisfied = false;
  int worst_t = 0;  // index of the largest envelope violation (or tightest margin)
};

EnvelopeFit envelope_check(const Trajectory& traj, const Vec& x_e, double C, double sigma);

/// Smallest C over a 200-point logarithmic sigma grid in [1e-3, 10] such
/// that every supplied trajectory satisfies the envelope.
std::pair<double, double> envelope_fit(const std::vector<Trajectory>& trajs, const Vec& x_e);

/// Certificate data for the boundedness hypotheses: |V_T(x0) - V_T(x^e)|
/// and |lambda(x0)| per run, covered by gamma(r) = c r^2 with constant C.
struct ValueBoundRow {
  Vec x0;
  int T = 0;
  double value_gap = 0.0;      // |V_T(x0) - V_T(x^e)|
  double storage_abs = 0.0;    // |lambda(x0)|
  double distance = 0.0;       // |x0 - x^e|
  bool pass = true;
};

struct ValueBoundCertificate {
  ComparisonFunction gamma = ComparisonFunction::power(1.0, 2.0);
  double constant = 0.0;
  std::vector<ValueBoundRow> rows;
  bool all_pass = true;
};

ValueBoundCertificate value_bound_certificate(const ControlSystem& sys, const Equilibrium& eq,
                                              const StorageCandidate& lambda,
                                              const std::vector<int>& horizons,
                                              const std::vector<Vec>& initials, const Grid& grid);

}  // namespace turnpike
