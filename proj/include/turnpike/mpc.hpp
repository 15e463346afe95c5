#pragma once

#include "turnpike/dissipativity.hpp"

namespace turnpike {

struct MpcConfig {
  int horizon = 1;  // T
  int steps = 1;    // S, closed-loop length
  TerminalConditions terminal;
  Grid grid;
  SolveOptions solve_opts;
  // When true the backward tables are built once and shared across the S
  // solver calls (they do not depend on x0). Off by default.
  bool reuse_tables = false;
};

/// Closed loop of the receding-horizon controller: at each step solve the
/// T-horizon problem from the current state and apply the first control.
struct MpcRun {
  Trajectory closed_loop;                // S+1 states, S controls
  std::vector<OcpSolution> predictions;  // one open-loop solution per step
  std::vector<double> stage_costs;       // realized l(x_k, u_k)
  TerminalMode terminal_mode = TerminalMode::none;
  int horizon = 0;
};

struct FeasibilityLossError : std::runtime_error {
  int step;
  MpcRun partial;
  FeasibilityLossError(const std::string& msg, int step_, MpcRun partial_)
      : std::runtime_error(msg), step(step_), partial(std::move(partial_)) {}
};

/// Runs S receding-horizon steps from x0. Throws FeasibilityLossError
/// (carrying the partial run) if some step's problem is infeasible.
MpcRun mpc_run(const ControlSystem& sys, const Vec& x0, const MpcConfig& config);

/// Partial sums J_S of the realized stage costs and their averages, plus
/// measured residuals: delta1_hat = least-squares slope of J_S over the
/// requested range minus l^e, delta2_hat = rms residual of that fit.
struct PerformanceRow {
  int S;
  double J;
  double averaged;
};

struct PerformanceTable {
  std::vector<PerformanceRow> rows;
  double delta1_hat = 0.0;
  double delta2_hat = 0.0;
};

PerformanceTable performance(const MpcRun& run, const std::vector<int>& s_values,
                             double equilibrium_cost = 0.0);

/// max over the last ceil(S/4) closed-loop steps of |x(k) - x^e|, per horizon.
struct RadiusRow {
  int T;
  double radius;
};

struct RadiusTable {
  std::vector<RadiusRow> rows;
  bool nonincreasing = true;  // within 1e-6 across the supplied horizons
};

RadiusTable practical_stability_radius(const ControlSystem& sys, const Vec& x0,
                                       const std::vector<int>& T_values, int steps,
                                       const Grid& grid, const Vec& x_e);

/// For each sampled x in X0, searches the control grid for u with
/// f(x,u) in X0 and F(f(x,u)) <= F(x) - l(x,u) + l(x^e,u^e).
struct TerminalCheckRow {
  Vec x;
  bool ok = false;
  Vec witness_u;  // empty when no witness exists
  double margin = kInf;
};

struct TerminalCheckReport {
  std::vector<TerminalCheckRow> rows;
  bool all_passed = false;
};

TerminalCheckReport terminal_cost_check(const ControlSystem& sys, const Equilibrium& eq,
                                        const TerminalConditions& terminal, const Grid& grid,
                                        int samples_per_axis = 21);

/// Evaluates the rotated-cost value function V~_T (terminal cost F + lambda)
/// along the closed loop and checks the decrease
/// V~(x(k+1)) <= V~(x(k)) - alpha(|x(k)-x^e|) + tolerance.
struct LyapunovReport {
  enum class Status { ok, violated, not_applicable };
  Status status = Status::not_applicable;
  int first_violation = -1;
  std::vector<double> values;      // V~_T along the closed loop
  std::vector<double> decrements;  // V~(k+1) - V~(k) + alpha(|x(k)-x^e|)
};

LyapunovReport lyapunov_decrease_check(const ControlSystem& sys, const StorageCandidate& lambda,
                                       const ComparisonFunction& alpha, const Equilibrium& eq,
                                       const MpcRun& run, const Grid& grid,
                                       double tolerance = 1e-6);

/// Optimal S-step cost over control sequences whose final state ends at
/// least as close to x^e as the MPC run did (closed ball, radius taken from
/// the run); the transient-optimality comparison value.
double constrained_transient_optimum(const ControlSystem& sys, const Vec& x0, int S,
                                     const Vec& x_e, double radius, const Grid& grid);

}  // namespace turnpike
