#pragma once

#include <optional>

#include "turnpike/dp.hpp"

namespace turnpike {

/// Shifted stage cost s(x,u) = l(x,u) - l(x^e,u^e), so that s(x^e,u^e) = 0.
struct SupplyRate {
  const ControlSystem* sys = nullptr;
  Equilibrium eq;

  double operator()(const Vec& x, const Vec& u) const { return sys->stage_cost(x, u) - eq.cost; }

  static SupplyRate optimal(const ControlSystem& sys, const Equilibrium& eq) {
    return SupplyRate{&sys, eq};
  }
};

/// Storage-function candidate: lambda evaluable on the state box together
/// with a declared lower bound D >= 0 (lambda >= -D on X, verified on grids).
class StorageCandidate {
 public:
  enum class Kind { linear, quadratic, tabulated, callable };

  static StorageCandidate linear(const Vec& p, double lower_bound);
  // x' M x / 2 + p' x
  static StorageCandidate quadratic(const Mat& M, const Vec& p, double lower_bound);
  static StorageCandidate tabulated(GridSide grid, std::vector<double> values, double lower_bound);
  static StorageCandidate callable(std::function<double(const Vec&)> fn, double lower_bound);
  static StorageCandidate zero() { return callable([](const Vec&) { return 0.0; }, 0.0); }

  double operator()(const Vec& x) const;
  double lower_bound() const { return lower_bound_; }
  Kind kind() const { return kind_; }

  // min over the grid of lambda must be >= -D - 1e-9, else RejectedCandidateError.
  void verify_lower_bound(const GridSide& state_grid) const;

 private:
  Kind kind_ = Kind::callable;
  Vec p_;
  Mat M_;
  GridSide grid_;
  std::vector<double> table_;
  std::function<double(const Vec&)> fn_;
  double lower_bound_ = 0.0;
};

/// Outcome of sampling the one-step dissipation inequality
///   lambda(f(x,u)) <= lambda(x) + s(x,u) - alpha(|x - x^e|)
/// over a grid of admissible pairs (alpha omitted in plain mode).
struct DissipativityReport {
  bool strict_mode = true;
  std::optional<ComparisonFunction> alpha;
  long checked_pairs = 0;
  long skipped_pairs = 0;  // pairs whose successor leaves the state box
  double worst_violation = -kInf;
  Vec worst_x, worst_u;
  double tolerance = 1e-9;
  bool certified = false;  // !(worst_violation > tolerance)
};

/// lambda(f(x,u)) - lambda(x) - s(x,u) + alpha(|x-x^e|); positive means the
/// inequality is violated at (x,u). alpha == nullopt gives the plain form.
double one_step_violation(const ControlSystem& sys, const StorageCandidate& lambda,
                          const std::optional<ComparisonFunction>& alpha, const Equilibrium& eq,
                          const Vec& x, const Vec& u);

/// Grid search over fixed-point-feasible pairs followed by Newton refinement
/// of the stationarity system of  min l(x,u) s.t. f(x,u) = x.  The stored
/// multiplier follows the convention grad_u l + p grad_u f = 0 (for the
/// constraint written f(x,u) - x = 0).
Equilibrium optimal_equilibrium(const ControlSystem& sys, const Grid& grid);

DissipativityReport check_strict_dissipativity(const ControlSystem& sys,
                                               const StorageCandidate& lambda,
                                               const std::optional<ComparisonFunction>& alpha,
                                               const Equilibrium& eq, const Grid& samples,
                                               double tolerance = 1e-9);

/// Same dynamics with stage cost l(x,u) - l(x^e,u^e) + lambda(x) - lambda(f(x,u)).
ControlSystem rotated_cost(const ControlSystem& sys, const StorageCandidate& lambda,
                           const Equilibrium& eq);

/// Result of the storage-function dynamic programs below.
struct StorageComputation {
  GridSide state_grid;
  std::vector<double> table;
  bool converged = false;   // successive-horizon change fell below 1e-8
  bool unbounded = false;   // some value exceeded 1e12 in magnitude
  int iterations = 0;
  double max_abs = 0.0;

  StorageCandidate as_candidate() const;
};

/// Available storage: V(x) = sup over horizons <= T_max and admissible
/// controls of sum(-s + alpha), by reward-maximizing value iteration.
/// V is a storage function wherever the iteration converged.
StorageComputation available_storage(const ControlSystem& sys, const SupplyRate& s,
                                     const std::optional<ComparisonFunction>& alpha,
                                     const Grid& grid, int T_max = 200);

/// Required supply: V(x) = inf over trajectories from x^e to x (horizon
/// <= T_max) of sum(s - alpha), by forward value iteration on the
/// nearest-node dynamics. Unreached cells stay +inf. x^e must lie within
/// half a cell of a state node (it is snapped there).
StorageComputation required_supply(const ControlSystem& sys, const SupplyRate& s,
                                   const std::optional<ComparisonFunction>& alpha,
                                   const Equilibrium& eq, const Grid& grid, int T_max = 200);

/// Both sides of the lower bound J_T(x0,u*) >= sum alpha(|x*(t)-x^e|)
/// + T l^e - lambda(x0) - D along a computed solution, plus the slack.
struct TurnpikeCertificate {
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;     // lhs - rhs
  bool alarm = false;     // slack < -1e-6: solver or certificate inconsistency
  double alpha_sum = 0.0;
};

TurnpikeCertificate turnpike_lower_bound_certificate(const ControlSystem& sys,
                                                     const StorageCandidate& lambda,
                                                     const ComparisonFunction& alpha,
                                                     const Equilibrium& eq, const Vec& x0, int T,
                                                     const OcpSolution& solution);

/// V_T(x0)/T per horizon; the averaged optimal value approaches l(x^e,u^e)
/// from above as T grows (report-only trend data).
struct AveragedValueRow {
  int T;
  double value;
  double averaged;
};
std::vector<AveragedValueRow> steady_state_optimality_check(const ControlSystem& sys,
                                                            const Equilibrium& eq, const Vec& x0,
                                                            const std::vector<int>& horizons,
                                                            const Grid& grid);

/// Largest c such that alpha(r) = c r^2 passes the strict check on the
/// sample grid (bisection, 40 iterations); nullopt when even tiny c fails.
std::optional<ComparisonFunction> fit_quadratic_alpha(const ControlSystem& sys,
                                                      const StorageCandidate& lambda,
                                                      const Equilibrium& eq, const Grid& samples);

/// Automatic candidate: lambda == 0 when the shifted cost already dominates
/// a quadratic margin, else the linear storage -p'x from the equilibrium
/// multiplier when the dynamics probe affine and the cost probes convex.
StorageCandidate suggest_storage(const ControlSystem& sys, const Equilibrium& eq, const Grid& grid);

bool probe_affine_dynamics(const ControlSystem& sys, const Grid& grid);
bool probe_convex_cost(const ControlSystem& sys, const Grid& grid);

}  // namespace turnpike
