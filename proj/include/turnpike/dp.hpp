#pragma once

#include <functional>
#include <memory>
#include <optional>

#include "turnpike/grid.hpp"
#include "turnpike/ops.hpp"

namespace turnpike {

enum class TerminalMode { none, constraint_set, cost, both };

/// Terminal constraint set X0 and/or terminal cost F appended to the
/// finite-horizon problem. A singleton X0 = {p} is represented as a
/// degenerate box and is evaluated on grids by snapping the successor to
/// the nearest state node and accepting it when that node lies within
/// snap_tol of p (so the effective feasibility band is half a cell).
struct TerminalConditions {
  TerminalMode mode = TerminalMode::none;
  std::optional<Box> set;
  std::function<double(const Vec&)> cost;  // F; required for modes cost/both
  double snap_tol = 1e-6;

  static TerminalConditions none() { return {}; }
  static TerminalConditions constraint_point(const Vec& p);
  static TerminalConditions constraint_box(const Box& b);
  static TerminalConditions cost_only(std::function<double(const Vec&)> F);
  static TerminalConditions constraint_and_cost(const Box& b, std::function<double(const Vec&)> F);

  bool has_set() const {
    return mode == TerminalMode::constraint_set || mode == TerminalMode::both;
  }
  bool has_cost() const { return mode == TerminalMode::cost || mode == TerminalMode::both; }

  // F(y) when y satisfies the terminal constraint (0 without a cost), +inf otherwise.
  double terminal_value(const Vec& y, const GridSide& state_grid) const;

  void validate(const Box& state_box) const;
};

struct SolveOptions {
  InterpMode interp = InterpMode::multilinear;
};

/// Backward-induction tables V_k on the state grid, k = 0..T steps-to-go,
/// with the minimizing control-grid index per (k, node) (-1 = infeasible).
struct ValueTable {
  int horizon = 0;
  GridSide state_grid;
  std::vector<std::vector<double>> values;
  std::vector<std::vector<int32_t>> argmin;

  double value_at(int k, const Vec& x, InterpMode mode) const {
    return interp_value(state_grid, values[k], x, mode);
  }
};

struct OcpSolution {
  std::vector<Vec> controls;
  Trajectory trajectory;
  double value = 0.0;  // realized cost of the returned controls (+ terminal cost)

  struct Diagnostics {
    long state_points = 0;
    long control_points = 0;
    InterpMode interp = InterpMode::multilinear;
    TerminalMode terminal = TerminalMode::none;
    double table_value = 0.0;  // interpolated V_T(x0) from the tables
  } diagnostics;
};

/// Pre-evaluated dynamics/cost tables for one (system, grid, terminal, mode)
/// tuple; builds value tables lazily and answers solve queries from any x0.
/// Immutable after construction except for the cached tables.
class CompiledDp {
 public:
  CompiledDp(const ControlSystem& sys, const Grid& grid, TerminalConditions terminal,
             SolveOptions opts = {});
  ~CompiledDp();
  CompiledDp(CompiledDp&&) noexcept;

  const ValueTable& tables(int T);
  OcpSolution solve_from(const Vec& x0, int T);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Solves the finite-horizon problem from x0 by backward dynamic programming
/// on the grid. Throws DomainError when x0 is outside the state box and
/// InfeasibleError when no admissible control exists at some layer.
OcpSolution solve(const ControlSystem& sys, const Vec& x0, int T, const Grid& grid,
                  const TerminalConditions& terminal = {}, const SolveOptions& opts = {});

ValueTable value_table(const ControlSystem& sys, int T, const Grid& grid,
                       const TerminalConditions& terminal = {}, const SolveOptions& opts = {});

/// Exhaustive enumeration over all control-grid sequences; the equivalence
/// oracle for solve(). With InterpMode::nearest successors snap to state
/// nodes exactly as the solver does, so values must match bit for bit.
/// Rejects instances with more than 10^7 sequences.
OcpSolution brute_force_solve(const ControlSystem& sys, const Vec& x0, int T, const Grid& grid,
                              const TerminalConditions& terminal = {},
                              const SolveOptions& opts = {.interp = InterpMode::nearest});

}  // namespace turnpike
