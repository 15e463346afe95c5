#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "turnpike/system.hpp"

namespace turnpike {

/// Uniform partition of a closed interval including both endpoints.
/// count == 1 is allowed only for a degenerate interval (lo == hi).
struct Axis {
  double lo = 0.0;
  double hi = 0.0;
  int count = 0;

  double step() const { return count > 1 ? (hi - lo) / (count - 1) : 0.0; }
  double point(int i) const { return count > 1 ? lo + i * step() : lo; }

  // Nearest node index, or -1 when the coordinate falls outside [lo, hi]
  // beyond a small absolute slack for floating-point noise.
  int nearest(double y, double slack = 1e-9) const;
};

enum class InterpMode { multilinear, nearest };

/// Location of a coordinate within an axis as (cell index, weight).
/// weight == 0 means "exactly on node lo"; lo == -1 means out of range.
struct CellRef {
  int32_t lo = -1;
  double w = 0.0;
};

CellRef locate(const Axis& axis, double y, double slack = 1e-9);

/// Tensor-product side of a grid (all state axes, or all control axes).
struct GridSide {
  std::vector<Axis> axes;

  int dim() const { return static_cast<int>(axes.size()); }

  long total() const {
    long t = 1;
    for (const auto& a : axes) t *= a.count;
    return t;
  }

  // Row-major flattening, axis 0 slowest.
  Vec point(long flat) const;
  long flat_nearest(const Vec& y, double slack = 1e-9) const;  // -1 if out of range
  Vec snap(const Vec& y, double slack = 1e-9) const;           // nearest node coordinates

  static GridSide uniform(const Box& box, const std::vector<int>& counts);
};

/// State and control discretization for the dynamic-programming solvers.
struct Grid {
  GridSide state;
  GridSide control;

  static Grid uniform(const Box& state_box, std::vector<int> state_counts, const Box& control_box,
                      std::vector<int> control_counts);
  // Convenience for 1-d systems.
  static Grid uniform(const ControlSystem& sys, int state_points, int control_points);
};

/// Multilinear (or nearest-node) interpolation of a table defined on the
/// nodes of `side`. Any +inf corner with nonzero weight makes the result
/// +inf; coordinates outside the grid give +inf.
double interp_value(const GridSide& side, std::span<const double> table, const Vec& y,
                    InterpMode mode);

}  // namespace turnpike
