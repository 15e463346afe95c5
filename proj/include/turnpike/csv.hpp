#pragma once

#include <iosfwd>
#include <string>

#include "turnpike/dp.hpp"
#include "turnpike/mpc.hpp"
#include "turnpike/turnpike_metrics.hpp"

namespace turnpike {

// All CSV output uses 17 significant digits, '.' decimal separator and
// '\n' line endings, so repeated runs are byte-identical.
std::string format_double(double v);

// Header: t,x_0..x_{n-1},u_0..u_{m-1}; the final row has empty control fields.
void write_trajectory_csv(std::ostream& os, const Trajectory& traj);
std::string trajectory_csv(const Trajectory& traj);

// Header: x_0..x_{n-1},k,V  (one row per state node and step count k).
void write_value_table_csv(std::ostream& os, const ValueTable& table);

// Header: x,lambda (first state coordinate when n > 1).
void write_storage_csv(std::ostream& os, const GridSide& grid, std::span<const double> values);

// Header: x0,T,epsilon,q_count,max_dist,leaving_arc_len,approach_arc_len.
void write_sweep_csv(std::ostream& os, const SweepResult& sweep);

// Header: S,J_S,J_S_over_S.
void write_performance_csv(std::ostream& os, const PerformanceTable& table);

}  // namespace turnpike
