#include "turnpike/grid.hpp"

#include <cmath>

namespace turnpike {

int Axis::nearest(double y, double slack) const {
  if (count == 1) return std::abs(y - lo) <= slack ? 0 : -1;
  if (y < lo - slack || y > hi + slack) return -1;
  int i = static_cast<int>(std::lround((y - lo) / step()));
  if (i < 0) i = 0;
  if (i >= count) i = count - 1;
  return i;
}

CellRef locate(const Axis& axis, double y, double slack) {
  CellRef ref;
  if (axis.count == 1) {
    if (std::abs(y - axis.lo) <= slack) ref.lo = 0;
    return ref;
  }
  if (y < axis.lo - slack || y > axis.hi + slack) return ref;
  double t = (y - axis.lo) / axis.step();
  int i = static_cast<int>(std::floor(t));
  double w = t - i;
  if (i < 0) {  // within slack below lo
    i = 0;
    w = 0.0;
  }
  if (i >= axis.count - 1) {  // at or within slack above hi
    i = axis.count - 1;
    w = 0.0;
  }
  if (w == 1.0) {  // guard: keep w in [0,1) so table[lo+1] is only read when needed
    i += 1;
    w = 0.0;
  }
  ref.lo = i;
  ref.w = w;
  return ref;
}

Vec GridSide::point(long flat) const {
  Vec p(dim());
  for (int d = dim() - 1; d >= 0; --d) {
    long c = axes[d].count;
    p[d] = axes[d].point(static_cast<int>(flat % c));
    flat /= c;
  }
  return p;
}

long GridSide::flat_nearest(const Vec& y, double slack) const {
  long flat = 0;
  for (int d = 0; d < dim(); ++d) {
    int i = axes[d].nearest(y[d], slack);
    if (i < 0) return -1;
    flat = flat * axes[d].count + i;
  }
  return flat;
}

Vec GridSide::snap(const Vec& y, double slack) const {
  long flat = flat_nearest(y, slack);
  if (flat < 0) throw DomainError("point outside the grid cannot be snapped");
  return point(flat);
}

GridSide GridSide::uniform(const Box& box, const std::vector<int>& counts) {
  box.validate();
  if (static_cast<int>(counts.size()) != box.dim())
    throw DomainError("grid counts must match box dimension");
  GridSide side;
  for (int d = 0; d < box.dim(); ++d) {
    if (counts[d] < 1) throw DomainError("grid counts must be >= 1");
    if (counts[d] == 1 && box.lower[d] != box.upper[d])
      throw DomainError("single-point axis requires a degenerate interval");
    side.axes.push_back(Axis{box.lower[d], box.upper[d], counts[d]});
  }
  return side;
}

Grid Grid::uniform(const Box& state_box, std::vector<int> state_counts, const Box& control_box,
                   std::vector<int> control_counts) {
  Grid g;
  g.state = GridSide::uniform(state_box, state_counts);
  g.control = GridSide::uniform(control_box, control_counts);
  return g;
}

Grid Grid::uniform(const ControlSystem& sys, int state_points, int control_points) {
  return uniform(sys.state_box, std::vector<int>(sys.state_dim, state_points), sys.control_box,
                 std::vector<int>(sys.control_dim, control_points));
}

double interp_value(const GridSide& side, std::span<const double> table, const Vec& y,
                    InterpMode mode) {
  const int n = side.dim();
  if (mode == InterpMode::nearest) {
    long flat = side.flat_nearest(y);
    return flat < 0 ? kInf : table[flat];
  }
  constexpr int kMaxDim = 16;
  int32_t lo[kMaxDim];
  double w[kMaxDim];
  for (int d = 0; d < n; ++d) {
    CellRef ref = locate(side.axes[d], y[d]);
    if (ref.lo < 0) return kInf;
    lo[d] = ref.lo;
    w[d] = ref.w;
  }
  // Corner accumulation: zero-weight corners are skipped so +inf values on
  // them cannot poison the result; any +inf corner with positive weight
  // makes the whole cell +inf (conservative infeasibility).
  double acc = 0.0;
  for (unsigned corner = 0; corner < (1u << n); ++corner) {
    double wgt = 1.0;
    long flat = 0;
    bool skip = false;
    for (int d = 0; d < n; ++d) {
      bool hi = corner & (1u << d);
      double wd = hi ? w[d] : 1.0 - w[d];
      if (wd == 0.0) {
        skip = true;
        break;
      }
      wgt *= wd;
      flat = flat * side.axes[d].count + lo[d] + (hi ? 1 : 0);
    }
    if (skip) continue;
    double v = table[flat];
    if (v == kInf) return kInf;
    acc += wgt * v;
  }
  return acc;
}

}  // namespace turnpike
