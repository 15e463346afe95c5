#include "turnpike/kernels.hpp"

#include <limits>

namespace turnpike::kernels {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

ScanResult bellman_scan_scalar(const double* stage, const int32_t* lo, const double* w,
                               const double* table, int64_t n) {
  double best = kInf;
  int64_t arg = -1;
  for (int64_t i = 0; i < n; ++i) {
    const double s = stage[i];
    const int32_t l = lo[i];
    if (l < 0 || !(s < kInf)) continue;
    const double wi = w[i];
    // w == 0 reads a single node; the two-node path never multiplies an
    // inf corner by zero, so inf propagates without producing NaN.
    const double v = (wi == 0.0) ? table[l] : (1.0 - wi) * table[l] + wi * table[l + 1];
    const double cand = s + v;
    if (cand < best) {
      best = cand;
      arg = i;
    }
  }
  return {best, arg};
}

}  // namespace turnpike::kernels
