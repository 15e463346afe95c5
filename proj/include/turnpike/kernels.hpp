#pragma once

#include <cstdint>
#include <string>

namespace turnpike::kernels {

// One Bellman scan over the candidate controls of a single state cell:
//
//   cand[i] = stage[i] + lerp(table, lo[i], w[i])
//   lerp    = table[lo]                         if w == 0
//           = (1-w)*table[lo] + w*table[lo+1]   if 0 < w < 1
//
// lo[i] < 0 or stage[i] == +inf excludes candidate i. +inf table corners
// propagate to +inf candidates, which are never selected. Returns the
// minimum and the smallest index attaining it ({+inf, -1} if none).
//
// The scalar version is the reference; vector variants must return
// bit-identical values (the arithmetic uses the same operation order and
// the build disables fp contraction).
struct ScanResult {
  double value;
  int64_t argmin;
};

using ScanFn = ScanResult (*)(const double* stage, const int32_t* lo, const double* w,
                              const double* table, int64_t n);

ScanResult bellman_scan_scalar(const double* stage, const int32_t* lo, const double* w,
                               const double* table, int64_t n);

#if defined(__x86_64__) || defined(_M_X64)
ScanResult bellman_scan_avx2(const double* stage, const int32_t* lo, const double* w,
                             const double* table, int64_t n);
bool cpu_supports_avx2();
#endif

// Runtime-selected kernel. Honors TURNPIKE_LAB_SIMD={auto,scalar,avx2} at
// first use; force_kernel() overrides it programmatically (tests).
ScanFn active_kernel();
const char* active_kernel_name();
void force_kernel(const std::string& name);

}  // namespace turnpike::kernels
