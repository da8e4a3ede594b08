#pragma once

#include <cstddef>

namespace lelong::kernels {

enum class Isa { Scalar, Avx2 };

const char* isa_name(Isa isa);
bool isa_available(Isa isa);

// Chosen once from CPU features; LELONGLAB_SIMD=scalar forces the reference path.
Isa active_isa();

// Sum over segments [ys[i], ys[i+1]] of the exact integral
//   int f(y) * v / (v^2 + (y - u)^2) dy
// for the piecewise-linear interpolant f of (ys, fs). Requires v > 0, n >= 2.
// The result is pi times the bulk part of the Poisson extension.
double poisson_segment_sum(Isa isa, const double* ys, const double* fs, std::size_t n, double u,
                           double v);
inline double poisson_segment_sum(const double* ys, const double* fs, std::size_t n, double u,
                                  double v) {
  return poisson_segment_sum(active_isa(), ys, fs, n, u, v);
}

struct RatioScan {
  std::size_t count = 0;
  std::size_t violations = 0;
  double min = 0.0;
  double max = 0.0;
};

// Ratios of d/dv of -P e^{-2v}/2 and -P e^{-2 lambda v}/(2 lambda) to the integrands
// P e^{-2v} and P e^{-2 lambda v}, with P = v / (v^2 + d^2), evaluated on the
// product lattice vs x ds. Violations are ratios outside (lo, hi).
struct RatioPair {
  RatioScan first;
  RatioScan second;
};
RatioPair poisson_ratio_scan(Isa isa, const double* vs, std::size_t nv, const double* ds,
                             std::size_t nd, double lambda, double lo, double hi);

// Checks 2k pi / ((2k pi)^2 + (u - y)^2) >= coefficient / (2k pi) on us x ys.
// min/max report the smallest and largest kernel-to-bound ratio.
RatioScan interval_kernel_scan(Isa isa, const double* us, std::size_t nu, const double* ys,
                               std::size_t ny, int k, double coefficient);

namespace scalar {
double poisson_segment_sum(const double* ys, const double* fs, std::size_t n, double u, double v);
RatioPair poisson_ratio_scan(const double* vs, std::size_t nv, const double* ds, std::size_t nd,
                             double lambda, double lo, double hi);
RatioScan interval_kernel_scan(const double* us, std::size_t nu, const double* ys, std::size_t ny,
                               int k, double coefficient);
}  // namespace scalar

namespace avx2 {
double poisson_segment_sum(const double* ys, const double* fs, std::size_t n, double u, double v);
RatioPair poisson_ratio_scan(const double* vs, std::size_t nv, const double* ds, std::size_t nd,
                             double lambda, double lo, double hi);
RatioScan interval_kernel_scan(const double* us, std::size_t nu, const double* ys, std::size_t ny,
                               int k, double coefficient);
}  // namespace avx2

// Segments closer than this many widths to the kernel pole use the closed form;
// farther ones use 3-point Gauss, which avoids cancellation in the log/atan pair.
inline constexpr double kFarFieldRatio = 200.0;

}  // namespace lelong::kernels
