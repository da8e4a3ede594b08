#pragma once

// Per-segment pieces shared by the scalar reference and the tail loops of the
// vector variants. Internal linkage on purpose: each translation unit is built
// with its own ISA flags.

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <cstddef>

#include "lelong/kernels.hpp"

namespace lelong::kernels::detail {
namespace {

constexpr double kGaussX0 = 0.11270166537925831148;  // (1 - sqrt(3/5)) / 2
constexpr double kGaussX1 = 0.5;
constexpr double kGaussX2 = 0.88729833462074168852;
constexpr double kGaussW0 = 5.0 / 18.0;
constexpr double kGaussW1 = 8.0 / 18.0;

inline double segment_term(double y0, double y1, double f0, double f1, double u, double v) {
  const double h = y1 - y0;
  const double t0 = y0 - u;
  const double t1 = y1 - u;
  const double v2 = v * v;
  const double s = (f1 - f0) / h;
  const double dtheta = std::atan2(h * v, v2 + t0 * t1);
  const double rho2 = v2 + std::min(t0 * t0, t1 * t1);
  const double lim = kFarFieldRatio * h;
  double g;
  if (rho2 >= lim * lim) {
    const double a = t0 + h * kGaussX0;
    const double b = t0 + h * kGaussX1;
    const double c = t0 + h * kGaussX2;
    g = h * h * v *
        (kGaussW0 * kGaussX0 / (v2 + a * a) + kGaussW1 * kGaussX1 / (v2 + b * b) +
         kGaussW0 * kGaussX2 / (v2 + c * c));
  } else {
    const double n0 = std::max(v2 + t0 * t0, DBL_MIN);
    const double n1 = std::max(v2 + t1 * t1, DBL_MIN);
    g = 0.5 * v * std::log(n1 / n0) - t0 * dtheta;
  }
  return f0 * dtheta + s * g;
}

inline double poisson_ratio_first(double v, double d) {
  const double q = v * v + d * d;
  const double p = v / q;
  return (p - 0.5 / q - 0.5 * (v * (-2.0 * v)) / (q * q)) / p;
}

inline double poisson_ratio_second(double v, double d, double lambda) {
  const double q = v * v + d * d;
  const double p = v / q;
  const double c = -1.0 / (2.0 * lambda);
  return (p + c / q + c * (v * (-2.0 * v)) / (q * q)) / p;
}

inline void accumulate(RatioScan& s, double x, double lo, double hi) {
  if (s.count == 0) {
    s.min = x;
    s.max = x;
  } else {
    s.min = std::min(s.min, x);
    s.max = std::max(s.max, x);
  }
  ++s.count;
  if (!(x > lo && x < hi)) ++s.violations;
}

}  // namespace
}  // namespace lelong::kernels::detail
