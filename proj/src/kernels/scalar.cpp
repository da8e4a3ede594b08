#include <cmath>

#include "lelong/kernels.hpp"
#include "segment.hpp"

namespace lelong::kernels::scalar {

double poisson_segment_sum(const double* ys, const double* fs, std::size_t n, double u, double v) {
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i)
    sum += detail::segment_term(ys[i], ys[i + 1], fs[i], fs[i + 1], u, v);
  return sum;
}

RatioPair poisson_ratio_scan(const double* vs, std::size_t nv, const double* ds, std::size_t nd,
                             double lambda, double lo, double hi) {
  RatioPair out;
  for (std::size_t i = 0; i < nv; ++i) {
    for (std::size_t j = 0; j < nd; ++j) {
      detail::accumulate(out.first, detail::poisson_ratio_first(vs[i], ds[j]), lo, hi);
      detail::accumulate(out.second, detail::poisson_ratio_second(vs[i], ds[j], lambda), lo, hi);
    }
  }
  return out;
}

RatioScan interval_kernel_scan(const double* us, std::size_t nu, const double* ys, std::size_t ny,
                               int k, double coefficient) {
  RatioScan out;
  const double a = 2.0 * k * 3.14159265358979323846;
  const double bound = coefficient / a;
  for (std::size_t i = 0; i < nu; ++i) {
    for (std::size_t j = 0; j < ny; ++j) {
      const double d = us[i] - ys[j];
      const double kernel = a / (a * a + d * d);
      const double ratio = kernel / bound;
      if (out.count == 0) {
        out.min = out.max = ratio;
      } else {
        out.min = std::min(out.min, ratio);
        out.max = std::max(out.max, ratio);
      }
      ++out.count;
      if (kernel < bound) ++out.violations;
    }
  }
  return out;
}

}  // namespace lelong::kernels::scalar
