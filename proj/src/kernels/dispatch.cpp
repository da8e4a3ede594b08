#include <cstdlib>
#include <cstring>

#include "lelong/kernels.hpp"

namespace lelong::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(LELONG_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  static const bool has = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
  }();
  return has;
#else
  return false;
#endif
}

Isa detect() {
  const char* env = std::getenv("LELONGLAB_SIMD");
  if (env != nullptr && std::strcmp(env, "scalar") == 0) return Isa::Scalar;
  return cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar;
}

}  // namespace

const char* isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

bool isa_available(Isa isa) { return isa == Isa::Scalar || cpu_has_avx2(); }

Isa active_isa() {
  static const Isa isa = detect();
  return isa;
}

#if defined(LELONG_HAVE_AVX2)
#define LELONG_PICK(isa, fn, ...) \
  ((isa) == Isa::Avx2 && isa_available(Isa::Avx2) ? avx2::fn(__VA_ARGS__) : scalar::fn(__VA_ARGS__))
#else
#define LELONG_PICK(isa, fn, ...) scalar::fn(__VA_ARGS__)
#endif

double poisson_segment_sum(Isa isa, const double* ys, const double* fs, std::size_t n, double u,
                           double v) {
  return LELONG_PICK(isa, poisson_segment_sum, ys, fs, n, u, v);
}

RatioPair poisson_ratio_scan(Isa isa, const double* vs, std::size_t nv, const double* ds,
                             std::size_t nd, double lambda, double lo, double hi) {
  return LELONG_PICK(isa, poisson_ratio_scan, vs, nv, ds, nd, lambda, lo, hi);
}

RatioScan interval_kernel_scan(Isa isa, const double* us, std::size_t nu, const double* ys,
                               std::size_t ny, int k, double coefficient) {
  return LELONG_PICK(isa, interval_kernel_scan, us, nu, ys, ny, k, coefficient);
}

#undef LELONG_PICK

}  // namespace lelong::kernels
