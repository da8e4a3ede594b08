#include <immintrin.h>

#include <cfloat>
#include <cmath>
#include <cstdint>

#include "lelong/kernels.hpp"
#include "segment.hpp"

namespace lelong::kernels::avx2 {

namespace {

inline __m256d set1(double x) { return _mm256_set1_pd(x); }

inline __m256d vabs(__m256d x) { return _mm256_andnot_pd(_mm256_set1_pd(-0.0), x); }

inline double hsum(__m256d x) {
  __m128d lo = _mm256_castpd256_pd128(x);
  __m128d hi = _mm256_extractf128_pd(x, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d sh = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

inline double hmin(__m256d x) {
  __m128d lo = _mm256_castpd256_pd128(x);
  __m128d hi = _mm256_extractf128_pd(x, 1);
  lo = _mm_min_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_min_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

inline double hmax(__m256d x) {
  __m128d lo = _mm256_castpd256_pd128(x);
  __m128d hi = _mm256_extractf128_pd(x, 1);
  lo = _mm_max_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_max_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

// Cephes-style arctangent, full double accuracy.
__m256d atan_pd(__m256d x) {
  const __m256d sign = _mm256_and_pd(x, set1(-0.0));
  const __m256d ax = vabs(x);
  const __m256d big = _mm256_cmp_pd(ax, set1(2.41421356237309504880), _CMP_GT_OQ);
  const __m256d mid = _mm256_andnot_pd(big, _mm256_cmp_pd(ax, set1(0.66), _CMP_GT_OQ));

  const __m256d xb = _mm256_div_pd(set1(-1.0), ax);
  const __m256d xm = _mm256_div_pd(_mm256_sub_pd(ax, set1(1.0)), _mm256_add_pd(ax, set1(1.0)));
  __m256d xr = _mm256_blendv_pd(ax, xm, mid);
  xr = _mm256_blendv_pd(xr, xb, big);

  const double morebits = 6.123233995736765886130e-17;
  __m256d y0 = _mm256_blendv_pd(_mm256_setzero_pd(), set1(0.78539816339744830962), mid);
  y0 = _mm256_blendv_pd(y0, set1(1.57079632679489661923), big);
  __m256d extra = _mm256_blendv_pd(_mm256_setzero_pd(), set1(0.5 * morebits), mid);
  extra = _mm256_blendv_pd(extra, set1(morebits), big);

  const __m256d z = _mm256_mul_pd(xr, xr);
  __m256d p = set1(-8.750608600031904122785e-1);
  p = _mm256_fmadd_pd(p, z, set1(-1.615753718733365076637e1));
  p = _mm256_fmadd_pd(p, z, set1(-7.500855792314704667340e1));
  p = _mm256_fmadd_pd(p, z, set1(-1.228866684490136173410e2));
  p = _mm256_fmadd_pd(p, z, set1(-6.485021904942025371773e1));
  __m256d q = _mm256_add_pd(z, set1(2.485846490142306297962e1));
  q = _mm256_fmadd_pd(q, z, set1(1.650270098316988542046e2));
  q = _mm256_fmadd_pd(q, z, set1(4.328810604912902668951e2));
  q = _mm256_fmadd_pd(q, z, set1(4.853903996359136964868e2));
  q = _mm256_fmadd_pd(q, z, set1(1.945506571482613964425e2));

  __m256d r = _mm256_div_pd(_mm256_mul_pd(z, p), q);
  r = _mm256_fmadd_pd(xr, r, xr);
  r = _mm256_add_pd(r, extra);
  r = _mm256_add_pd(y0, r);
  return _mm256_xor_pd(r, sign);
}

// atan2(y, x) for y > 0.
__m256d atan2_pos_pd(__m256d y, __m256d x) {
  const __m256d a = atan_pd(_mm256_div_pd(y, x));
  const __m256d neg = _mm256_and_pd(x, set1(-0.0));
  const __m256d negmask = _mm256_castsi256_pd(
      _mm256_cmpeq_epi64(_mm256_castpd_si256(neg), _mm256_castpd_si256(set1(-0.0))));
  return _mm256_add_pd(a, _mm256_and_pd(negmask, set1(3.14159265358979323846)));
}

// Cephes-style natural log for positive normal inputs.
__m256d log_pd(__m256d x) {
  const __m256i bits = _mm256_castpd_si256(x);
  const __m256i expo = _mm256_srli_epi64(bits, 52);
  const __m256i mant_bits = _mm256_or_si256(
      _mm256_and_si256(bits, _mm256_set1_epi64x(0x000fffffffffffffLL)),
      _mm256_set1_epi64x(0x3fe0000000000000LL));
  __m256d m = _mm256_castsi256_pd(mant_bits);
  const __m256d two52 = set1(4503599627370496.0);
  __m256d e = _mm256_sub_pd(
      _mm256_castsi256_pd(_mm256_or_si256(expo, _mm256_castpd_si256(two52))), two52);
  e = _mm256_sub_pd(e, set1(1022.0));

  const __m256d small = _mm256_cmp_pd(m, set1(0.70710678118654752440), _CMP_LT_OQ);
  e = _mm256_sub_pd(e, _mm256_and_pd(small, set1(1.0)));
  const __m256d xs = _mm256_sub_pd(_mm256_add_pd(m, m), set1(1.0));
  const __m256d xl = _mm256_sub_pd(m, set1(1.0));
  const __m256d xm = _mm256_blendv_pd(xl, xs, small);

  const __m256d z = _mm256_mul_pd(xm, xm);
  __m256d p = set1(1.01875663804580931796e-4);
  p = _mm256_fmadd_pd(p, xm, set1(4.97494994976747001425e-1));
  p = _mm256_fmadd_pd(p, xm, set1(4.70579119878881725854e0));
  p = _mm256_fmadd_pd(p, xm, set1(1.44989225341610930846e1));
  p = _mm256_fmadd_pd(p, xm, set1(1.79368678507819816313e1));
  p = _mm256_fmadd_pd(p, xm, set1(7.70838733755885391666e0));
  __m256d q = _mm256_add_pd(xm, set1(1.12873587189167450590e1));
  q = _mm256_fmadd_pd(q, xm, set1(4.52279145837532221105e1));
  q = _mm256_fmadd_pd(q, xm, set1(8.29875266912776603211e1));
  q = _mm256_fmadd_pd(q, xm, set1(7.11544750618563894466e1));
  q = _mm256_fmadd_pd(q, xm, set1(2.31251620126765340583e1));

  __m256d y = _mm256_mul_pd(xm, _mm256_div_pd(_mm256_mul_pd(z, p), q));
  y = _mm256_fnmadd_pd(e, set1(2.121944400546905827679e-4), y);
  y = _mm256_fnmadd_pd(set1(0.5), z, y);
  __m256d r = _mm256_add_pd(xm, y);
  return _mm256_fmadd_pd(e, set1(0.693359375), r);
}

}  // namespace

double poisson_segment_sum(const double* ys, const double* fs, std::size_t n, double u, double v) {
  if (n < 2) return 0.0;
  const std::size_t segments = n - 1;
  const __m256d vu = set1(u);
  const __m256d vv = set1(v);
  const __m256d v2 = set1(v * v);
  const __m256d half_v = set1(0.5 * v);
  const __m256d tiny = set1(DBL_MIN);
  const __m256d ratio = set1(kFarFieldRatio);
  const __m256d gx0 = set1(detail::kGaussX0);
  const __m256d gx1 = set1(detail::kGaussX1);
  const __m256d gx2 = set1(detail::kGaussX2);
  const __m256d gw0x0 = set1(detail::kGaussW0 * detail::kGaussX0);
  const __m256d gw1x1 = set1(detail::kGaussW1 * detail::kGaussX1);
  const __m256d gw0x2 = set1(detail::kGaussW0 * detail::kGaussX2);

  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= segments; i += 4) {
    const __m256d y0 = _mm256_loadu_pd(ys + i);
    const __m256d y1 = _mm256_loadu_pd(ys + i + 1);
    const __m256d f0 = _mm256_loadu_pd(fs + i);
    const __m256d f1 = _mm256_loadu_pd(fs + i + 1);
    const __m256d h = _mm256_sub_pd(y1, y0);
    const __m256d t0 = _mm256_sub_pd(y0, vu);
    const __m256d t1 = _mm256_sub_pd(y1, vu);
    const __m256d s = _mm256_div_pd(_mm256_sub_pd(f1, f0), h);
    const __m256d dtheta = atan2_pos_pd(_mm256_mul_pd(h, vv), _mm256_fmadd_pd(t0, t1, v2));

    const __m256d sq0 = _mm256_mul_pd(t0, t0);
    const __m256d sq1 = _mm256_mul_pd(t1, t1);
    const __m256d rho2 = _mm256_add_pd(v2, _mm256_min_pd(sq0, sq1));
    const __m256d lim = _mm256_mul_pd(ratio, h);
    const __m256d far = _mm256_cmp_pd(rho2, _mm256_mul_pd(lim, lim), _CMP_GE_OQ);

    // near field: closed form
    const __m256d n0 = _mm256_max_pd(_mm256_add_pd(v2, sq0), tiny);
    const __m256d n1 = _mm256_max_pd(_mm256_add_pd(v2, sq1), tiny);
    const __m256d g_near =
        _mm256_fnmadd_pd(t0, dtheta, _mm256_mul_pd(half_v, log_pd(_mm256_div_pd(n1, n0))));

    // far field: 3-point Gauss on the moment integral
    const __m256d a = _mm256_fmadd_pd(h, gx0, t0);
    const __m256d b = _mm256_fmadd_pd(h, gx1, t0);
    const __m256d c = _mm256_fmadd_pd(h, gx2, t0);
    __m256d gs = _mm256_div_pd(gw0x0, _mm256_fmadd_pd(a, a, v2));
    gs = _mm256_add_pd(gs, _mm256_div_pd(gw1x1, _mm256_fmadd_pd(b, b, v2)));
    gs = _mm256_add_pd(gs, _mm256_div_pd(gw0x2, _mm256_fmadd_pd(c, c, v2)));
    const __m256d g_far = _mm256_mul_pd(_mm256_mul_pd(_mm256_mul_pd(h, h), vv), gs);

    const __m256d g = _mm256_blendv_pd(g_near, g_far, far);
    acc = _mm256_add_pd(acc, _mm256_fmadd_pd(f0, dtheta, _mm256_mul_pd(s, g)));
  }
  double sum = hsum(acc);
  for (; i < segments; ++i) sum += detail::segment_term(ys[i], ys[i + 1], fs[i], fs[i + 1], u, v);
  return sum;
}

RatioPair poisson_ratio_scan(const double* vs, std::size_t nv, const double* ds, std::size_t nd,
                             double lambda, double lo, double hi) {
  RatioPair out;
  if (nv == 0 || nd == 0) return out;
  const __m256d vlo = set1(lo);
  const __m256d vhi = set1(hi);
  const __m256d half = set1(0.5);
  const __m256d c2 = set1(-1.0 / (2.0 * lambda));
  __m256d min1 = set1(INFINITY), max1 = set1(-INFINITY);
  __m256d min2 = set1(INFINITY), max2 = set1(-INFINITY);
  std::size_t bad1 = 0, bad2 = 0;
  for (std::size_t i = 0; i < nv; ++i) {
    const double v = vs[i];
    const __m256d vv = set1(v);
    const __m256d v2 = set1(v * v);
    const __m256d m2v2 = set1(v * (-2.0 * v));
    std::size_t j = 0;
    for (; j + 4 <= nd; j += 4) {
      const __m256d d = _mm256_loadu_pd(ds + j);
      const __m256d q = _mm256_fmadd_pd(d, d, v2);
      const __m256d p = _mm256_div_pd(vv, q);
      const __m256d iq = _mm256_div_pd(set1(1.0), q);
      const __m256d cross = _mm256_div_pd(m2v2, _mm256_mul_pd(q, q));
      __m256d r1 = _mm256_sub_pd(p, _mm256_mul_pd(half, iq));
      r1 = _mm256_fnmadd_pd(half, cross, r1);
      r1 = _mm256_div_pd(r1, p);
      __m256d r2 = _mm256_fmadd_pd(c2, iq, p);
      r2 = _mm256_fmadd_pd(c2, cross, r2);
      r2 = _mm256_div_pd(r2, p);
      min1 = _mm256_min_pd(min1, r1);
      max1 = _mm256_max_pd(max1, r1);
      min2 = _mm256_min_pd(min2, r2);
      max2 = _mm256_max_pd(max2, r2);
      const __m256d ok1 = _mm256_and_pd(_mm256_cmp_pd(r1, vlo, _CMP_GT_OQ), _mm256_cmp_pd(r1, vhi, _CMP_LT_OQ));
      const __m256d ok2 = _mm256_and_pd(_mm256_cmp_pd(r2, vlo, _CMP_GT_OQ), _mm256_cmp_pd(r2, vhi, _CMP_LT_OQ));
      bad1 += 4 - static_cast<std::size_t>(__builtin_popcount(_mm256_movemask_pd(ok1)));
      bad2 += 4 - static_cast<std::size_t>(__builtin_popcount(_mm256_movemask_pd(ok2)));
    }
    for (; j < nd; ++j) {
      const double r1 = detail::poisson_ratio_first(v, ds[j]);
      const double r2 = detail::poisson_ratio_second(v, ds[j], lambda);
      min1 = _mm256_min_pd(min1, set1(r1));
      max1 = _mm256_max_pd(max1, set1(r1));
      min2 = _mm256_min_pd(min2, set1(r2));
      max2 = _mm256_max_pd(max2, set1(r2));
      if (!(r1 > lo && r1 < hi)) ++bad1;
      if (!(r2 > lo && r2 < hi)) ++bad2;
    }
  }
  out.first = {nv * nd, bad1, hmin(min1), hmax(max1)};
  out.second = {nv * nd, bad2, hmin(min2), hmax(max2)};
  return out;
}

RatioScan interval_kernel_scan(const double* us, std::size_t nu, const double* ys, std::size_t ny,
                               int k, double coefficient) {
  RatioScan out;
  if (nu == 0 || ny == 0) return out;
  const double a = 2.0 * k * 3.14159265358979323846;
  const double bound = coefficient / a;
  const __m256d va = set1(a);
  const __m256d a2 = set1(a * a);
  const __m256d vb = set1(bound);
  __m256d mn = set1(INFINITY), mx = set1(-INFINITY);
  std::size_t bad = 0;
  for (std::size_t i = 0; i < nu; ++i) {
    const __m256d u = set1(us[i]);
    std::size_t j = 0;
    for (; j + 4 <= ny; j += 4) {
      const __m256d d = _mm256_sub_pd(u, _mm256_loadu_pd(ys + j));
      const __m256d kernel = _mm256_div_pd(va, _mm256_fmadd_pd(d, d, a2));
      const __m256d ratio = _mm256_div_pd(kernel, vb);
      mn = _mm256_min_pd(mn, ratio);
      mx = _mm256_max_pd(mx, ratio);
      bad += static_cast<std::size_t>(
          __builtin_popcount(_mm256_movemask_pd(_mm256_cmp_pd(kernel, vb, _CMP_LT_OQ))));
    }
    for (; j < ny; ++j) {
      const double d = us[i] - ys[j];
      const double kernel = a / (a * a + d * d);
      mn = _mm256_min_pd(mn, set1(kernel / bound));
      mx = _mm256_max_pd(mx, set1(kernel / bound));
      if (kernel < bound) ++bad;
    }
  }
  out.count = nu * ny;
  out.violations = bad;
  out.min = hmin(mn);
  out.max = hmax(mx);
  return out;
}

}  // namespace lelong::kernels::avx2
