#include "lelong/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lelong/error.hpp"
#include "lelong/kernels.hpp"

namespace lelong {

namespace {

void check_finite(double x, const char* what) {
  if (!std::isfinite(x)) throw Error(ErrorKind::InvalidSpec, std::string(what) + " must be finite");
}

void validate(const FourierSpec& s) {
  if (s.b < 1) throw Error(ErrorKind::InvalidSpec, "fourier period multiple b must be >= 1");
  check_finite(s.a0, "a0");
  check_finite(s.b0, "b0");
  if (s.a0 < 0.0 || s.b0 < 0.0) throw Error(ErrorKind::InvalidSpec, "a0 and b0 must be nonnegative");
  if (s.strip_c && !(*s.strip_c > 0.0 && std::isfinite(*s.strip_c)))
    throw Error(ErrorKind::InvalidSpec, "strip height must be positive");
  for (const auto& m : s.modes) {
    if (m.k == 0) throw Error(ErrorKind::InvalidSpec, "fourier mode index must be nonzero");
    check_finite(m.a, "mode coefficient");
    check_finite(m.b, "mode coefficient");
    if (!s.strip_c && m.k > 0)
      throw Error(ErrorKind::InvalidSpec, "growing modes (k > 0) are not allowed on a half-plane");
  }
}

void validate(const PoissonSpec& s) {
  const auto& bd = s.boundary;
  if (bd.ys.size() != bd.values.size())
    throw Error(ErrorKind::InvalidSpec, "boundary ys and values differ in length");
  if (bd.ys.size() < 2) throw Error(ErrorKind::InvalidSpec, "boundary needs at least two samples");
  const double step = (bd.ys.back() - bd.ys.front()) / static_cast<double>(bd.ys.size() - 1);
  if (!(step > 0.0) || !std::isfinite(step))
    throw Error(ErrorKind::InvalidSpec, "boundary grid must be increasing");
  for (std::size_t i = 0; i < bd.ys.size(); ++i) {
    check_finite(bd.ys[i], "boundary abscissa");
    check_finite(bd.values[i], "boundary value");
    if (bd.values[i] < 0.0) throw Error(ErrorKind::InvalidSpec, "boundary values must be nonnegative");
    const double expect = bd.ys.front() + step * static_cast<double>(i);
    if (std::abs(bd.ys[i] - expect) > 1e-9 * std::max(1.0, std::abs(expect)) + 1e-9 * step)
      throw Error(ErrorKind::InvalidSpec, "boundary grid must be uniform");
  }
  check_finite(bd.tail, "boundary tail");
  check_finite(s.c_lin, "c_lin");
  if (bd.tail < 0.0) throw Error(ErrorKind::InvalidSpec, "boundary tail must be nonnegative");
  if (s.c_lin < 0.0) throw Error(ErrorKind::InvalidSpec, "c_lin must be nonnegative");
}

double eval_fourier(const FourierSpec& s, double u, double v) {
  if (v < 0.0) throw Error(ErrorKind::Domain, "v below the harmonic domain");
  double base;
  if (s.strip_c) {
    const double c = *s.strip_c;
    if (v > c * (1.0 + 1e-12)) throw Error(ErrorKind::Domain, "v above the strip");
    base = s.a0 * (1.0 - v / c) + s.b0 * v;
  } else {
    base = s.a0 + s.b0 * v;
  }
  const double bb = static_cast<double>(s.b);
  double sum = 0.0;
  for (const auto& m : s.modes) {
    const double kk = static_cast<double>(m.k) / bb;
    sum += std::exp(kk * v) * (m.a * std::cos(kk * u) + m.b * std::sin(kk * u));
  }
  return base + sum;
}

double eval_poisson(const PoissonSpec& s, double u, double v) {
  if (v < 0.0) throw Error(ErrorKind::Domain, "v below the harmonic domain");
  if (v == 0.0) return boundary_value(s, u);
  const auto& bd = s.boundary;
  const std::size_t n = bd.ys.size();
  double total = kernels::poisson_segment_sum(bd.ys.data(), bd.values.data(), n, u, v);
  if (bd.tail != 0.0)
    total += bd.tail * (std::atan2(v, u - bd.ys.front()) + std::atan2(v, bd.ys.back() - u));
  return total / kPi + s.c_lin * v;
}

}  // namespace

HarmonicSpec HarmonicSpec::fourier(FourierSpec spec) {
  validate(spec);
  return HarmonicSpec(std::move(spec));
}

HarmonicSpec HarmonicSpec::poisson(PoissonSpec spec) {
  validate(spec);
  return HarmonicSpec(std::move(spec));
}

HarmonicSpec HarmonicSpec::constant(double value) {
  FourierSpec s;
  s.a0 = value;
  return fourier(s);
}

HarmonicSpec HarmonicSpec::strip_constant(double value, double c) {
  FourierSpec s;
  s.a0 = value;
  s.strip_c = c;
  return fourier(s);
}

double HarmonicSpec::linear_coefficient() const {
  return is_fourier() ? as_fourier().b0 : as_poisson().c_lin;
}

double HarmonicSpec::mean_level() const {
  return is_fourier() ? as_fourier().a0 : as_poisson().boundary.tail;
}

double eval(const HarmonicSpec& spec, double u, double v) {
  return spec.is_fourier() ? eval_fourier(spec.as_fourier(), u, v)
                           : eval_poisson(spec.as_poisson(), u, v);
}

double laplacian_residual(const HarmonicSpec& spec, double u, double v, double h) {
  if (!(h > 0.0)) throw Error(ErrorKind::Domain, "stencil step must be positive");
  if (v - h < 0.0) throw Error(ErrorKind::Domain, "stencil leaves the domain");
  if (spec.on_strip() && v + h > *spec.as_fourier().strip_c)
    throw Error(ErrorKind::Domain, "stencil leaves the strip");
  const double c = eval(spec, u, v);
  return (eval(spec, u + h, v) + eval(spec, u - h, v) + eval(spec, u, v + h) + eval(spec, u, v - h) -
          4.0 * c) /
         (h * h);
}

bool check_positivity(const HarmonicSpec& spec, int grid_u, int grid_v, double v_cutoff) {
  if (grid_u < 1 || grid_v < 1) return true;
  double u0, u_len, v_top;
  if (spec.is_fourier()) {
    const auto& f = spec.as_fourier();
    u0 = 0.0;
    u_len = kTwoPi * f.b;
    v_top = f.strip_c ? *f.strip_c : v_cutoff;
  } else {
    const auto& bd = spec.as_poisson().boundary;
    const double span = bd.ys.back() - bd.ys.front();
    u0 = bd.ys.front() - 0.25 * span;
    u_len = 1.5 * span;
    v_top = v_cutoff;
  }
  for (int i = 0; i < grid_u; ++i) {
    const double u = u0 + u_len * i / grid_u;
    for (int j = 0; j < grid_v; ++j) {
      const double v = grid_v == 1 ? 0.0 : v_top * j / (grid_v - 1);
      if (eval(spec, u, v) < -1e-12) return false;
    }
  }
  return true;
}

bool has_positivity_certificate(const FourierSpec& spec) {
  double s = 0.0;
  for (const auto& m : spec.modes) s += std::abs(m.a) + std::abs(m.b);
  return s <= spec.a0 * (1.0 + 1e-12);
}

HarmonicSpec normalize(const HarmonicSpec& spec) {
  const double c = eval(spec, 0.0, 0.0);
  if (!(c > 0.0)) throw Error(ErrorKind::DegenerateNormalization, "spec vanishes at the normalization point");
  if (spec.is_fourier()) {
    FourierSpec f = spec.as_fourier();
    f.a0 /= c;
    f.b0 /= c;
    for (auto& m : f.modes) {
      m.a /= c;
      m.b /= c;
    }
    return HarmonicSpec::fourier(std::move(f));
  }
  PoissonSpec p = spec.as_poisson();
  for (auto& x : p.boundary.values) x /= c;
  p.boundary.tail /= c;
  p.c_lin /= c;
  return HarmonicSpec::poisson(std::move(p));
}

HarmonicSpec translate(const HarmonicSpec& spec, double shift) {
  if (spec.is_fourier()) {
    FourierSpec f = spec.as_fourier();
    for (auto& m : f.modes) {
      const double phi = static_cast<double>(m.k) * shift / f.b;
      const double c = std::cos(phi);
      const double s = std::sin(phi);
      const double a = m.a * c + m.b * s;
      const double b = m.b * c - m.a * s;
      m.a = a;
      m.b = b;
    }
    return HarmonicSpec::fourier(std::move(f));
  }
  PoissonSpec p = spec.as_poisson();
  for (auto& y : p.boundary.ys) y -= shift;
  return HarmonicSpec::poisson(std::move(p));
}

bool verify_monodromy_relation(const Eigenvalue&, const HarmonicSpec& spec_alpha,
                               const HarmonicSpec& spec_beta, long k, double tol) {
  if (spec_alpha.on_strip() != spec_beta.on_strip()) return false;
  const double shift = kTwoPi * static_cast<double>(k);
  std::vector<double> vs;
  if (spec_alpha.on_strip()) {
    const double c = std::min(*spec_alpha.as_fourier().strip_c, *spec_beta.as_fourier().strip_c);
    vs = {0.0, 0.25 * c, 0.5 * c, 0.75 * c};
  } else {
    vs = {0.0, 0.25, 1.0, 3.0};
  }
  const double us[] = {-7.0, -kPi, -1.0, 0.0, 0.5, 1.0, kPi, 4.0, 9.0};
  const double scale = eval(spec_alpha, shift, 0.0);
  for (double v : vs) {
    for (double u0 : us) {
      const double u = u0 + shift;
      const double lhs = eval(spec_alpha, u, v);
      const double rhs = scale * eval(spec_beta, u - shift, v);
      if (!(std::abs(lhs - rhs) <= tol)) return false;
    }
  }
  return true;
}

std::optional<int> period_multiple(const HarmonicSpec& spec, int m_max, double tol) {
  if (spec.is_fourier()) return spec.as_fourier().b;
  const auto& p = spec.as_poisson();
  const auto& bd = p.boundary;
  const double lo = bd.ys.front();
  const double hi = bd.ys.back();
  const std::size_t samples = 4 * bd.ys.size() + 16;
  for (int m = 1; m <= m_max; ++m) {
    const double period = kTwoPi * m;
    const double a = lo - period - 1.0;
    const double b = hi + 1.0;
    bool ok = true;
    for (std::size_t i = 0; i < samples && ok; ++i) {
      const double y = a + (b - a) * static_cast<double>(i) / static_cast<double>(samples - 1);
      ok = std::abs(boundary_value(p, y + period) - boundary_value(p, y)) <= tol;
    }
    if (ok) return m;
  }
  return std::nullopt;
}

double envelope(const HarmonicSpec& spec, double v) {
  if (spec.is_fourier()) {
    const auto& f = spec.as_fourier();
    double base = f.a0 + f.b0 * v;
    if (f.strip_c) base = f.a0 * std::max(0.0, 1.0 - v / *f.strip_c) + f.b0 * v;
    double modes = 0.0;
    for (const auto& m : f.modes)
      modes += (std::abs(m.a) + std::abs(m.b)) * std::exp(static_cast<double>(m.k) * v / f.b);
    return base + modes;
  }
  const auto& p = spec.as_poisson();
  double top = p.boundary.tail;
  for (double x : p.boundary.values) top = std::max(top, x);
  return top + p.c_lin * v;
}

double boundary_value(const PoissonSpec& spec, double y) {
  const auto& bd = spec.boundary;
  if (y < bd.ys.front() || y > bd.ys.back()) return bd.tail;
  auto it = std::upper_bound(bd.ys.begin(), bd.ys.end(), y);
  std::size_t i = static_cast<std::size_t>(it - bd.ys.begin());
  if (i == 0) i = 1;
  if (i >= bd.ys.size()) i = bd.ys.size() - 1;
  const double y0 = bd.ys[i - 1];
  const double y1 = bd.ys[i];
  const double t = (y - y0) / (y1 - y0);
  return bd.values[i - 1] + t * (bd.values[i] - bd.values[i - 1]);
}

double boundary_integral(const PoissonSpec& spec, double lo, double hi) {
  if (hi <= lo) return 0.0;
  const auto& bd = spec.boundary;
  double total = 0.0;
  const double left = bd.ys.front();
  const double right = bd.ys.back();
  if (lo < left) total += bd.tail * (std::min(hi, left) - lo);
  if (hi > right) total += bd.tail * (hi - std::max(lo, right));
  for (std::size_t i = 0; i + 1 < bd.ys.size(); ++i) {
    const double a = std::max(lo, bd.ys[i]);
    const double b = std::min(hi, bd.ys[i + 1]);
    if (b <= a) continue;
    total += 0.5 * (b - a) * (boundary_value(spec, a) + boundary_value(spec, b));
  }
  return total;
}

double boundary_total(const PoissonSpec& spec) {
  if (spec.boundary.tail != 0.0)
    throw Error(ErrorKind::Precondition, "whole-line boundary integral needs a zero tail");
  return boundary_integral(spec, spec.boundary.ys.front(), spec.boundary.ys.back());
}

}  // namespace lelong
