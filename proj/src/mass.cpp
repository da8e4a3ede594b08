#include "lelong/mass.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "lelong/error.hpp"
#include "lelong/parallel.hpp"

namespace lelong {

namespace {

void check_radius(double r) {
  if (!(r > 0.0 && r <= 1.0)) throw Error(ErrorKind::Domain, "radius must lie in (0, 1]");
}

// jacobian_density written as 2 (c1 e^{-2v} + c2 e^{-2 lambda v}).
struct JacobianParts {
  double c1;
  double c2;
  double lambda;
  double operator()(double v) const {
    return 2.0 * (c1 * std::exp(-2.0 * v) + c2 * std::exp(-2.0 * lambda * v));
  }
};

JacobianParts jacobian_parts(double lambda, double m) {
  if (m < 1.0) return {1.0, lambda * lambda * m * m, lambda};
  return {std::pow(m, -2.0 / lambda), lambda * lambda, lambda};
}

// Linear bound A + B v for the u-integrated harmonic function.
struct LinearBound {
  double a;
  double b;
};

// int_V^inf (A + B v) e^{-beta v} dv
double exp_tail(const LinearBound& w, double beta, double v) {
  return std::exp(-beta * v) * ((w.a + w.b * v) / beta + w.b / (beta * beta));
}

double jacobian_tail(const LinearBound& w, const JacobianParts& j, double v) {
  return 2.0 * (j.c1 * exp_tail(w, 2.0, v) + j.c2 * exp_tail(w, 2.0 * j.lambda, v));
}

// First v >= lo past which (A + B v) * J(v) is decreasing and below threshold.
double tail_cutoff(const LinearBound& w, const JacobianParts& j, double lo, double threshold) {
  const double beta = 2.0 * std::min(1.0, j.lambda);
  const double step = 0.5 / beta;
  double v = lo;
  const double settle = lo + 1.0 / beta;
  for (int i = 0; i < 100000; ++i) {
    if (v >= settle && (w.a + w.b * v) * j(v) < threshold) break;
    v += step;
  }
  return v;
}

LinearBound spec_bound(const HarmonicSpec& h, double window) {
  if (h.is_fourier()) {
    const auto& f = h.as_fourier();
    double s = f.a0;
    for (const auto& m : f.modes) s += std::abs(m.a) + std::abs(m.b);
    return {window * s, window * f.b0};
  }
  const auto& p = h.as_poisson();
  double top = p.boundary.tail;
  for (double x : p.boundary.values) top = std::max(top, x);
  return {window * top, window * p.c_lin};
}

std::size_t clamp_panels(double count, std::size_t hi) {
  if (!(count >= 1.0)) return 1;
  return std::min<std::size_t>(hi, static_cast<std::size_t>(std::ceil(count)));
}

QuadratureResult u_integral(const TransversalAtom& atom, double v, long k0,
                            const QuadratureConfig& cfg) {
  const HarmonicSpec& h = atom.harmonic;
  const double rel = 0.1 * cfg.rel_tol;
  const double abs = 0.01 * cfg.abs_tol;
  if (atom.support == AtomSupport::WholeLeaf) {
    const auto& bd = h.as_poisson().boundary;
    const double c = 0.5 * (bd.ys.front() + bd.ys.back());
    const double e = 0.5 * (bd.ys.back() - bd.ys.front());
    const double s = e + v;
    const double step = bd.ys[1] - bd.ys[0];
    std::size_t stride = std::max<std::size_t>(1, static_cast<std::size_t>(std::max(step, 0.5 * v) / step));
    stride = std::max(stride, (bd.ys.size() + 127) / 128);
    std::vector<double> bp{-0.5 * kPi};
    for (std::size_t i = 0; i < bd.ys.size(); i += stride) bp.push_back(std::atan((bd.ys[i] - c) / s));
    if (bp.back() < std::atan(e / s)) bp.push_back(std::atan(e / s));
    bp.push_back(0.5 * kPi);
    auto f = [&](double t) -> Estimate {
      const double ct = std::cos(t);
      return {eval(h, c + s * std::tan(t), v) * s / (ct * ct), 0.0};
    };
    return integrate(f, bp, rel, abs, cfg.max_depth);
  }
  const double a = kTwoPi * static_cast<double>(k0);
  const double b = a + kTwoPi;
  std::size_t panels = 2;
  if (h.is_fourier()) {
    const auto& fs = h.as_fourier();
    int kmax = 0;
    for (const auto& m : fs.modes) kmax = std::max(kmax, std::abs(m.k));
    panels = clamp_panels(std::max(2.0, 2.0 * kmax / fs.b), 64);
  } else {
    const auto& bd = h.as_poisson().boundary;
    const double width = std::max(bd.ys[1] - bd.ys[0], 0.5 * v);
    panels = clamp_panels(kTwoPi / width, 64);
  }
  auto f = [&](double u) -> Estimate { return {eval(h, u, v), 0.0}; };
  return integrate(f, uniform_breakpoints(a, b, panels), rel, abs, cfg.max_depth);
}

}  // namespace

AtomMass atom_mass(const Eigenvalue& lambda, const TransversalAtom& atom, double r, long k0,
                   const QuadratureConfig& cfg) {
  validate(cfg);
  check_radius(r);
  const double m = std::abs(atom.alpha);
  const LeafDomain dom = leaf_domain(lambda, m, r);
  if (std::holds_alternative<EmptyDomain>(dom)) return {};

  const double lam = lambda.value();
  const JacobianParts jac = jacobian_parts(lam, m);
  bool inner_ok = true;
  auto g = [&](double v) -> Estimate {
    const QuadratureResult q = u_integral(atom, v, k0, cfg);
    if (!q.converged) inner_ok = false;
    const double jv = jac(v);
    return {q.value * jv, q.error * jv};
  };

  AtomMass out;
  if (const auto* s = std::get_if<Strip>(&dom)) {
    const auto panels = clamp_panels(s->v_max - s->v_min, 64);
    const QuadratureResult q = integrate(g, uniform_breakpoints(s->v_min, s->v_max, panels),
                                         cfg.rel_tol, cfg.abs_tol, cfg.max_depth);
    out = {q.value, q.error, q.converged};
  } else {
    const double lo = std::get<HalfPlane>(dom).v_min - leaf_shift(lambda, m);
    LinearBound w;
    if (atom.support == AtomSupport::WholeLeaf)
      w = {boundary_total(atom.harmonic.as_poisson()), 0.0};
    else
      w = spec_bound(atom.harmonic, kTwoPi);
    const double threshold = cfg.abs_tol * std::pow(10.0, -cfg.v_tail_cutoff_digits);
    const double cut = tail_cutoff(w, jac, lo, threshold);
    const double beta = 2.0 * std::min(1.0, lam);
    const auto panels = clamp_panels((cut - lo) * beta, 64);
    const QuadratureResult q =
        integrate(g, uniform_breakpoints(lo, cut, panels), cfg.rel_tol, cfg.abs_tol, cfg.max_depth);
    out = {q.value, q.error + jacobian_tail(w, jac, cut), q.converged};
  }
  out.converged = out.converged && inner_ok;
  return out;
}

MassResult mass_quadrature(const Current& current, double r, long k0, const QuadratureConfig& cfg) {
  validate(cfg);
  check_radius(r);
  const auto& atoms = current.atoms();
  std::vector<AtomMass> parts(atoms.size());
  parallel_for(atoms.size(), [&](std::size_t i) {
    parts[i] = atom_mass(current.lambda(), atoms[i], r, k0, cfg);
  });
  MassResult out;
  out.r = r;
  bool ok = true;
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    out.value += atoms[i].weight * parts[i].value;
    out.error_estimate += atoms[i].weight * parts[i].error;
    ok = ok && parts[i].converged;
  }
  if (!ok)
    throw QuadratureFailure("mass quadrature did not converge at r = " + std::to_string(r),
                            out.value, out.error_estimate);
  return out;
}

double positive_a0_bracket(double lambda, double m, double r) {
  if (!(lambda > 0.0 && lambda <= 1.0)) throw Error(ErrorKind::Domain, "bracket needs 0 < lambda <= 1");
  if (!(m > 0.0)) throw Error(ErrorKind::Domain, "alpha modulus must be positive");
  check_radius(r);
  if (m < std::pow(r, 1.0 - lambda)) return 1.0 + lambda * m * m * std::pow(r, 2.0 * lambda - 2.0);
  return std::pow(m, -2.0 / lambda) * std::pow(r, 2.0 / lambda - 2.0) + lambda;
}

double positive_b0_bracket(double lambda, double m, double r) {
  if (!(lambda > 0.0 && lambda <= 1.0)) throw Error(ErrorKind::Domain, "bracket needs 0 < lambda <= 1");
  if (!(m > 0.0)) throw Error(ErrorKind::Domain, "alpha modulus must be positive");
  check_radius(r);
  const double lr = std::log(r);
  if (m < std::pow(r, 1.0 - lambda))
    return 0.5 - lr + m * m * std::pow(r, 2.0 * lambda - 2.0) * (0.5 - lambda * lr);
  const double e = std::pow(m, -2.0 / lambda) * std::pow(r, 2.0 / lambda - 2.0);
  if (m < 1.0) {
    const double lm = std::log(m);
    return 0.5 + 0.5 * e - lr + lm + e * (lm - lr) / lambda;
  }
  return 0.5 - lr + e * (0.5 - lr / lambda);
}

namespace {

void require_positive_periodic_fourier(const Current& current) {
  if (!current.lambda().positive())
    throw Error(ErrorKind::UnsupportedCurrent, "closed form needs lambda > 0");
  if (!is_periodic(current)) throw Error(ErrorKind::UnsupportedCurrent, "closed form needs a periodic current");
  for (const auto& a : current.atoms())
    if (!a.harmonic.is_fourier())
      throw Error(ErrorKind::UnsupportedCurrent, "closed form needs Fourier specs");
}

}  // namespace

double mass_closed_form_positive_periodic(const Current& current, double r) {
  require_positive_periodic_fourier(current);
  check_radius(r);
  const double lam = current.lambda().value();
  double sum = 0.0;
  for (const auto& a : current.atoms()) {
    const auto& f = a.harmonic.as_fourier();
    const double m = std::abs(a.alpha);
    double term = f.a0 * positive_a0_bracket(lam, m, r);
    if (f.b0 != 0.0) term += f.b0 * positive_b0_bracket(lam, m, r);
    sum += a.weight * term;
  }
  return r * r * kTwoPi * sum;
}

double positive_lelong_limit(const Current& current) {
  require_positive_periodic_fourier(current);
  const double lam = current.lambda().value();
  double sum = 0.0;
  for (const auto& a : current.atoms()) {
    const auto& f = a.harmonic.as_fourier();
    if (f.b0 > 0.0) return INFINITY;
    const double m = std::abs(a.alpha);
    double ell = lam;
    if (lam == 1.0) ell = m < 1.0 ? 1.0 + m * m : 1.0 + 1.0 / (m * m);
    sum += a.weight * f.a0 * ell;
  }
  return 2.0 * sum;
}

namespace {

void check_negative_args(double lambda, double m, double r) {
  if (!(lambda < 0.0 && lambda >= -1.0)) throw Error(ErrorKind::Domain, "needs -1 <= lambda < 0");
  if (!(m > 0.0 && m < 1.0)) throw Error(ErrorKind::Domain, "needs 0 < |alpha| < 1");
  check_radius(r);
  if (!(m < std::pow(r, 1.0 - lambda)))
    throw Error(ErrorKind::Domain, "needs |alpha| < r^(1 - lambda)");
}

}  // namespace

double Ia(double lambda, double m, double r) {
  check_negative_args(lambda, m, r);
  const double la = std::log(m);
  const double lr = std::log(r);
  const double p = std::pow(m, -2.0 / lambda) * std::pow(r, 2.0 / lambda - 2.0);
  const double q = m * m * std::pow(r, 2.0 * lambda - 2.0);
  return 1.0 + lambda * q +
         (-2.0 * p * lr + lambda * p + 2.0 * lambda * lambda * q * lr - lambda * q) / (2.0 * la);
}

double Ib(double lambda, double m, double r) {
  check_negative_args(lambda, m, r);
  const double la = std::log(m);
  const double lr = std::log(r);
  const double p = std::pow(m, -2.0 / lambda) * std::pow(r, 2.0 / lambda - 2.0);
  const double q = m * m * std::pow(r, 2.0 * lambda - 2.0);
  return 0.5 * (-p * (lambda + 2.0 * la - 2.0 * lr) / lambda + q * (1.0 - 2.0 * lambda * lr) - 2.0 * la);
}

double mass_closed_form_negative_periodic(const Current& current, double r) {
  const Eigenvalue& l = current.lambda();
  if (l.positive()) throw Error(ErrorKind::UnsupportedCurrent, "closed form needs lambda < 0");
  if (!is_periodic(current)) throw Error(ErrorKind::UnsupportedCurrent, "closed form needs a periodic current");
  check_radius(r);
  const double lam = l.value();
  double sum = 0.0;
  for (const auto& a : current.atoms()) {
    if (!a.harmonic.on_strip())
      throw Error(ErrorKind::UnsupportedCurrent, "closed form needs Fourier strip specs");
    const double m = std::abs(a.alpha);
    if (!(m < std::pow(r, 1.0 - lam))) continue;
    const auto& f = a.harmonic.as_fourier();
    double term = f.a0 * Ia(lam, m, r);
    if (f.b0 != 0.0) term += f.b0 * Ib(lam, m, r);
    sum += a.weight * term;
  }
  return r * r * kTwoPi * sum;
}

double boundary_height(double lambda, double m, double r) {
  if (!(lambda > 0.0)) throw Error(ErrorKind::Domain, "boundary height needs lambda > 0");
  const double lr = std::log(r);
  if (m < std::pow(r, 1.0 - lambda)) return -lr;
  if (m < 1.0) return (std::log(m) - lr) / lambda;
  return -lr / lambda;
}

double boundary_reduction_check(double lambda, double m, const PoissonSpec& spec, double r,
                                double u, const QuadratureConfig& cfg) {
  validate(cfg);
  if (!(lambda > 0.0 && lambda <= 1.0)) throw Error(ErrorKind::Domain, "needs 0 < lambda <= 1");
  if (!(m > 0.0)) throw Error(ErrorKind::Domain, "alpha modulus must be positive");
  if (!(r > 0.0 && r <= std::exp(-1.0 / lambda) * (1.0 + 1e-14)))
    throw Error(ErrorKind::Domain, "needs 0 < r <= e^(-1/lambda)");
  if (spec.c_lin != 0.0) throw Error(ErrorKind::Precondition, "reduction needs c_lin = 0");
  const HarmonicSpec h = HarmonicSpec::poisson(spec);
  const JacobianParts jac = jacobian_parts(lambda, m);
  const double vr = boundary_height(lambda, m, r);
  const double top = eval(h, u, vr);
  if (!(top > 0.0)) throw Error(ErrorKind::Domain, "harmonic function vanishes at the boundary height");
  const LinearBound w = spec_bound(h, 1.0);
  const double scale = r * r;
  const double threshold = scale * cfg.abs_tol * std::pow(10.0, -cfg.v_tail_cutoff_digits);
  const double cut = tail_cutoff(w, jac, vr, threshold);
  auto f = [&](double v) -> Estimate { return {eval(h, u, v) * jac(v), 0.0}; };
  const auto panels = clamp_panels((cut - vr) * 2.0 * std::min(1.0, lambda), 64);
  const QuadratureResult q = integrate(f, uniform_breakpoints(vr, cut, panels), cfg.rel_tol,
                                       scale * cfg.abs_tol, cfg.max_depth);
  if (!q.converged) throw QuadratureFailure("boundary reduction quadrature did not converge", q.value, q.error);
  return q.value / scale / top;
}

Interval kernel_interval(int k, int n) {
  const double a = kTwoPi * k;
  if (n == 0) return {-a + kTwoPi, a};
  if (n > 0) return {a * n, a * (n + 1)};
  return {a * (n - 1) + kTwoPi, a * n + kTwoPi};
}

double interval_coefficient(int n) {
  const double m = std::abs(n) + 1.0;
  return 1.0 / (1.0 + m * m);
}

double interval_coefficient_literal(int n) {
  const double m = n + 1.0;
  return 1.0 / (1.0 + m * m);
}

double lower_bound_nonperiodic(const Current& current, int k, const QuadratureConfig&, int n_max) {
  const Eigenvalue& l = current.lambda();
  if (!l.positive()) throw Error(ErrorKind::Precondition, "lower bound needs lambda > 0");
  if (k < 2) throw Error(ErrorKind::Precondition, "lower bound needs k >= 2");
  for (const auto& a : current.atoms())
    if (!a.harmonic.is_poisson() || a.harmonic.as_poisson().c_lin != 0.0)
      throw Error(ErrorKind::Precondition, "lower bound needs Poisson specs with c_lin = 0");
  const double scale = kTwoPi * k;
  double sum = 0.0;
  for (int n = -n_max; n <= n_max; ++n) {
    const Interval iv = kernel_interval(k, n);
    double inner = 0.0;
    for (const auto& a : current.atoms()) {
      const auto& p = a.harmonic.as_poisson();
      const double x = a.support == AtomSupport::WholeLeaf
                           ? boundary_total(p) * (iv.hi - iv.lo) / kTwoPi
                           : boundary_integral(p, iv.lo, iv.hi);
      inner += a.weight * x;
    }
    sum += interval_coefficient(n) * inner / scale;
  }
  return std::min(1.0, l.value()) / kPi * sum;
}

}  // namespace lelong
