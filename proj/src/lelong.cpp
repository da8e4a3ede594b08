#include "lelong/lelong.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lelong/error.hpp"
#include "lelong/mass.hpp"
#include "lelong/parallel.hpp"

namespace lelong {

void validate(const Schedule& s) {
  if (!(s.r_start > 0.0 && s.r_start <= 1.0)) throw Error(ErrorKind::Domain, "r_start must lie in (0, 1]");
  if (!(s.ratio > 0.0 && s.ratio < 1.0)) throw Error(ErrorKind::Domain, "ratio must lie in (0, 1)");
  if (s.steps < 1) throw Error(ErrorKind::Domain, "steps must be positive");
}

std::vector<double> schedule_radii(const Schedule& s) {
  validate(s);
  std::vector<double> rs(static_cast<std::size_t>(s.steps));
  for (int n = 0; n < s.steps; ++n) rs[static_cast<std::size_t>(n)] = s.r_start * std::pow(s.ratio, n);
  return rs;
}

LogSlopeFit fit_log_slope(const std::vector<double>& rs, const std::vector<double>& nus) {
  LogSlopeFit fit;
  const std::size_t n = std::min(rs.size(), nus.size());
  if (n < 2) return fit;
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += -std::log(rs[i]);
    my += nus[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = -std::log(rs[i]) - mx;
    const double dy = nus[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  if (sxx <= 0.0) return fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  // A flat sequence has no trend to explain.
  const double scale = std::max(std::abs(my), 1e-300);
  if (syy <= 1e-24 * scale * scale * static_cast<double>(n)) {
    fit.r_squared = 0.0;
  } else {
    double ss_res = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double e = nus[i] - (fit.intercept + fit.slope * -std::log(rs[i]));
      ss_res += e * e;
    }
    fit.r_squared = 1.0 - ss_res / syy;
  }
  return fit;
}

LelongEstimate lelong_estimate(const Current& current, const Schedule& schedule,
                               const QuadratureConfig& cfg, long k0, double divergence_growth) {
  validate(cfg);
  LelongEstimate est;
  est.rs = schedule_radii(schedule);
  const auto& atoms = current.atoms();
  const std::size_t na = atoms.size();
  const std::size_t ns = est.rs.size();

  std::vector<AtomMass> parts(na * ns);
  parallel_for(na * ns, [&](std::size_t t) {
    const std::size_t n = t / na;
    const std::size_t j = t % na;
    parts[t] = atom_mass(current.lambda(), atoms[j], est.rs[n], k0, cfg);
  });

  est.nus.resize(ns);
  est.errs.resize(ns);
  for (std::size_t n = 0; n < ns; ++n) {
    double m = 0.0, e = 0.0;
    bool ok = true;
    for (std::size_t j = 0; j < na; ++j) {
      const AtomMass& p = parts[n * na + j];
      m += atoms[j].weight * p.value;
      e += atoms[j].weight * p.error;
      ok = ok && p.converged;
    }
    const double area = kPi * est.rs[n] * est.rs[n];
    if (!ok)
      throw QuadratureFailure("mass quadrature did not converge at r = " + std::to_string(est.rs[n]),
                              m / area, e / area);
    est.nus[n] = m / area;
    est.errs[n] = e / area;
  }

  est.monotone_violation.assign(ns, false);
  for (std::size_t n = 1; n < ns; ++n) {
    if (est.nus[n] > est.nus[n - 1] + est.errs[n] + est.errs[n - 1]) {
      est.monotone_violation[n] = true;
      est.monotone_ok = false;
    }
  }

  const double last = est.nus.back();
  const double last_err = est.errs.back();
  est.limit_estimate = std::max(0.0, last);
  const double lower = std::max(0.0, last - last_err);
  double upper = last + last_err;
  if (ns >= 2) upper = std::max(upper, est.nus[ns - 2] + est.errs[ns - 2]);
  est.limit_bracket = {std::min(lower, est.limit_estimate), std::max(upper, est.limit_estimate)};

  est.fit = fit_log_slope(est.rs, est.nus);
  est.growth = est.nus.front() > 0.0 ? last / est.nus.front() : (last > 0.0 ? INFINITY : 1.0);
  est.diverging = est.fit.slope > 0.0 && est.fit.r_squared > kDivergenceRSquared &&
                  est.growth > divergence_growth;
  return est;
}

}  // namespace lelong
