#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace lelong {

struct QuadratureConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-15;
  int max_depth = 30;
  // Half-plane truncation: stop once the integrand envelope drops below
  // abs_tol * 10^-digits, then bound the exponential tail analytically.
  double v_tail_cutoff_digits = 2.0;
};

void validate(const QuadratureConfig& cfg);

// A value together with an error already carried by it (e.g. from an inner integral).
struct Estimate {
  double value = 0.0;
  double error = 0.0;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  bool converged = false;
  std::size_t evaluations = 0;
};

using Integrand = std::function<Estimate(double)>;

// Globally adaptive Gauss-Kronrod (7/15) over consecutive panels given by breakpoints.
// Error per panel is |K15 - G7| plus a roundoff floor plus propagated integrand error.
// Panels are never bisected more than max_depth times.
QuadratureResult integrate(const Integrand& f, const std::vector<double>& breakpoints,
                           double rel_tol, double abs_tol, int max_depth);

QuadratureResult integrate(const Integrand& f, double a, double b, double rel_tol, double abs_tol,
                           int max_depth);

std::vector<double> uniform_breakpoints(double a, double b, std::size_t panels);

}  // namespace lelong
