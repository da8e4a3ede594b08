#pragma once

#include <utility>
#include <vector>

#include "lelong/current.hpp"
#include "lelong/quadrature.hpp"

namespace lelong {

struct Schedule {
  double r_start = 1.0;
  double ratio = 0.5;
  int steps = 12;
};

void validate(const Schedule& schedule);
std::vector<double> schedule_radii(const Schedule& schedule);

// Least-squares fit of nu against -log r.
struct LogSlopeFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

LogSlopeFit fit_log_slope(const std::vector<double>& rs, const std::vector<double>& nus);

inline constexpr double kDivergenceRSquared = 0.99;
inline constexpr double kDivergenceGrowth = 1.5;

struct LelongEstimate {
  std::vector<double> rs;
  std::vector<double> nus;
  std::vector<double> errs;
  // violation[n] is set when nu(r_n) exceeds nu(r_{n-1}) by more than the combined error.
  std::vector<bool> monotone_violation;
  bool monotone_ok = true;
  double limit_estimate = 0.0;
  std::pair<double, double> limit_bracket{0.0, 0.0};
  LogSlopeFit fit;
  double growth = 1.0;  // nu(r_last) / nu(r_first)
  bool diverging = false;
};

LelongEstimate lelong_estimate(const Current& current, const Schedule& schedule,
                               const QuadratureConfig& cfg, long k0 = 0,
                               double divergence_growth = kDivergenceGrowth);

}  // namespace lelong
