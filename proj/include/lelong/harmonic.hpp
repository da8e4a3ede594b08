#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "lelong/foliation.hpp"

namespace lelong {

struct FourierMode {
  int k = 0;
  double a = 0.0;
  double b = 0.0;
  bool operator==(const FourierMode&) const = default;
};

// sum_k e^{kv/b}(a_k cos(ku/b) + b_k sin(ku/b)) + a0 + b0 v on the half-plane v >= 0,
// or + a0 (1 - v/C) + b0 v on the strip 0 <= v <= C.
struct FourierSpec {
  int b = 1;
  double a0 = 0.0;
  double b0 = 0.0;
  std::vector<FourierMode> modes;
  std::optional<double> strip_c;
  bool operator==(const FourierSpec&) const = default;
};

// Nonnegative boundary samples on a uniform grid, constant tail outside it.
struct PoissonBoundary {
  std::vector<double> ys;
  std::vector<double> values;
  double tail = 0.0;
  bool operator==(const PoissonBoundary&) const = default;
};

// Poisson extension of the piecewise-linear boundary interpolant plus c_lin * v.
struct PoissonSpec {
  PoissonBoundary boundary;
  double c_lin = 0.0;
  bool operator==(const PoissonSpec&) const = default;
};

class HarmonicSpec {
 public:
  static HarmonicSpec fourier(FourierSpec spec);
  static HarmonicSpec poisson(PoissonSpec spec);
  static HarmonicSpec constant(double value);
  static HarmonicSpec strip_constant(double value, double c);

  bool is_fourier() const { return std::holds_alternative<FourierSpec>(data_); }
  bool is_poisson() const { return std::holds_alternative<PoissonSpec>(data_); }
  const FourierSpec& as_fourier() const { return std::get<FourierSpec>(data_); }
  const PoissonSpec& as_poisson() const { return std::get<PoissonSpec>(data_); }

  bool on_strip() const { return is_fourier() && as_fourier().strip_c.has_value(); }
  // Coefficient of the linear-in-v term: b0 or c_lin.
  double linear_coefficient() const;
  // Constant mean level: a0 for Fourier, boundary tail for Poisson.
  double mean_level() const;

  bool operator==(const HarmonicSpec&) const = default;

 private:
  explicit HarmonicSpec(std::variant<FourierSpec, PoissonSpec> data) : data_(std::move(data)) {}
  std::variant<FourierSpec, PoissonSpec> data_;
};

double eval(const HarmonicSpec& spec, double u, double v);

double laplacian_residual(const HarmonicSpec& spec, double u, double v, double h);

inline constexpr double kPositivityCutoff = 50.0;

bool check_positivity(const HarmonicSpec& spec, int grid_u, int grid_v,
                      double v_cutoff = kPositivityCutoff);

// Sufficient half-plane positivity condition: sum |a_k| + |b_k| <= a0.
bool has_positivity_certificate(const FourierSpec& spec);

HarmonicSpec normalize(const HarmonicSpec& spec);

// The harmonic spec of (u, v) -> H(u + shift, v).
HarmonicSpec translate(const HarmonicSpec& spec, double shift);

bool verify_monodromy_relation(const Eigenvalue& lambda, const HarmonicSpec& spec_alpha,
                               const HarmonicSpec& spec_beta, long k, double tol);

// Least m with H(u + 2 pi m, v) = H(u, v): declared b for Fourier, numeric scan for Poisson.
std::optional<int> period_multiple(const HarmonicSpec& spec, int m_max = 64, double tol = 1e-8);

// Upper bound for sup_u |H(u, v)|.
double envelope(const HarmonicSpec& spec, double v);

// Boundary interpolant (with tails) at y.
double boundary_value(const PoissonSpec& spec, double y);
// Exact integral of the boundary interpolant (with tails) over [lo, hi].
double boundary_integral(const PoissonSpec& spec, double lo, double hi);
// Integral over the whole line; requires a zero tail.
double boundary_total(const PoissonSpec& spec);

}  // namespace lelong
