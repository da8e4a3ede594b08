#pragma once

#include "lelong/current.hpp"
#include "lelong/quadrature.hpp"

namespace lelong {

struct MassResult {
  double value = 0.0;
  double error_estimate = 0.0;
  double r = 1.0;
};

struct AtomMass {
  double value = 0.0;
  double error = 0.0;
  bool converged = true;
};

// Unweighted integral of H * jacobian over the atom's (u, v)-range inside rD^2.
AtomMass atom_mass(const Eigenvalue& lambda, const TransversalAtom& atom, double r, long k0,
                   const QuadratureConfig& cfg);

MassResult mass_quadrature(const Current& current, double r, long k0, const QuadratureConfig& cfg);

// Per-unit brackets of the positive-lambda closed form: the a0 and b0 parts of
// (1/r^2) int H * jacobian dv over the region of |alpha| at radius r.
double positive_a0_bracket(double lambda, double alpha_modulus, double r);
double positive_b0_bracket(double lambda, double alpha_modulus, double r);

double mass_closed_form_positive_periodic(const Current& current, double r);

// r -> 0 limit of the closed-form nu for positive lambda; +inf when some b0 > 0.
double positive_lelong_limit(const Current& current);

double Ia(double lambda, double alpha_modulus, double r);
double Ib(double lambda, double alpha_modulus, double r);

double mass_closed_form_negative_periodic(const Current& current, double r);

// Height where the leaf meets the boundary of rD^2 in the coordinates the harmonic spec is
// evaluated in (shifted when |alpha| >= 1).
double boundary_height(double lambda, double alpha_modulus, double r);

double boundary_reduction_check(double lambda, double alpha_modulus, const PoissonSpec& spec,
                                double r, double u, const QuadratureConfig& cfg);

struct Interval {
  double lo;
  double hi;
};

// I_0 = [-2k pi + 2 pi, 2k pi), I_N = [2k pi N, 2k pi (N+1)) for N > 0,
// I_N = [2k pi (N-1) + 2 pi, 2k pi N + 2 pi) for N < 0.
Interval kernel_interval(int k, int n);

// Coefficient c_N with 2k pi / ((2k pi)^2 + (u - y)^2) >= c_N / (2k pi) on I_N.
// The literal variant 1/(1 + (N+1)^2) is kept for the lemma report only.
double interval_coefficient(int n);
double interval_coefficient_literal(int n);

inline constexpr int kDefaultIntervalRange = 20;

// (c_min / pi) * sum_{|N| <= n_max} c_N * sum_j w_j int_{I_N} H_j / (2k pi), with
// c_min = min(1, lambda). Whole-leaf atoms integrate their orbit-summed boundary.
double lower_bound_nonperiodic(const Current& current, int k, const QuadratureConfig& cfg,
                               int n_max = kDefaultIntervalRange);

}  // namespace lelong
