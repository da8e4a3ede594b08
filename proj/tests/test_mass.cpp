#include <doctest.h>

#include <cmath>

#include "lelong/error.hpp"
#include "lelong/mass.hpp"
#include "lelong/theorems.hpp"
#include "oracles.hpp"

using namespace lelong;

namespace {

Current single(const Eigenvalue& l, double m, double a0, double b0) {
  FourierSpec f;
  f.a0 = a0;
  f.b0 = b0;
  return build_current(l, {{m, 1.0, HarmonicSpec::fourier(f)}});
}

Current constant_poisson(const Eigenvalue& l, double m) {
  PoissonSpec p;
  p.boundary.ys = {-1.0, 0.0, 1.0};
  p.boundary.values = {1.0, 1.0, 1.0};
  p.boundary.tail = 1.0;
  return build_current(l, {{m, 1.0, HarmonicSpec::poisson(p)}});
}

const QuadratureConfig kCfg{};

}  // namespace

TEST_SUITE("mass") {

TEST_CASE("unit constant atom at lambda = 1") {
  const Current c = single(Eigenvalue::rational(1, 1), 0.5, 1.0, 0.0);
  const MassResult m = mass_quadrature(c, 1.0, 0, kCfg);
  CHECK(m.value == doctest::Approx(2.5 * kPi).epsilon(1e-12));
  // Midpoint Riemann sum of 2 pi * 2 (e^{-2v} + 0.25 e^{-2v}) on [0, 40] with 10^6 cells.
  const int n = 1000000;
  const double h = 40.0 / n;
  double riemann = 0.0;
  for (int i = 0; i < n; ++i) {
    const double v = (i + 0.5) * h;
    riemann += 2.0 * 1.25 * std::exp(-2.0 * v);
  }
  riemann *= kTwoPi * h;
  CHECK(m.value == doctest::Approx(riemann).epsilon(1e-8));
}

TEST_CASE("empty leaf contributes nothing") {
  const Eigenvalue l = Eigenvalue::negative(-1.0);
  const double m = std::exp(-1.0);
  const Current c = build_current(l, {{m, 1.0, strip_spec_for(l, m, 1.0, 0.0)}});
  CHECK(mass_quadrature(c, 0.5, 0, kCfg).value == 0.0);
  CHECK(mass_closed_form_negative_periodic(c, 0.5) == 0.0);
}

TEST_CASE("window index does not change the mass") {
  for (const auto& cc : periodic_fixtures(42)) {
    const MassResult a = mass_quadrature(cc.current, 0.5, 0, kCfg);
    const MassResult b = mass_quadrature(cc.current, 0.5, 7, kCfg);
    CHECK(std::abs(a.value - b.value) <= 2.0 * (a.error_estimate + b.error_estimate) + 1e-13 * a.value);
  }
}

TEST_CASE("positive closed form examples") {
  const Current c = single(Eigenvalue::rational(1, 1), 0.5, 1.0, 0.0);
  CHECK(mass_closed_form_positive_periodic(c, 1.0) == doctest::Approx(2.5 * kPi));
  CHECK(mass_closed_form_positive_periodic(c, 0.1) == doctest::Approx(0.025 * kPi));
  const double expect_b0 = 0.5 + 0.5 * 0.25 + 1.25 * std::log(10.0);
  CHECK(positive_b0_bracket(1.0, 0.5, 0.1) == doctest::Approx(expect_b0).epsilon(1e-14));
  const Current d = single(Eigenvalue::rational(1, 1), 0.5, 1.0, 1.0);
  const double q = mass_quadrature(d, 0.1, 0, kCfg).value;
  const double cf = mass_closed_form_positive_periodic(d, 0.1);
  CHECK(cf == doctest::Approx(0.01 * kTwoPi * (1.25 + expect_b0)).epsilon(1e-13));
  CHECK(q == doctest::Approx(cf).epsilon(1e-6));
}

TEST_CASE("positive brackets against the defining integral") {
  for (double l : {1.0, 0.5, 2.0 / 3.0, std::sqrt(2.0) - 1.0, 1.0 / kPi})
    for (double m : {0.1, 0.6, 0.95, 1.0, 1.5, 3.0})
      for (double r : {1.0, 0.5, 0.1, 0.01}) {
        const double ref_a = oracle::positive_mass(l, m, r, 1.0, 0.0) / (kTwoPi * r * r);
        const double ref_b = oracle::positive_mass(l, m, r, 0.0, 1.0) / (kTwoPi * r * r);
        CHECK(positive_a0_bracket(l, m, r) == doctest::Approx(ref_a).epsilon(1e-9));
        CHECK(positive_b0_bracket(l, m, r) == doctest::Approx(ref_b).epsilon(1e-9));
      }
}

TEST_CASE("positive closed form needs a periodic Fourier current") {
  const Current p = constant_poisson(Eigenvalue::rational(1, 2), 0.5);
  CHECK_THROWS_AS(mass_closed_form_positive_periodic(p, 0.5), Error);
  CHECK_THROWS_AS(mass_closed_form_positive_periodic(single(Eigenvalue::negative(-0.5), 0.5, 1.0, 0.0), 0.5),
                  Error);
}

TEST_CASE("positive limit") {
  CHECK(positive_lelong_limit(single(Eigenvalue::rational(1, 1), 0.5, 1.0, 0.0)) == doctest::Approx(2.5));
  CHECK(positive_lelong_limit(single(Eigenvalue::rational(1, 1), 2.0, 1.0, 0.0)) == doctest::Approx(2.5));
  CHECK(positive_lelong_limit(single(Eigenvalue::rational(1, 2), 0.5, 1.0, 0.0)) == doctest::Approx(1.0));
  CHECK(std::isinf(positive_lelong_limit(single(Eigenvalue::rational(1, 2), 0.5, 1.0, 0.5))));
}

TEST_CASE("Ia and Ib examples") {
  const double m = std::exp(-1.0);
  CHECK(Ia(-1.0, m, 1.0) == doctest::Approx(1.0 - std::exp(-2.0)).epsilon(1e-14));
  CHECK(Ib(-1.0, m, 1.0) == doctest::Approx(1.0 - std::exp(-2.0)).epsilon(1e-14));
  CHECK(std::abs(Ia(-1.0, m, 0.9) - oracle::ia_integral(-1.0, m, 0.9)) <= 1e-10);
  CHECK(std::abs(Ib(-0.5, 0.1, 1.0) - oracle::ib_integral(-0.5, 0.1, 1.0)) <= 1e-10);
  CHECK(std::abs(Ia(-1.0, m, 1.0) - oracle::ia_integral(-1.0, m, 1.0)) <= 1e-10);
  CHECK(std::abs(Ib(-1.0, m, 1.0) - oracle::ib_integral(-1.0, m, 1.0)) <= 1e-10);
}

TEST_CASE("Ia positive and r^2 Ia, r^2 Ib increasing") {
  for (double l : {-1.0, -0.5, -0.25})
    for (double m : {1e-4, 0.01, 0.2}) {
      double prev_a = 0.0, prev_b = 0.0;
      for (double r = 0.02; r <= 1.0; r += 0.02) {
        if (!(m < std::pow(r, 1.0 - l))) continue;
        const double a = Ia(l, m, r);
        const double b = Ib(l, m, r);
        CHECK(a > 0.0);
        CHECK(r * r * a > prev_a);
        CHECK(r * r * b > prev_b);
        prev_a = r * r * a;
        prev_b = r * r * b;
      }
    }
}

TEST_CASE("Ia and Ib reject bad arguments") {
  CHECK_THROWS_AS(Ia(0.5, 0.1, 0.5), Error);
  CHECK_THROWS_AS(Ia(-1.0, 1.5, 0.5), Error);
  CHECK_THROWS_AS(Ib(-1.0, 0.5, 0.5), Error);
  CHECK_THROWS_AS(Ib(-1.0, 0.1, 1.5), Error);
}

TEST_CASE("negative closed form examples") {
  const Eigenvalue l = Eigenvalue::negative(-1.0);
  const double m = std::exp(-1.0);
  const Current c = build_current(l, {{m, 0.7, strip_spec_for(l, m, 1.0, 0.0)}});
  CHECK(mass_closed_form_negative_periodic(c, 1.0) == doctest::Approx(kTwoPi * Ia(-1.0, m, 1.0) * 0.7));
  CHECK(mass_closed_form_negative_periodic(c, 0.6) == 0.0);
  const Current fam = build_current(l, accumulation_family(l, 4.0, 2.0, 12));
  const double cf = mass_closed_form_negative_periodic(fam, 0.1);
  CHECK(cf > 0.0);
  CHECK(mass_quadrature(fam, 0.1, 0, kCfg).value == doctest::Approx(cf).epsilon(1e-5));
  CHECK_THROWS_AS(mass_closed_form_negative_periodic(single(Eigenvalue::rational(1, 1), 0.5, 1.0, 0.0), 0.5),
                  Error);
}

TEST_CASE("boundary reduction examples") {
  PoissonSpec one;
  one.boundary.ys = {-1.0, 0.0, 1.0};
  one.boundary.values = {1.0, 1.0, 1.0};
  one.boundary.tail = 1.0;
  const double r = std::exp(-2.0);
  CHECK(boundary_reduction_check(1.0, 0.5, one, r, 0.0, kCfg) == doctest::Approx(1.25).epsilon(1e-9));
  CHECK_NOTHROW(boundary_reduction_check(0.5, 0.5, one, std::exp(-2.0), 0.0, kCfg));
  CHECK_THROWS_AS(boundary_reduction_check(0.5, 0.5, one, 0.5, 0.0, kCfg), Error);
  PoissonSpec lin = one;
  lin.c_lin = 1.0;
  CHECK_THROWS_AS(boundary_reduction_check(1.0, 0.5, lin, r, 0.0, kCfg), Error);

  for (double l : {0.3, 0.7, 1.0}) {
    const double cmin = std::min(1.0, l);
    const double cmax = 1.0 + l;
    for (double m : {0.2, 0.9, 2.0}) {
      for (double center : {-1.0, 0.5}) {
        const auto bump = bump_spec(center, kTwoPi, kPi / 16.0).as_poisson();
        for (double rr : {std::exp(-1.0 / l), std::exp(-1.0 / l) * 0.3}) {
          const double ratio = boundary_reduction_check(l, m, bump, rr, 0.2, kCfg);
          CHECK(ratio >= 0.5 * cmin);
          CHECK(ratio <= 2.0 * cmax);
        }
      }
    }
  }
}

TEST_CASE("interval decomposition") {
  for (int k : {2, 3, 5}) {
    for (int n = -6; n < 6; ++n) CHECK(kernel_interval(k, n).hi == doctest::Approx(kernel_interval(k, n + 1).lo));
    for (int n = -6; n <= 6; ++n) {
      const Interval iv = kernel_interval(k, n);
      CHECK(iv.hi - iv.lo == doctest::Approx(n == 0 ? 4.0 * kPi * k - kTwoPi : kTwoPi * k));
    }
  }
  CHECK(interval_coefficient(0) == doctest::Approx(0.5));
  CHECK(interval_coefficient(-3) == interval_coefficient(3));
  CHECK(interval_coefficient_literal(-1) == 1.0);
  CHECK(interval_coefficient_literal(2) == interval_coefficient(2));
}

TEST_CASE("nonperiodic lower bound") {
  const Current c = constant_poisson(Eigenvalue::rational(1, 2), 0.5);
  const double lb = lower_bound_nonperiodic(c, 2, kCfg, 20);
  double sum = 0.0;
  for (int n = -20; n <= 20; ++n) sum += interval_coefficient(n);
  const double iv0 = kernel_interval(2, 0).hi - kernel_interval(2, 0).lo;
  sum += interval_coefficient(0) * (iv0 / (4.0 * kPi) - 1.0);
  CHECK(lb == doctest::Approx(0.5 / kPi * sum).epsilon(1e-13));
  CHECK(lb > 0.0);
  double prev = 0.0;
  for (int nm = 0; nm <= 30; nm += 5) {
    const double x = lower_bound_nonperiodic(c, 3, kCfg, nm);
    CHECK(x > prev);
    prev = x;
  }
  CHECK_THROWS_AS(lower_bound_nonperiodic(c, 1, kCfg), Error);
  CHECK_THROWS_AS(lower_bound_nonperiodic(single(Eigenvalue::rational(1, 1), 0.5, 1.0, 0.0), 2, kCfg), Error);
}

}  // TEST_SUITE
