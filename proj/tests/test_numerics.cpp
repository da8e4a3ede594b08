#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <random>

#include "lelong/error.hpp"
#include "lelong/kernels.hpp"
#include "lelong/parallel.hpp"
#include "lelong/quadrature.hpp"
#include "oracles.hpp"

using namespace lelong;
namespace k = lelong::kernels;

TEST_SUITE("numerics") {

TEST_CASE("gauss-kronrod on smooth and peaked integrands") {
  auto f = [](double x) -> Estimate { return {std::exp(-x) * std::cos(3.0 * x), 0.0}; };
  const auto q = integrate(f, 0.0, 10.0, 1e-12, 1e-15, 30);
  const double exact = (1.0 - std::exp(-10.0) * (std::cos(30.0) - 3.0 * std::sin(30.0))) / 10.0;
  CHECK(q.converged);
  CHECK(std::abs(q.value - exact) <= 1e-12);
  CHECK(q.error >= 0.0);

  auto peak = [](double x) -> Estimate { return {1e-3 / (1e-6 + x * x), 0.0}; };
  const auto p = integrate(peak, -1.0, 1.0, 1e-10, 1e-15, 40);
  CHECK(p.converged);
  CHECK(p.value == doctest::Approx(2.0 * std::atan(1e3)).epsilon(1e-10));
}

TEST_CASE("breakpoints and carried error") {
  auto kink = [](double x) -> Estimate { return {std::abs(x - 0.3), 1e-14}; };
  const auto q = integrate(kink, {0.0, 0.3, 1.0}, 1e-12, 1e-15, 30);
  CHECK(q.value == doctest::Approx(0.5 * (0.09 + 0.49)).epsilon(1e-13));
  CHECK(q.error >= 1e-14);
  const auto bp = uniform_breakpoints(0.0, 1.0, 4);
  CHECK(bp.size() == 5);
  CHECK(bp.back() == 1.0);
}

TEST_CASE("depth limit reports non-convergence") {
  auto jumpy = [](double x) -> Estimate { return {x < 0.123456789 ? 0.0 : 1.0, 0.0}; };
  const auto q = integrate(jumpy, 0.0, 1.0, 1e-15, 1e-300, 3);
  CHECK_FALSE(q.converged);
}

TEST_CASE("quadrature config validation") {
  QuadratureConfig c;
  CHECK_NOTHROW(validate(c));
  c.rel_tol = 0.0;
  CHECK_THROWS_AS(validate(c), Error);
  c = {};
  c.max_depth = 0;
  CHECK_THROWS_AS(validate(c), Error);
}

TEST_CASE("poisson segment kernel matches an independent integral") {
  std::vector<double> ys, fs;
  for (int i = 0; i <= 40; ++i) {
    ys.push_back(-3.0 + 0.15 * i);
    fs.push_back(1.0 + std::sin(0.7 * ys.back()));
  }
  auto lin = [&](double y) {
    const std::size_t i = std::min<std::size_t>(39, static_cast<std::size_t>((y + 3.0) / 0.15));
    const double t = (y - ys[i]) / 0.15;
    return fs[i] + t * (fs[i + 1] - fs[i]);
  };
  for (double u : {-10.0, -3.0, 0.01, 2.9, 50.0})
    for (double v : {1e-3, 0.05, 1.0, 30.0, 1e3}) {
      double ref = 0.0;
      for (int i = 0; i < 40; ++i) ref += oracle::poisson_bulk(lin, ys[i], ys[i + 1], u, v);
      const double got = k::scalar::poisson_segment_sum(ys.data(), fs.data(), ys.size(), u, v) / kPi;
      CHECK(got == doctest::Approx(ref).epsilon(1e-9));
    }
}

TEST_CASE("simd kernels agree with the scalar reference") {
  if (!k::isa_available(k::Isa::Avx2)) {
    MESSAGE("AVX2 not available; scalar path only");
    return;
  }
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  for (std::size_t n : {2u, 3u, 5u, 8u, 9u, 17u, 256u, 1001u}) {
    std::vector<double> ys(n), fs(n);
    for (std::size_t i = 0; i < n; ++i) {
      ys[i] = -5.0 + 10.0 * static_cast<double>(i) / static_cast<double>(n - 1);
      fs[i] = 1.5 + uni(gen);
    }
    for (int t = 0; t < 25; ++t) {
      const double u = 8.0 * uni(gen);
      const double v = std::pow(10.0, 3.0 * uni(gen));
      const double a = k::scalar::poisson_segment_sum(ys.data(), fs.data(), n, u, v);
      const double b = k::avx2::poisson_segment_sum(ys.data(), fs.data(), n, u, v);
      CHECK(std::abs(a - b) <= 1e-13 * std::max(1.0, std::abs(a)));
    }
  }
  std::vector<double> vs, ds;
  for (int i = 0; i < 37; ++i) vs.push_back(1.0 + 0.55 * i);
  for (int i = 0; i < 101; ++i) ds.push_back(i * 0.99);
  for (double lam : {0.3, 0.7, 1.0}) {
    const auto a = k::scalar::poisson_ratio_scan(vs.data(), vs.size(), ds.data(), ds.size(), lam, 0.5, 2.0);
    const auto b = k::avx2::poisson_ratio_scan(vs.data(), vs.size(), ds.data(), ds.size(), lam, 0.5, 2.0);
    CHECK(a.first.count == b.first.count);
    CHECK(a.first.violations == b.first.violations);
    CHECK(a.second.violations == b.second.violations);
    CHECK(a.first.min == doctest::Approx(b.first.min).epsilon(1e-13));
    CHECK(a.second.max == doctest::Approx(b.second.max).epsilon(1e-13));
  }
  std::vector<double> us, yy;
  for (int i = 1; i < 30; ++i) us.push_back(kTwoPi * i / 30.0);
  for (int i = 0; i < 45; ++i) yy.push_back(-40.0 + 2.0 * i);
  for (int kk : {2, 3, 5}) {
    const auto a = k::scalar::interval_kernel_scan(us.data(), us.size(), yy.data(), yy.size(), kk, 0.2);
    const auto b = k::avx2::interval_kernel_scan(us.data(), us.size(), yy.data(), yy.size(), kk, 0.2);
    CHECK(a.count == b.count);
    CHECK(a.violations == b.violations);
    CHECK(a.min == doctest::Approx(b.min).epsilon(1e-14));
  }
}

TEST_CASE("dispatch honours the scalar override") {
  CHECK(k::isa_available(k::Isa::Scalar));
  CHECK(std::string(k::isa_name(k::Isa::Scalar)) == "scalar");
  const char* env = std::getenv("LELONGLAB_SIMD");
  if (env && std::string(env) == "scalar") CHECK(k::active_isa() == k::Isa::Scalar);
}

TEST_CASE("parallel for covers every index and rethrows in order") {
  std::vector<int> hit(1000, 0);
  parallel_for(hit.size(), [&](std::size_t i) { hit[i] += 1; });
  for (int h : hit) CHECK(h == 1);
  CHECK(worker_count() >= 1);
  try {
    parallel_for(100, [](std::size_t i) {
      if (i == 17 || i == 60) throw std::runtime_error(std::to_string(i));
    });
    FAIL("expected a throw");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()) == "17");
  }
}

}  // TEST_SUITE
