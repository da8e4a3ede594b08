#include "lelong/foliation.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "lelong/error.hpp"

namespace lelong {

namespace {

double wrap_angle(double x) {
  double y = std::fmod(x, kTwoPi);
  if (y < 0.0) y += kTwoPi;
  if (y >= kTwoPi) y -= kTwoPi;
  return y;
}

void require_fraction(long a, long b) {
  if (a <= 0 || b <= 0) throw Error(ErrorKind::Domain, "eigenvalue fraction needs positive a and b");
  if (std::gcd(a, b) != 1) throw Error(ErrorKind::Domain, "eigenvalue fraction a/b must be in lowest terms");
  if (a > b) throw Error(ErrorKind::Domain, "eigenvalue must satisfy |lambda| <= 1");
}

}  // namespace

Eigenvalue Eigenvalue::rational(long a, long b) {
  require_fraction(a, b);
  return Eigenvalue(static_cast<double>(a) / static_cast<double>(b), EigenClass::PositiveRational, a, b);
}

Eigenvalue Eigenvalue::irrational(double value) {
  if (!(value > 0.0 && value < 1.0))
    throw Error(ErrorKind::Domain, "irrational eigenvalue must lie in (0, 1)");
  return Eigenvalue(value, EigenClass::PositiveIrrational, 0, 0);
}

Eigenvalue Eigenvalue::negative(double value) {
  if (!(value < 0.0 && value >= -1.0))
    throw Error(ErrorKind::Domain, "negative eigenvalue must lie in [-1, 0)");
  return Eigenvalue(value, EigenClass::Negative, 0, 0);
}

Eigenvalue Eigenvalue::negative_rational(long a, long b) {
  require_fraction(a, b);
  return Eigenvalue(-static_cast<double>(a) / static_cast<double>(b), EigenClass::Negative, -a, b);
}

double Eigenvalue::monodromy_angle(long k) const {
  if (b_ > 0) {
    long m = (k % b_) * a_ % b_;
    if (m < 0) m += b_;
    return kTwoPi * static_cast<double>(m) / static_cast<double>(b_);
  }
  double x = static_cast<double>(k) * value_;
  return kTwoPi * (x - std::floor(x));
}

double log_plus(double x) { return x > 1.0 ? std::log(x) : 0.0; }

double leaf_shift(const Eigenvalue& lambda, double alpha_modulus) {
  return lambda.positive() ? log_plus(alpha_modulus) / lambda.value() : 0.0;
}

LeafDomain leaf_domain(const Eigenvalue& lambda, double alpha_modulus, double r) {
  if (!(alpha_modulus > 0.0) || !std::isfinite(alpha_modulus))
    throw Error(ErrorKind::Domain, "alpha modulus must be positive");
  if (!(r > 0.0 && r <= 1.0)) throw Error(ErrorKind::Domain, "radius must lie in (0, 1]");
  const double l = lambda.value();
  const double threshold = std::pow(r, 1.0 - l);
  const double log_a = std::log(alpha_modulus);
  const double log_r = std::log(r);
  if (l > 0.0) {
    if (alpha_modulus >= threshold) return HalfPlane{(log_a - log_r) / l};
    return HalfPlane{-log_r};
  }
  if (alpha_modulus >= threshold) return EmptyDomain{};
  return Strip{-log_r, (log_a - log_r) / l};
}

LeafPoint psi(const Eigenvalue& lambda, cplx alpha, cplx zeta) {
  const cplx i(0.0, 1.0);
  return {std::exp(i * zeta), alpha * std::exp(i * lambda.value() * zeta)};
}

double jacobian_density(const Eigenvalue& lambda, double alpha_modulus, double v) {
  if (!(alpha_modulus > 0.0)) throw Error(ErrorKind::Domain, "alpha modulus must be positive");
  const double l = lambda.value();
  if (alpha_modulus < 1.0)
    return 2.0 * (std::exp(-2.0 * v) + l * l * alpha_modulus * alpha_modulus * std::exp(-2.0 * l * v));
  return 2.0 * (std::pow(alpha_modulus, -2.0 / l) * std::exp(-2.0 * v) + l * l * std::exp(-2.0 * l * v));
}

cplx monodromy(const Eigenvalue& lambda, cplx alpha, long k) {
  return alpha * std::polar(1.0, lambda.monodromy_angle(k));
}

std::optional<long> equivalent(const Eigenvalue& lambda, cplx alpha, cplx beta, long k_max) {
  const double ma = std::abs(alpha);
  const double mb = std::abs(beta);
  if (std::abs(ma - mb) > kAngularTolerance * std::max(ma, mb)) return std::nullopt;
  const double base = std::arg(beta) - std::arg(alpha);
  for (long n = 0; n <= k_max; ++n) {
    for (long k : {n, -n}) {
      double d = std::remainder(base - lambda.monodromy_angle(k), kTwoPi);
      if (std::abs(d) <= kAngularTolerance) return k;
      if (n == 0) break;
    }
  }
  return std::nullopt;
}

std::vector<TorusPoint> torus_curve(const Eigenvalue& lambda, cplx alpha, double r, double u_span,
                                    std::size_t samples) {
  if (!(r > 0.0 && r < 1.0)) throw Error(ErrorKind::Domain, "torus curve radius must lie in (0, 1)");
  if (samples < 2) throw Error(ErrorKind::Domain, "torus curve needs at least two samples");
  std::vector<TorusPoint> out;
  out.reserve(samples);
  const double a0 = std::arg(alpha);
  for (std::size_t i = 0; i < samples; ++i) {
    const double u = u_span * static_cast<double>(i) / static_cast<double>(samples - 1);
    out.push_back({wrap_angle(u), wrap_angle(a0 + lambda.value() * u)});
  }
  return out;
}

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Domain: return "domain";
    case ErrorKind::DegenerateNormalization: return "degenerate-normalization";
    case ErrorKind::EmptyLeaf: return "empty-leaf";
    case ErrorKind::Normalization: return "normalization";
    case ErrorKind::InvalidSpec: return "invalid-spec";
    case ErrorKind::UnsupportedCurrent: return "unsupported-current";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::QuadratureFailure: return "quadrature-failure";
    case ErrorKind::Input: return "input";
  }
  return "unknown";
}

}  // namespace lelong
