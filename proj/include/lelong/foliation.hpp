#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

namespace lelong {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 6.28318530717958647692;

enum class EigenClass { PositiveRational, PositiveIrrational, Negative };

// The eigenvalue of z d/dz + lambda w d/dw, normalized to 0 < |lambda| <= 1.
// Classification is declared, never inferred from the float.
class Eigenvalue {
 public:
  static Eigenvalue rational(long a, long b);
  static Eigenvalue irrational(double value);
  static Eigenvalue negative(double value);
  // Negative value -a/b with exact angle bookkeeping for monodromy.
  static Eigenvalue negative_rational(long a, long b);

  double value() const noexcept { return value_; }
  EigenClass kind() const noexcept { return kind_; }
  bool positive() const noexcept { return value_ > 0.0; }
  // (a, b) for rational classes; b = 0 when no exact fraction is known.
  long numerator() const noexcept { return a_; }
  long denominator() const noexcept { return b_; }
  bool has_fraction() const noexcept { return b_ > 0; }

  // Angle of e^{2k pi i lambda} reduced to [0, 2pi).
  double monodromy_angle(long k) const;

  bool operator==(const Eigenvalue&) const = default;

 private:
  Eigenvalue(double value, EigenClass kind, long a, long b)
      : value_(value), kind_(kind), a_(a), b_(b) {}

  double value_;
  EigenClass kind_;
  long a_;
  long b_;
};

struct HalfPlane {
  double v_min;
};
struct Strip {
  double v_min;
  double v_max;
};
struct EmptyDomain {};

using LeafDomain = std::variant<HalfPlane, Strip, EmptyDomain>;

struct LeafPoint {
  cplx z;
  cplx w;
};

struct TorusPoint {
  double arg_z;
  double arg_w;
};

double log_plus(double x);

// Coordinate shift log+|alpha| / lambda applied to positive-lambda leaves.
double leaf_shift(const Eigenvalue& lambda, double alpha_modulus);

LeafDomain leaf_domain(const Eigenvalue& lambda, double alpha_modulus, double r);

LeafPoint psi(const Eigenvalue& lambda, cplx alpha, cplx zeta);

double jacobian_density(const Eigenvalue& lambda, double alpha_modulus, double v);

cplx monodromy(const Eigenvalue& lambda, cplx alpha, long k);

inline constexpr double kAngularTolerance = 1e-9;

std::optional<long> equivalent(const Eigenvalue& lambda, cplx alpha, cplx beta, long k_max);

std::vector<TorusPoint> torus_curve(const Eigenvalue& lambda, cplx alpha, double r,
                                    double u_span, std::size_t samples);

}  // namespace lelong
