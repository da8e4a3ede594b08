#include <cmath>
#include <random>
#include <string>

#include "lelong/mass.hpp"
#include "lelong/theorems.hpp"

namespace lelong {

namespace {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  // Portable uniform double in [0, 1).
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  double uniform(double a, double b) { return a + (b - a) * uniform(); }
  double phase() { return uniform(0.0, kTwoPi); }

 private:
  std::mt19937_64 gen_;
};

// Half-plane mother a0 = 1 with decaying modes whose rotated L1 mass stays below
// 0.9 a0, so every translate keeps the positivity certificate.
HarmonicSpec random_half_plane(Rng& rng, int b, std::initializer_list<int> ks) {
  FourierSpec f;
  f.b = b;
  f.a0 = 1.0;
  const double share = 0.9 / (std::sqrt(2.0) * static_cast<double>(ks.size()));
  for (int k : ks) {
    const double rho = share * rng.uniform(0.3, 1.0);
    const double th = rng.phase();
    f.modes.push_back({k, rho * std::cos(th), rho * std::sin(th)});
  }
  return normalize(HarmonicSpec::fourier(std::move(f)));
}

// Strip mother a0 (1 - v/C) + b0 v + c sinh(k (C - v)/b) cos(k u / b + theta), which is
// positive on [0, C] when |c| sinh(kC/b) <= a0.
HarmonicSpec random_strip(Rng& rng, const Eigenvalue& lambda, double modulus, int b, int k, double b0) {
  FourierSpec f;
  f.b = b;
  f.a0 = 1.0;
  f.b0 = b0;
  const double c_height = std::log(modulus) / lambda.value();
  f.strip_c = c_height;
  const double x = static_cast<double>(k) * c_height / b;
  const double amp = rng.uniform(0.2, 0.5) / std::sinh(x);
  const double th = rng.phase();
  const double hi = 0.5 * amp * std::exp(x);
  const double lo = 0.5 * amp * std::exp(-x);
  f.modes.push_back({-k, hi * std::cos(th), hi * std::sin(th)});
  f.modes.push_back({k, -lo * std::cos(th), lo * std::sin(th)});
  return normalize(HarmonicSpec::fourier(std::move(f)));
}

void append(std::vector<TransversalAtom>& to, std::vector<TransversalAtom> from) {
  for (auto& a : from) to.push_back(std::move(a));
}

TransversalAtom atom(cplx alpha, double w, HarmonicSpec h, AtomSupport s = AtomSupport::Component) {
  return TransversalAtom{alpha, w, std::move(h), s};
}

Current r1_const() {
  return build_current(Eigenvalue::rational(1, 1), {atom(0.5, 1.0, HarmonicSpec::constant(1.0))});
}

Current r1_fourier(Rng& rng) {
  const Eigenvalue l = Eigenvalue::rational(1, 1);
  return build_current(l, {atom(std::polar(0.3, rng.phase()), 0.6, random_half_plane(rng, 1, {-1, -2})),
                           atom(std::polar(1.7, rng.phase()), 0.4, random_half_plane(rng, 1, {-1}))});
}

Current r12_orbit(Rng& rng) {
  const Eigenvalue l = Eigenvalue::rational(1, 2);
  std::vector<TransversalAtom> atoms;
  append(atoms, monodromy_orbit(l, std::polar(0.5, rng.phase()), random_half_plane(rng, 2, {-1, -3}), 0.5, 0, 2));
  append(atoms, monodromy_orbit(l, std::polar(1.5, rng.phase()), random_half_plane(rng, 2, {-2}), 0.25, 0, 2));
  return build_current(l, std::move(atoms));
}

Current r23_orbit(Rng& rng) {
  const Eigenvalue l = Eigenvalue::rational(2, 3);
  std::vector<TransversalAtom> atoms;
  append(atoms, monodromy_orbit(l, std::polar(2.5, rng.phase()), random_half_plane(rng, 3, {-1, -2}), 0.3, 0, 3));
  atoms.push_back(atom(std::polar(4.0, rng.phase()), 0.2, random_half_plane(rng, 1, {-1})));
  return build_current(l, std::move(atoms));
}

Current r23_b0(Rng& rng) {
  const Eigenvalue l = Eigenvalue::rational(2, 3);
  std::vector<TransversalAtom> atoms;
  for (double m : {0.3, 0.8, 2.0}) {
    FourierSpec f;
    f.a0 = 1.0;
    f.b0 = 0.5;
    atoms.push_back(atom(std::polar(m, rng.phase()), 1.0 / 3.0, HarmonicSpec::fourier(f)));
  }
  return build_current(l, std::move(atoms));
}

Current sqrt2_fourier(Rng& rng) {
  const Eigenvalue l = Eigenvalue::irrational(std::sqrt(2.0) - 1.0);
  return build_current(l, {atom(std::polar(0.5, rng.phase()), 0.5, random_half_plane(rng, 1, {-1, -2})),
                           atom(std::polar(2.0, rng.phase()), 0.5, random_half_plane(rng, 1, {-1}))});
}

Current invpi_orbit(Rng& rng) {
  const Eigenvalue l = Eigenvalue::irrational(1.0 / kPi);
  std::vector<TransversalAtom> atoms;
  append(atoms, monodromy_orbit(l, std::polar(0.6, rng.phase()), random_half_plane(rng, 2, {-1}), 0.4, 0, 2));
  atoms.push_back(atom(std::polar(3.0, rng.phase()), 0.2, random_half_plane(rng, 1, {-1, -3})));
  return build_current(l, std::move(atoms));
}

Current sqrt2_poisson(Rng& rng) {
  const Eigenvalue l = Eigenvalue::irrational(std::sqrt(2.0) - 1.0);
  const double c = rng.uniform(-1.0, 1.0);
  return build_current(l, {atom(std::polar(0.6, rng.phase()), 0.7, bump_spec(c, kTwoPi, kPi / 16.0), AtomSupport::WholeLeaf),
                           atom(std::polar(1.4, rng.phase()), 0.3, bump_spec(-c, 3.0 * kPi, kPi / 16.0), AtomSupport::WholeLeaf)});
}

Current invpi_poisson(Rng& rng) {
  const Eigenvalue l = Eigenvalue::irrational(1.0 / kPi);
  return build_current(l, {atom(std::polar(1.4, rng.phase()), 1.0, bump_spec(rng.uniform(-1.0, 1.0), 2.0 * kPi, kPi / 16.0),
                                AtomSupport::WholeLeaf)});
}

Current neg1_single(Rng& rng) {
  const Eigenvalue l = Eigenvalue::negative(-1.0);
  const double m = std::exp(-1.0);
  return build_current(l, {atom(std::polar(m, rng.phase()), 1.0, strip_spec_for(l, m, 1.0, 0.0))});
}

Current neg1_family(Rng& rng, double b0) {
  const Eigenvalue l = Eigenvalue::negative(-1.0);
  return build_current(l, accumulation_family(l, 4.0, 2.0, 24, b0, rng.phase()));
}

Current neg12_orbit_family(Rng& rng) {
  const Eigenvalue l = Eigenvalue::negative_rational(1, 2);
  std::vector<TransversalAtom> atoms;
  for (int j = 1; j <= 12; ++j) {
    const double m = std::pow(4.0, -j);
    append(atoms, monodromy_orbit(l, std::polar(m, rng.phase()), random_strip(rng, l, m, 2, 1, 0.25),
                                  std::pow(4.0, -j), 0, 2));
  }
  return build_current(l, std::move(atoms));
}

Current neg14_family(Rng& rng) {
  const Eigenvalue l = Eigenvalue::negative_rational(1, 4);
  return build_current(l, accumulation_family(l, 2.0, 4.0, 24, 0.0, rng.phase()));
}

Current div_r1_b0(Rng& rng) {
  FourierSpec f;
  f.a0 = 1.0;
  f.b0 = 1.0;
  return build_current(Eigenvalue::rational(1, 1), {atom(std::polar(0.5, rng.phase()), 1.0, HarmonicSpec::fourier(f))});
}

Current div_r12_poisson(Rng& rng) {
  PoissonSpec p;
  p.boundary.ys = {-1.0, 0.0, 1.0};
  p.boundary.values = {1.0, 1.0, 1.0};
  p.boundary.tail = 1.0;
  p.c_lin = 1.0;
  return build_current(Eigenvalue::rational(1, 2), {atom(std::polar(2.0, rng.phase()), 1.0, HarmonicSpec::poisson(p))});
}

}  // namespace

HarmonicSpec bump_spec(double center, double half_width, double step) {
  const auto n = static_cast<std::size_t>(std::llround(2.0 * half_width / step)) + 1;
  PoissonSpec p;
  p.boundary.ys.resize(n);
  p.boundary.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double y = center - half_width + step * static_cast<double>(i);
    const double c = std::cos(0.5 * kPi * (y - center) / half_width);
    p.boundary.ys[i] = y;
    p.boundary.values[i] = i == 0 || i + 1 == n ? 0.0 : c * c;
  }
  return normalize(HarmonicSpec::poisson(std::move(p)));
}

std::vector<CorpusCase> standard_corpus(std::uint64_t seed) {
  Rng rng(seed);
  std::vector<CorpusCase> out;
  out.push_back({"pos-r1-const", Claim::PositiveLelong, r1_const()});
  out.push_back({"pos-r1-fourier", Claim::PositiveLelong, r1_fourier(rng)});
  out.push_back({"pos-r12-orbit", Claim::PositiveLelong, r12_orbit(rng)});
  out.push_back({"pos-r23-orbit", Claim::PositiveLelong, r23_orbit(rng)});
  out.push_back({"pos-sqrt2-fourier", Claim::PositiveLelong, sqrt2_fourier(rng)});
  out.push_back({"pos-invpi-orbit", Claim::PositiveLelong, invpi_orbit(rng)});
  out.push_back({"pos-sqrt2-poisson", Claim::PositiveLelong, sqrt2_poisson(rng)});
  out.push_back({"pos-invpi-poisson", Claim::PositiveLelong, invpi_poisson(rng)});
  out.push_back({"neg-1-single", Claim::ZeroLelong, neg1_single(rng)});
  out.push_back({"neg-1-family", Claim::ZeroLelong, neg1_family(rng, 0.0)});
  out.push_back({"neg-1-family-b0", Claim::ZeroLelong, neg1_family(rng, 0.5)});
  out.push_back({"neg-12-orbit-family", Claim::ZeroLelong, neg12_orbit_family(rng)});
  out.push_back({"neg-14-family", Claim::ZeroLelong, neg14_family(rng)});
  out.push_back({"div-r1-b0", Claim::Divergence, div_r1_b0(rng)});
  out.push_back({"div-r12-poisson-clin", Claim::Divergence, div_r12_poisson(rng)});
  return out;
}

std::vector<CorpusCase> periodic_fixtures(std::uint64_t seed) {
  std::vector<CorpusCase> out;
  for (auto& c : standard_corpus(seed)) {
    const bool fourier = c.current.atoms().front().harmonic.is_fourier();
    const EigenClass k = c.current.lambda().kind();
    if (fourier && k != EigenClass::PositiveIrrational && c.id != "neg-14-family") out.push_back(std::move(c));
  }
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  out.push_back({"fix-r23-b0", Claim::Divergence, r23_b0(rng)});
  return out;
}

}  // namespace lelong
