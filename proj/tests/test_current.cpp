#include <doctest.h>

#include <cmath>

#include "lelong/current.hpp"
#include "lelong/error.hpp"
#include "lelong/theorems.hpp"

using namespace lelong;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Input;
}

HarmonicSpec fourier_b(int b) {
  FourierSpec f;
  f.b = b;
  f.a0 = 1.0;
  return HarmonicSpec::fourier(f);
}

}  // namespace

TEST_SUITE("current") {

TEST_CASE("build current examples") {
  const Current c = build_current(Eigenvalue::rational(1, 1), {{0.5, 1.0, HarmonicSpec::constant(1.0)}});
  CHECK(c.atoms().size() == 1);
  const Eigenvalue neg = Eigenvalue::negative(-1.0);
  CHECK(kind_of([&] { build_current(neg, {{2.0, 1.0, HarmonicSpec::strip_constant(1.0, 1.0)}}); }) ==
        ErrorKind::EmptyLeaf);
  std::vector<TransversalAtom> atoms;
  for (int j = 1; j <= 8; ++j) {
    const double m = std::pow(4.0, -j);
    atoms.push_back({m, std::pow(2.0, -j), HarmonicSpec::strip_constant(1.0, j * std::log(4.0))});
  }
  const Current fam = build_current(neg, atoms);
  CHECK(total_weight(fam) == doctest::Approx(255.0 / 256.0));
}

TEST_CASE("build current rejects invalid atoms") {
  const Eigenvalue one = Eigenvalue::rational(1, 1);
  CHECK(kind_of([&] { build_current(one, {{0.5, 1.0, HarmonicSpec::constant(2.0)}}); }) == ErrorKind::Normalization);
  FourierSpec bad;
  bad.a0 = 0.4;
  bad.modes = {{-1, 0.6, 0.0}};
  // Normalized at (0, 0) but the modes outweigh a0, so H < 0 at u = pi.
  CHECK(kind_of([&] { build_current(one, {{0.5, 1.0, HarmonicSpec::fourier(bad)}}); }) == ErrorKind::InvalidSpec);
  CHECK(kind_of([&] { build_current(one, {{0.0, 1.0, HarmonicSpec::constant(1.0)}}); }) == ErrorKind::Domain);
  CHECK(kind_of([&] { build_current(one, {{0.5, 0.0, HarmonicSpec::constant(1.0)}}); }) == ErrorKind::Domain);
  CHECK(kind_of([&] { build_current(one, {{0.5, 1.0, HarmonicSpec::strip_constant(1.0, 1.0)}}); }) ==
        ErrorKind::InvalidSpec);
  const Eigenvalue neg = Eigenvalue::negative(-1.0);
  CHECK(kind_of([&] { build_current(neg, {{0.5, 1.0, HarmonicSpec::constant(1.0)}}); }) == ErrorKind::InvalidSpec);
  CHECK(kind_of([&] { build_current(neg, {{0.5, 1.0, HarmonicSpec::strip_constant(1.0, 2.0)}}); }) ==
        ErrorKind::InvalidSpec);
  CHECK(kind_of([&] { build_current(one, {}); }) == ErrorKind::Precondition);
  const auto bump = bump_spec(0.0, kTwoPi, kPi / 16.0);
  CHECK(kind_of([&] { build_current(one, {{0.5, 1.0, bump, AtomSupport::WholeLeaf}}); }) == ErrorKind::InvalidSpec);
}

TEST_CASE("is periodic") {
  const Eigenvalue l = Eigenvalue::rational(1, 6);
  CHECK(is_periodic(build_current(l, {{0.5, 1.0, HarmonicSpec::constant(1.0)}})) == 1);
  CHECK(is_periodic(build_current(l, {{0.5, 1.0, fourier_b(2)}, {0.7, 1.0, fourier_b(3)}})) == 6);
  const Eigenvalue irr = Eigenvalue::irrational(std::sqrt(2.0) - 1.0);
  CHECK_FALSE(is_periodic(build_current(irr, {{0.5, 1.0, bump_spec(0.0, kTwoPi, kPi / 16.0)}})).has_value());
}

TEST_CASE("total weight") {
  CHECK(total_weight(build_current(Eigenvalue::rational(1, 1), {{0.5, 1.0, HarmonicSpec::constant(1.0)}})) == 1.0);
  CHECK(total_weight(build_current(Eigenvalue::rational(1, 1), {{0.5, 0.5, HarmonicSpec::constant(1.0)},
                                                                {0.6, 0.5, HarmonicSpec::constant(1.0)}})) == 1.0);
}

TEST_CASE("build is idempotent and atoms stay normalized") {
  for (const auto& c : standard_corpus(42)) {
    const Current again = build_current(c.current.lambda(), c.current.atoms());
    CHECK(again == c.current);
    for (const auto& a : c.current.atoms()) CHECK(std::abs(eval(a.harmonic, 0.0, 0.0) - 1.0) <= 1e-12);
  }
}

TEST_CASE("rational corpus currents are periodic") {
  for (const auto& c : standard_corpus(42)) {
    const auto& l = c.current.lambda();
    if (l.kind() != EigenClass::PositiveRational) continue;
    const auto b = is_periodic(c.current);
    REQUIRE(b.has_value());
    CHECK(l.denominator() % *b == 0);
  }
}

TEST_CASE("monodromy orbit follows the translation rule") {
  const Eigenvalue l = Eigenvalue::rational(2, 3);
  FourierSpec f;
  f.b = 3;
  f.a0 = 1.0;
  f.modes = {{-1, 0.3, 0.2}};
  const auto mother = normalize(HarmonicSpec::fourier(f));
  const auto orbit = monodromy_orbit(l, std::polar(2.5, 0.1), mother, 0.3, 0, 3);
  REQUIRE(orbit.size() == 3);
  for (long k = 0; k < 3; ++k) {
    const auto& a = orbit[static_cast<std::size_t>(k)];
    CHECK(std::abs(a.alpha - monodromy(l, std::polar(2.5, 0.1), k)) < 1e-12);
    CHECK(a.weight == doctest::Approx(0.3 * eval(mother, kTwoPi * k, 0.0)));
    CHECK(verify_monodromy_relation(l, mother, a.harmonic, k, 1e-12));
  }
}

TEST_CASE("accumulation family strip heights") {
  const Eigenvalue l = Eigenvalue::negative_rational(1, 2);
  const auto fam = accumulation_family(l, 4.0, 2.0, 6, 0.5, 0.2);
  for (std::size_t j = 0; j < fam.size(); ++j) {
    const double m = std::pow(4.0, -static_cast<double>(j + 1));
    CHECK(std::abs(fam[j].alpha) == doctest::Approx(m));
    CHECK(*fam[j].harmonic.as_fourier().strip_c == doctest::Approx(std::log(m) / -0.5));
  }
  CHECK_NOTHROW(build_current(l, fam));
}

TEST_CASE("corpus covers every branch") {
  const auto corpus = standard_corpus(42);
  int pos = 0, neg = 0, div = 0, poisson = 0, families = 0;
  for (const auto& c : corpus) {
    pos += c.claim == Claim::PositiveLelong;
    neg += c.claim == Claim::ZeroLelong;
    div += c.claim == Claim::Divergence;
    poisson += c.current.atoms().front().harmonic.is_poisson();
    families += c.current.atoms().size() > 4;
  }
  CHECK(pos >= 1);
  CHECK(neg >= 1);
  CHECK(div >= 1);
  CHECK(poisson >= 1);
  CHECK(families >= 1);
  const auto again = standard_corpus(42);
  REQUIRE(again.size() == corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    CHECK(again[i].id == corpus[i].id);
    CHECK(again[i].current == corpus[i].current);
  }
}

}  // TEST_SUITE
