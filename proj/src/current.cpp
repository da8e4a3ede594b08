#include "lelong/current.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "lelong/error.hpp"

namespace lelong {

namespace {

std::string atom_label(std::size_t i) { return "atom " + std::to_string(i) + ": "; }

void validate_atom(const Eigenvalue& lambda, const TransversalAtom& atom, std::size_t i) {
  const double modulus = std::abs(atom.alpha);
  if (!(modulus > 0.0) || !std::isfinite(modulus))
    throw Error(ErrorKind::Domain, atom_label(i) + "alpha must be nonzero");
  if (!(atom.weight > 0.0) || !std::isfinite(atom.weight))
    throw Error(ErrorKind::Domain, atom_label(i) + "weight must be positive");
  const HarmonicSpec& h = atom.harmonic;

  if (!lambda.positive()) {
    if (modulus >= 1.0) throw Error(ErrorKind::EmptyLeaf, atom_label(i) + "|alpha| >= 1 gives an empty leaf for lambda < 0");
    if (!h.on_strip()) throw Error(ErrorKind::InvalidSpec, atom_label(i) + "lambda < 0 needs a strip spec");
    const double c = std::log(modulus) / lambda.value();
    const double got = *h.as_fourier().strip_c;
    if (std::abs(got - c) > 1e-9 * c)
      throw Error(ErrorKind::InvalidSpec, atom_label(i) + "strip height must equal log|alpha| / lambda");
  } else if (h.on_strip()) {
    throw Error(ErrorKind::InvalidSpec, atom_label(i) + "lambda > 0 needs a half-plane spec");
  }

  if (std::abs(eval(h, 0.0, 0.0) - 1.0) > 1e-12)
    throw Error(ErrorKind::Normalization, atom_label(i) + "spec is not normalized at (0, 0)");

  if (h.is_fourier() && !h.on_strip() && !has_positivity_certificate(h.as_fourier()))
    throw Error(ErrorKind::InvalidSpec, atom_label(i) + "half-plane modes exceed a0");
  if (!check_positivity(h, 64, 33))
    throw Error(ErrorKind::InvalidSpec, atom_label(i) + "spec is negative somewhere on its domain");

  if (atom.support == AtomSupport::WholeLeaf) {
    if (lambda.kind() != EigenClass::PositiveIrrational)
      throw Error(ErrorKind::InvalidSpec, atom_label(i) + "whole-leaf atoms need an irrational positive lambda");
    if (!h.is_poisson() || h.as_poisson().boundary.tail != 0.0 || h.as_poisson().c_lin != 0.0)
      throw Error(ErrorKind::InvalidSpec, atom_label(i) + "whole-leaf atoms need a Poisson spec with zero tail and c_lin");
  }
}

}  // namespace

Current build_current(const Eigenvalue& lambda, std::vector<TransversalAtom> atoms) {
  if (atoms.empty()) throw Error(ErrorKind::Precondition, "a current needs at least one atom");
  for (std::size_t i = 0; i < atoms.size(); ++i) validate_atom(lambda, atoms[i], i);
  return Current(lambda, std::move(atoms));
}

std::optional<int> is_periodic(const Current& current) {
  long period = 1;
  for (const auto& atom : current.atoms()) {
    if (atom.support == AtomSupport::WholeLeaf) return std::nullopt;
    auto m = period_multiple(atom.harmonic);
    if (!m) return std::nullopt;
    period = std::lcm(period, static_cast<long>(*m));
  }
  return static_cast<int>(period);
}

double total_weight(const Current& current) {
  double s = 0.0;
  for (const auto& atom : current.atoms()) s += atom.weight;
  return s;
}

std::vector<TransversalAtom> monodromy_orbit(const Eigenvalue& lambda, cplx alpha,
                                             const HarmonicSpec& mother, double weight,
                                             long k_first, long count) {
  std::vector<TransversalAtom> out;
  out.reserve(static_cast<std::size_t>(std::max(0L, count)));
  for (long k = k_first; k < k_first + count; ++k) {
    const double shift = kTwoPi * static_cast<double>(k);
    const double scale = eval(mother, shift, 0.0);
    TransversalAtom atom;
    atom.alpha = monodromy(lambda, alpha, k);
    atom.weight = weight * scale;
    atom.harmonic = normalize(translate(mother, shift));
    out.push_back(std::move(atom));
  }
  return out;
}

HarmonicSpec strip_spec_for(const Eigenvalue& lambda, double alpha_modulus, double a0, double b0) {
  if (lambda.positive()) throw Error(ErrorKind::Precondition, "strip specs need lambda < 0");
  if (!(alpha_modulus > 0.0 && alpha_modulus < 1.0))
    throw Error(ErrorKind::EmptyLeaf, "strip specs need 0 < |alpha| < 1");
  FourierSpec f;
  f.a0 = a0;
  f.b0 = b0;
  f.strip_c = std::log(alpha_modulus) / lambda.value();
  return HarmonicSpec::fourier(std::move(f));
}

std::vector<TransversalAtom> accumulation_family(const Eigenvalue& lambda, double q, double p,
                                                 int count, double b0, double phase) {
  std::vector<TransversalAtom> out;
  for (int j = 1; j <= count; ++j) {
    const double modulus = std::pow(q, -j);
    TransversalAtom atom;
    atom.alpha = std::polar(modulus, phase);
    atom.weight = std::pow(p, -j);
    atom.harmonic = strip_spec_for(lambda, modulus, 1.0, b0);
    out.push_back(std::move(atom));
  }
  return out;
}

}  // namespace lelong
