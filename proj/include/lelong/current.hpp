#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lelong/foliation.hpp"
#include "lelong/harmonic.hpp"

namespace lelong {

// Component: the atom contributes over one sheet u in (2 k0 pi, 2 k0 pi + 2 pi).
// WholeLeaf: the atom stands for its full monodromy orbit, so u runs over the real
// line (irrational lambda > 0, Poisson spec with zero tail and c_lin).
enum class AtomSupport { Component, WholeLeaf };

struct TransversalAtom {
  cplx alpha;
  double weight = 1.0;
  HarmonicSpec harmonic = HarmonicSpec::constant(1.0);
  AtomSupport support = AtomSupport::Component;
  bool operator==(const TransversalAtom&) const = default;
};

class Current {
 public:
  const Eigenvalue& lambda() const { return lambda_; }
  const std::vector<TransversalAtom>& atoms() const { return atoms_; }
  bool operator==(const Current&) const = default;

 private:
  friend Current build_current(const Eigenvalue& lambda, std::vector<TransversalAtom> atoms);
  Current(Eigenvalue lambda, std::vector<TransversalAtom> atoms)
      : lambda_(lambda), atoms_(std::move(atoms)) {}
  Eigenvalue lambda_;
  std::vector<TransversalAtom> atoms_;
};

Current build_current(const Eigenvalue& lambda, std::vector<TransversalAtom> atoms);

std::optional<int> is_periodic(const Current& current);

double total_weight(const Current& current);

// Atoms alpha_k = alpha e^{2k pi i lambda} for k = k_first .. k_first + count - 1, with
// H_k = normalize(H(. + 2k pi, .)) and weight w H(2k pi, 0). The mother must be normalized.
std::vector<TransversalAtom> monodromy_orbit(const Eigenvalue& lambda, cplx alpha,
                                             const HarmonicSpec& mother, double weight,
                                             long k_first, long count);

// Strip spec a0 (1 - v/C) + b0 v with C = log|alpha| / lambda for lambda < 0.
HarmonicSpec strip_spec_for(const Eigenvalue& lambda, double alpha_modulus, double a0, double b0);

// Geometric accumulation family alpha_j = q^{-j} e^{i phase}, weights p^{-j}, j = 1..count,
// each with a constant strip spec (a0 = 1 after normalization, given b0 ratio).
std::vector<TransversalAtom> accumulation_family(const Eigenvalue& lambda, double q, double p,
                                                 int count, double b0 = 0.0, double phase = 0.0);

}  // namespace lelong
