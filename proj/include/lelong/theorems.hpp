#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lelong/current.hpp"
#include "lelong/kernels.hpp"
#include "lelong/lelong.hpp"
#include "lelong/mass.hpp"
#include "lelong/quadrature.hpp"

namespace lelong {

enum class Claim { PositiveLelong, ZeroLelong, Divergence, LemmaBound };
enum class Verdict { Pass, Fail, Skipped };

const char* claim_name(Claim c);
const char* verdict_name(Verdict v);

struct VerificationReport {
  std::string case_id;
  double lambda = 0.0;
  Claim claim = Claim::LemmaBound;
  std::vector<double> observed;
  Verdict verdict = Verdict::Fail;
  std::string details;
  bool operator==(const VerificationReport&) const = default;
};

struct SuiteConfig {
  QuadratureConfig quad;
  Schedule schedule;
  // Multiplies every declared verdict tolerance; 0 forces tolerance-based checks to fail.
  double tol_scale = 1.0;
  int interval_range = kDefaultIntervalRange;
  kernels::Isa isa = kernels::active_isa();
};

inline constexpr double kPositiveLimitRelTol = 1e-4;
inline constexpr double kLowerBoundSlack = 0.05;
inline constexpr double kZeroLelongFraction = 0.05;
inline constexpr double kZeroLelongTailFraction = 0.01;

VerificationReport verify_positive_lambda(const std::string& case_id, const Current& current,
                                          const SuiteConfig& cfg);
VerificationReport verify_negative_periodic(const std::string& case_id, const Current& current,
                                            const SuiteConfig& cfg);
VerificationReport verify_b0_divergence(const std::string& case_id, const Current& current,
                                        const SuiteConfig& cfg);

// Lattice checks, one report each: Poisson ratios, I_a bound, I_b bound, interval kernel
// (printed coefficient and |N| coefficient), and the two uniform-boundedness inequalities.
std::vector<VerificationReport> verify_lemma_bounds(const SuiteConfig& cfg);

// Tail sum over atoms still admissible at r of w (a0 I_a(1) + b0 e^{-1/(lambda(1-lambda))} I_b(1)).
double negative_tail_bound(const Current& current, double r);

struct CorpusCase {
  std::string id;
  Claim claim;
  Current current;
};

std::vector<CorpusCase> standard_corpus(std::uint64_t seed);

// Periodic currents with an applicable closed form (lambda in {1, 1/2, 2/3, -1, -1/2}).
std::vector<CorpusCase> periodic_fixtures(std::uint64_t seed);

// Poisson spec for the C^1 bump cos^2(pi (y - center) / (2 half_width)) on
// [center - half_width, center + half_width], zero tail, normalized at y = 0.
HarmonicSpec bump_spec(double center, double half_width, double step);

std::vector<VerificationReport> run_corpus(std::uint64_t seed, const SuiteConfig& cfg,
                                           const std::optional<std::string>& case_filter = {});

bool all_pass(const std::vector<VerificationReport>& reports);

}  // namespace lelong
