#include "lelong/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lelong/error.hpp"
#include "lelong/mass.hpp"

namespace lelong {

const char* claim_name(Claim c) {
  switch (c) {
    case Claim::PositiveLelong: return "positive-lelong";
    case Claim::ZeroLelong: return "zero-lelong";
    case Claim::Divergence: return "divergence";
    case Claim::LemmaBound: return "lemma-bound";
  }
  return "unknown";
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Skipped: return "SKIPPED";
  }
  return "unknown";
}

namespace {

bool fourier_components(const Current& c) {
  return std::all_of(c.atoms().begin(), c.atoms().end(), [](const TransversalAtom& a) {
    return a.harmonic.is_fourier() && a.support == AtomSupport::Component;
  });
}

// Atomwise limit 2 sum w a0 l; each component atom has its own closed form whether or
// not the eigenvalue is rational.
double atomwise_limit(const Current& c) {
  const double lam = c.lambda().value();
  double sum = 0.0;
  for (const auto& a : c.atoms()) {
    const auto& f = a.harmonic.as_fourier();
    if (f.b0 > 0.0) return INFINITY;
    const double m = std::abs(a.alpha);
    double ell = lam;
    if (lam == 1.0) ell = m < 1.0 ? 1.0 + m * m : 1.0 + 1.0 / (m * m);
    sum += a.weight * f.a0 * ell;
  }
  return 2.0 * sum;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(6);
  os << x;
  return os.str();
}

}  // namespace

VerificationReport verify_positive_lambda(const std::string& case_id, const Current& current,
                                          const SuiteConfig& cfg) {
  if (!current.lambda().positive())
    throw Error(ErrorKind::Precondition, "positive verifier needs lambda > 0");
  const LelongEstimate est = lelong_estimate(current, cfg.schedule, cfg.quad);
  VerificationReport rep;
  rep.case_id = case_id;
  rep.lambda = current.lambda().value();
  rep.claim = Claim::PositiveLelong;
  const double limit = est.limit_estimate;
  const auto [lower, upper] = est.limit_bracket;

  if (fourier_components(current)) {
    const double ref = is_periodic(current) ? positive_lelong_limit(current) : atomwise_limit(current);
    const double rel = std::abs(limit - ref) / ref;
    const double tol = kPositiveLimitRelTol * cfg.tol_scale;
    rep.observed = {limit, lower, upper, ref, rel};
    rep.verdict = lower > 0.0 && rel <= tol ? Verdict::Pass : Verdict::Fail;
    rep.details = "observed = [limit, lower, upper, closed-form limit, relative difference]; pass iff lower > 0 "
                  "and relative difference <= " + fmt(tol);
    return rep;
  }

  const double v_last = -std::log(est.rs.back());
  const int k = std::max(2, static_cast<int>(std::floor(v_last / kTwoPi)));
  const double lb = lower_bound_nonperiodic(current, k, cfg.quad, cfg.interval_range);
  const double slack = kLowerBoundSlack * cfg.tol_scale;
  rep.observed = {limit, lower, upper, lb, static_cast<double>(k)};
  rep.verdict = lower > 0.0 && limit >= lb * (1.0 - slack) ? Verdict::Pass : Verdict::Fail;
  rep.details = "observed = [limit, lower, upper, interval lower bound, k]; pass iff lower > 0 and limit >= "
                "bound * " + fmt(1.0 - slack);
  return rep;
}

double negative_tail_bound(const Current& current, double r) {
  const double lam = current.lambda().value();
  if (!(lam < 0.0)) throw Error(ErrorKind::Precondition, "tail bound needs lambda < 0");
  if (!(r > 0.0 && r <= 1.0)) throw Error(ErrorKind::Domain, "radius must lie in (0, 1]");
  const double damp = std::exp(-1.0 / (lam * (1.0 - lam)));
  double sum = 0.0;
  for (const auto& a : current.atoms()) {
    const double m = std::abs(a.alpha);
    if (!(m < std::pow(r, 1.0 - lam))) continue;
    const auto& f = a.harmonic.as_fourier();
    double term = f.a0 * Ia(lam, m, 1.0);
    if (f.b0 != 0.0) term += f.b0 * damp * Ib(lam, m, 1.0);
    sum += a.weight * term;
  }
  return kTwoPi * sum;
}

VerificationReport verify_negative_periodic(const std::string& case_id, const Current& current,
                                            const SuiteConfig& cfg) {
  if (current.lambda().positive())
    throw Error(ErrorKind::Precondition, "negative verifier needs lambda < 0");
  if (!is_periodic(current)) throw Error(ErrorKind::Precondition, "negative verifier needs a periodic current");
  const LelongEstimate est = lelong_estimate(current, cfg.schedule, cfg.quad);
  const double nu_first = est.nus.front();
  const double nu_last = est.nus.back();
  const double r_last = est.rs.back();
  const double lam = current.lambda().value();
  std::size_t admissible = 0;
  for (const auto& a : current.atoms())
    if (std::abs(a.alpha) < std::pow(r_last, 1.0 - lam)) ++admissible;
  const double tail = negative_tail_bound(current, r_last);
  const double total = mass_quadrature(current, 1.0, 0, cfg.quad).value;
  const double ratio = nu_first > 0.0 ? nu_last / nu_first : INFINITY;
  const double frac = kZeroLelongFraction * cfg.tol_scale;
  const double tail_frac = kZeroLelongTailFraction * cfg.tol_scale;

  VerificationReport rep;
  rep.case_id = case_id;
  rep.lambda = lam;
  rep.claim = Claim::ZeroLelong;
  rep.observed = {nu_first, nu_last, ratio, tail, total, static_cast<double>(admissible)};
  const bool decayed = nu_last < frac * nu_first;
  const bool tail_ok = admissible == 0 || (total > 0.0 && tail / total < tail_frac);
  rep.verdict = decayed && tail_ok ? Verdict::Pass : Verdict::Fail;
  rep.details = "observed = [nu first, nu last, ratio, tail bound, total mass, admissible atoms]; pass iff nu last < " +
                fmt(frac) + " * nu first and (no admissible atom or tail / total < " + fmt(tail_frac) +
                "); monotone " + (est.monotone_ok ? "yes" : "no");
  return rep;
}

VerificationReport verify_b0_divergence(const std::string& case_id, const Current& current,
                                        const SuiteConfig& cfg) {
  if (!current.lambda().positive())
    throw Error(ErrorKind::Precondition, "divergence verifier needs lambda > 0");
  const LelongEstimate est = lelong_estimate(current, cfg.schedule, cfg.quad);
  const double need = 1.0 - (1.0 - kDivergenceRSquared) * cfg.tol_scale;
  VerificationReport rep;
  rep.case_id = case_id;
  rep.lambda = current.lambda().value();
  rep.claim = Claim::Divergence;
  rep.observed = {est.fit.slope, est.fit.intercept, est.fit.r_squared, est.growth};
  rep.verdict = est.fit.slope > 0.0 && est.fit.r_squared > need ? Verdict::Pass : Verdict::Fail;
  rep.details = "observed = [slope in -log r, intercept, r squared, nu last / nu first]; pass iff slope > 0 and "
                "r squared > " + fmt(need);
  return rep;
}

std::vector<VerificationReport> run_corpus(std::uint64_t seed, const SuiteConfig& cfg,
                                           const std::optional<std::string>& filter) {
  std::vector<VerificationReport> out;
  for (const auto& c : standard_corpus(seed)) {
    if (filter && *filter != c.id) continue;
    switch (c.claim) {
      case Claim::PositiveLelong: out.push_back(verify_positive_lambda(c.id, c.current, cfg)); break;
      case Claim::ZeroLelong: out.push_back(verify_negative_periodic(c.id, c.current, cfg)); break;
      case Claim::Divergence: out.push_back(verify_b0_divergence(c.id, c.current, cfg)); break;
      case Claim::LemmaBound: break;
    }
  }
  if (!filter || filter->rfind("lemma-", 0) == 0) {
    for (auto& r : verify_lemma_bounds(cfg))
      if (!filter || *filter == r.case_id) out.push_back(std::move(r));
  }
  if (filter && out.empty()) throw Error(ErrorKind::Input, "unknown case id: " + *filter);
  return out;
}

bool all_pass(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const VerificationReport& r) { return r.verdict != Verdict::Fail; });
}

}  // namespace lelong
