#include <doctest.h>

#include <chrono>
#include <cmath>

#include "lelong/error.hpp"
#include "lelong/mass.hpp"
#include "lelong/theorems.hpp"

using namespace lelong;

namespace {

const CorpusCase& find(const std::vector<CorpusCase>& corpus, const std::string& id) {
  for (const auto& c : corpus)
    if (c.id == id) return c;
  FAIL("no corpus case " << id);
  throw 0;
}

}  // namespace

TEST_SUITE("theorems") {

TEST_CASE("positive verifier examples") {
  const auto corpus = standard_corpus(42);
  SuiteConfig cfg;
  const auto one = verify_positive_lambda("x", find(corpus, "pos-r1-const").current, cfg);
  CHECK(one.verdict == Verdict::Pass);
  CHECK(one.observed[0] == doctest::Approx(2.5).epsilon(1e-10));
  const auto& r23 = find(corpus, "pos-r23-orbit").current;
  const auto two_thirds = verify_positive_lambda("x", r23, cfg);
  CHECK(two_thirds.verdict == Verdict::Pass);
  CHECK(two_thirds.observed[3] == doctest::Approx(positive_lelong_limit(r23)));
  const auto bump = verify_positive_lambda("x", find(corpus, "pos-sqrt2-poisson").current, cfg);
  CHECK(bump.verdict == Verdict::Pass);
  CHECK(bump.observed[1] > 0.0);
  CHECK(bump.observed[3] > 0.0);
  CHECK_THROWS_AS(verify_positive_lambda("x", find(corpus, "neg-1-single").current, cfg), Error);
}

TEST_CASE("negative verifier examples") {
  const auto corpus = standard_corpus(42);
  SuiteConfig cfg;
  const auto single = verify_negative_periodic("x", find(corpus, "neg-1-single").current, cfg);
  CHECK(single.verdict == Verdict::Pass);
  CHECK(single.observed[1] == 0.0);
  CHECK(single.observed[5] == 0.0);
  const auto fam = verify_negative_periodic("x", find(corpus, "neg-1-family").current, cfg);
  CHECK(fam.verdict == Verdict::Pass);
  CHECK(fam.observed[2] < kZeroLelongFraction);
  const auto b0 = verify_negative_periodic("x", find(corpus, "neg-1-family-b0").current, cfg);
  CHECK(b0.verdict == Verdict::Pass);
  CHECK_THROWS_AS(verify_negative_periodic("x", find(corpus, "pos-r1-const").current, cfg), Error);
}

TEST_CASE("divergence verifier examples") {
  const auto corpus = standard_corpus(42);
  SuiteConfig cfg;
  const auto d1 = verify_b0_divergence("x", find(corpus, "div-r1-b0").current, cfg);
  CHECK(d1.verdict == Verdict::Pass);
  // The b0 bracket at lambda = 1 is (1 + |alpha|^2)(1/2 - log r); nu = 2 (a0 A + b0 B).
  CHECK(d1.observed[0] == doctest::Approx(2.0 * 1.25).epsilon(1e-8));
  const auto d2 = verify_b0_divergence("x", find(corpus, "div-r12-poisson-clin").current, cfg);
  CHECK(d2.verdict == Verdict::Pass);
  CHECK_THROWS_AS(verify_b0_divergence("x", find(corpus, "neg-1-family").current, cfg), Error);
}

TEST_CASE("tolerance scale zero forces failures") {
  SuiteConfig cfg;
  cfg.tol_scale = 0.0;
  const auto r = run_corpus(42, cfg, std::string("pos-r12-orbit"));
  REQUIRE(r.size() == 1);
  CHECK(r[0].verdict == Verdict::Fail);
  const auto n = run_corpus(42, cfg, std::string("neg-1-family"));
  CHECK(n[0].verdict == Verdict::Fail);
}

TEST_CASE("lemma lattices") {
  SuiteConfig cfg;
  const auto t0 = std::chrono::steady_clock::now();
  const auto reps = verify_lemma_bounds(cfg);
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  CHECK(dt < 10.0);
  REQUIRE(reps.size() == 7);
  for (const auto& r : reps) {
    CHECK(r.claim == Claim::LemmaBound);
    INFO(r.case_id);
    if (r.case_id == "lemma-interval-kernel") {
      // The printed coefficient 1/(1 + (N+1)^2) is too large for N < 0.
      CHECK(r.verdict == Verdict::Fail);
      CHECK(r.observed[4] < 0.0);
    } else {
      CHECK(r.verdict == Verdict::Pass);
    }
  }
  const auto& ib = reps[2];
  CHECK(ib.case_id == "lemma-ib-bound");
  CHECK(ib.observed[4] > 0.0);
}

TEST_CASE("run corpus is deterministic and filterable") {
  SuiteConfig cfg;
  const auto a = run_corpus(42, cfg, std::string("neg-12-orbit-family"));
  const auto b = run_corpus(42, cfg, std::string("neg-12-orbit-family"));
  REQUIRE(a.size() == 1);
  CHECK(a == b);
  CHECK_THROWS_AS(run_corpus(42, cfg, std::string("no-such-case")), Error);
  const auto lemma = run_corpus(42, cfg, std::string("lemma-ia-bound"));
  REQUIRE(lemma.size() == 1);
  CHECK(lemma[0].case_id == "lemma-ia-bound");
}

TEST_CASE("verdicts are recomputable from observed values") {
  SuiteConfig cfg;
  for (const auto& r : run_corpus(42, cfg)) {
    INFO(r.case_id);
    bool pass = false;
    const auto& o = r.observed;
    switch (r.claim) {
      case Claim::PositiveLelong:
        pass = o[1] > 0.0 && (r.details.find("closed-form") != std::string::npos ? o[4] <= kPositiveLimitRelTol
                                                                                  : o[0] >= o[3] * (1.0 - kLowerBoundSlack));
        break;
      case Claim::ZeroLelong:
        pass = o[1] < kZeroLelongFraction * o[0] && (o[5] == 0.0 || o[3] / o[4] < kZeroLelongTailFraction);
        break;
      case Claim::Divergence: pass = o[0] > 0.0 && o[2] > kDivergenceRSquared; break;
      case Claim::LemmaBound: pass = o[1] == 0.0 && o[0] > 0.0; break;
    }
    CHECK(pass == (r.verdict == Verdict::Pass));
  }
}

TEST_CASE("whole corpus outcome") {
  SuiteConfig cfg;
  const auto reps = run_corpus(42, cfg);
  int failures = 0;
  for (const auto& r : reps)
    if (r.verdict == Verdict::Fail) {
      ++failures;
      CHECK(r.case_id == "lemma-interval-kernel");
    }
  CHECK(failures == 1);
  CHECK_FALSE(all_pass(reps));
}

}  // TEST_SUITE
