#include <vector>

#include "armlab/explorer.hpp"
#include "armlab/json_io.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace armlab;
using namespace testsupport;

TEST_CASE("matroid enumeration counts on tiny grounds") {
  // Two elements, rank two: only the free matroid.
  CHECK(enumerate_matroids(2, 2, [](const Matroid&) { return true; }) == 1);
  // Three elements, rank one: every nonempty set of singletons passes.
  CHECK(enumerate_matroids(3, 1, [](const Matroid&) { return true; }) == 7);
  // Six elements, rank five: every nonempty family of 5-subsets has corank
  // one, where exchange always holds.
  std::uint64_t count = enumerate_matroids(6, 5, [](const Matroid& m) {
    CHECK(m.rank() == 5);
    return true;
  });
  CHECK(count == 63);
}

TEST_CASE("enumeration stops when the callback declines") {
  int seen = 0;
  std::uint64_t emitted = enumerate_matroids(6, 5, [&](const Matroid&) {
    return ++seen < 5;
  });
  CHECK(seen == 5);
  CHECK(emitted == 5);
}

TEST_CASE("enumeration caps") {
  auto yes = [](const Matroid&) { return true; };
  CHECK_THROWS_AS(enumerate_matroids(11, 2, yes), CapExceeded);
  CHECK_THROWS_AS(enumerate_matroids(10, 5, yes), CapExceeded);  // C(10,5) = 252
  CHECK_THROWS_AS(enumerate_matroids(0, 0, yes), CapExceeded);
}

TEST_CASE("route agreement and implications across all rank-5 matroids on K_4") {
  // For every matroid in the enumeration, the six characterization routes
  // agree, the recursive hyperplane condition matches them, and the two
  // implication lemmas hold: rigidity implies the prescribed hyperplanes,
  // and prescribed hyperplanes imply the closure axiom C1.
  int arms = 0;
  enumerate_matroids(6, 5, [&](const Matroid& m) {
    bool prop6 = is_arm_prop6(m, 2).passed;
    CHECK(check_D(m, 2).passed == prop6);
    CHECK(check_H(m, 2).passed == prop6);
    CHECK(check_B(m, 2).passed == prop6);
    CHECK(check_Z(m, 2).passed == prop6);
    bool c1 = check_C1(m, 2, Scope::Exhaustive()).passed;
    bool c2 = check_C2(m, 2, Scope::Exhaustive()).passed;
    CHECK((c1 && c2) == prop6);
    CHECK(check_theorem_2dim(m, 2).passed == prop6);

    bool hm = check_hm_subset(m, 2).passed;
    if (prop6) CHECK(hm);  // rigidity matroids own the prescribed hyperplanes
    if (hm) CHECK(c1);     // prescribed hyperplanes already force C1
    arms += prop6;
    return true;
  });
  CHECK(arms == 1);  // the uniform matroid alone
}

TEST_CASE("equivalence confirmation over full enumerations") {
  Finding f = confirm_theorem_2dim(4, 2);
  CHECK(f.verdict == kVerdictEquivalenceConfirmed);
  CHECK(f.n == 4);
  CHECK(f.m == 2);
  CHECK_FALSE(f.matroid.has_value());
  CHECK(f.reports.empty());
  CHECK(f.stats.enumerated == 63);
  CHECK(f.stats.arms_found == 1);
  CHECK(verify_finding(f));

  Finding g = confirm_theorem_2dim(3, 1);
  CHECK(g.verdict == kVerdictEquivalenceConfirmed);
  CHECK(g.stats.enumerated == 7);
  CHECK(g.stats.arms_found == 1);  // the cycle matroid alone
  CHECK(verify_finding(g));
}

TEST_CASE("an injected broken verdict surfaces as a discrepancy that fails re-verification") {
  // Claim the recursive condition holds everywhere: the first non-rigidity
  // matroid contradicts the characterization.
  Finding all_true = confirm_theorem_2dim(
      4, 2, [](const Matroid&, int) { return true; });
  CHECK(all_true.verdict == kVerdictDiscrepancy);
  REQUIRE(all_true.matroid.has_value());
  CHECK(all_true.reports.size() == 2);
  CHECK_FALSE(verify_finding(all_true));  // honest reports expose the injection

  // Claim it holds nowhere: the uniform matroid contradicts it.
  Finding all_false = confirm_theorem_2dim(
      4, 2, [](const Matroid&, int) { return false; });
  CHECK(all_false.verdict == kVerdictDiscrepancy);
  REQUIRE(all_false.matroid.has_value());
  CHECK(all_false.matroid->rank() == 5);
  CHECK_FALSE(verify_finding(all_false));
}

TEST_CASE("the (n=4, m=2) question search exhausts its space without a counterexample") {
  Finding f = search_question(4, 2, 1000, 42);
  CHECK(f.verdict == kVerdictExhausted);
  CHECK_FALSE(f.matroid.has_value());
  CHECK(f.stats.candidates_tested == 1);  // only hm plus all three 4-cycles realizes
  CHECK(f.stats.pruned_inconsistent + f.stats.rejected_axioms +
            f.stats.rejected_hyperplanes ==
        7);
  CHECK(verify_finding(f));

  // Deterministic: a rerun serializes byte-identically.
  Finding g = search_question(4, 2, 1000, 42);
  CHECK(dump_canonical(to_json(f)) == dump_canonical(to_json(g)));
}

TEST_CASE("the closing-corollary form agrees at (n=4, m=2)") {
  Finding f = check_closing_corollary(4, 2, 1000, 7);
  CHECK(f.verdict == kVerdictExhausted);
  CHECK_FALSE(f.matroid.has_value());
  CHECK(verify_finding(f));
}

TEST_CASE("search preconditions") {
  CHECK_THROWS_AS(search_question(3, 2, 10, 1), std::invalid_argument);  // needs n >= m+2
  CHECK_THROWS_AS(search_question(7, 2, 10, 1), CapExceeded);  // 21-edge ground
}

TEST_CASE("verdict-only findings verify by consistency alone") {
  Finding f = search_question(4, 2, 100, 9);
  CHECK(verify_finding(f));
  Finding tampered = f;
  tampered.verdict = kVerdictCounterexample;  // claims a witness it does not carry
  CHECK_FALSE(verify_finding(tampered));
}

TEST_CASE("counterfeit counterexamples fail re-verification") {
  // A counterexample must carry a matroid that keeps the prescribed
  // hyperplanes yet fails the characterization; the uniform matroid passes
  // both, the near-uniform one loses a prescribed hyperplane.
  Finding fake;
  fake.verdict = kVerdictCounterexample;
  fake.n = 4;
  fake.m = 2;
  fake.matroid = uniform_on_k4();
  fake.reports = {check_hm_subset(uniform_on_k4(), 2), is_arm_prop6(uniform_on_k4(), 2)};
  CHECK_FALSE(verify_finding(fake));

  fake.matroid = near_uniform_on_k4();
  fake.reports = {check_hm_subset(near_uniform_on_k4(), 2),
                  is_arm_prop6(near_uniform_on_k4(), 2)};
  CHECK_FALSE(verify_finding(fake));

  // Tampering with a stored report breaks the recomputation match.
  Finding doctored = fake;
  doctored.reports[0].passed = true;
  doctored.reports[0].violations.clear();
  doctored.reports[0].violation_count = 0;
  CHECK_FALSE(verify_finding(doctored));

  // A mismatched ambient size is caught before any recomputation.
  Finding wrong_n = fake;
  wrong_n.n = 5;
  CHECK_FALSE(verify_finding(wrong_n));
}

TEST_CASE("findings survive a serialization round-trip and still verify") {
  Finding f = search_question(4, 2, 500, 11);
  nlohmann::json j = to_json(f);
  Finding back = finding_from_json(j);
  CHECK(back.verdict == f.verdict);
  CHECK(back.stats == f.stats);
  CHECK(verify_finding(back));
  CHECK(dump_canonical(to_json(back)) == dump_canonical(j));
}
