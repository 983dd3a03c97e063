#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "armlab/checkers.hpp"
#include "armlab/matroid.hpp"

namespace armlab {

inline constexpr const char* kVerdictEquivalenceConfirmed = "equivalence-confirmed";
inline constexpr const char* kVerdictCounterexample = "counterexample";
inline constexpr const char* kVerdictDiscrepancy = "discrepancy";
inline constexpr const char* kVerdictExhausted = "exhausted-no-counterexample";
inline constexpr const char* kVerdictBudgetExhausted = "budget-exhausted";

// Deterministic search counters; no wall-clock, so identical inputs give
// byte-identical findings.
struct SearchStats {
  std::uint64_t enumerated = 0;            // matroids enumerated
  std::uint64_t arms_found = 0;            // positive rigidity verdicts
  std::uint64_t candidates_tested = 0;     // candidates fully reconstructed and tested
  std::uint64_t pruned_inconsistent = 0;   // hyperplane-consistency prunes
  std::uint64_t rejected_axioms = 0;       // closure-axiom failures
  std::uint64_t rejected_hyperplanes = 0;  // reconstruction lost a required hyperplane

  friend bool operator==(const SearchStats&, const SearchStats&) = default;
};

// Outcome of one search or confirmation run. A counterexample carries the
// serialized candidate and enough reports to re-verify the claim from the
// matroid alone (see verify_finding).
struct Finding {
  std::string verdict;
  int n = 0;
  int m = 0;
  std::uint64_t seed = 0;
  std::uint64_t budget = 0;
  std::optional<Matroid> matroid;
  std::vector<AxiomReport> reports;
  SearchStats stats;
};

// All matroids of the given rank on an abstract ground of ground_size
// elements (embedded as the first edges of the smallest ambient K(V)),
// produced by filtering every nonempty family of rank-subsets through the
// basis-exchange validator. Deduplicated by basis family, not isomorphism.
// The callback returns false to stop; the return value counts emissions.
// Hard caps: ground_size <= 10 and C(ground_size, rank) <= 20.
std::uint64_t enumerate_matroids(int ground_size, int rank,
                                 const std::function<bool(const Matroid&)>& emit);

// Hook for mutation tests: replaces the recursive-hyperplane verdict when
// set. The honest checker is always run and attached to any discrepancy.
using ConditionOverride = std::function<bool(const Matroid&, int mdim)>;

// Over every enumerated matroid of rank m*n - C(m+1,2) on the full K(V),
// confirm that the recursive hyperplane condition and the 2-of-3 rigidity
// characterization agree. Any disagreement (an implementation bug, or an
// injected override) is reported as a discrepancy with both reports attached.
Finding confirm_theorem_2dim(int n, int m,
                             const ConditionOverride& override_2dim = nullptr);

// Search for a matroid whose hyperplanes include all of hm_family(n, m) yet
// which fails the 2-of-3 rigidity characterization. Candidates are antichain
// hyperplane families hm ∪ S with S drawn from the sets incomparable with
// every hm member; each is pruned for hyperplane consistency, reconstructed
// to a closure operator by flat intersection, validated, realized, and
// tested. Exhaustive over all S when the incomparable pool is small (covers
// n=4, m=2); otherwise seeded random subsets until `budget` candidates have
// been fully tested. Requires n >= m+2; ground capped at 15 edges.
Finding search_question(int n, int m, std::uint64_t budget, std::uint64_t seed);

// Same candidate stream; tests instead whether every realized candidate with
// hm_family ⊆ hyperplanes satisfies the recursive hyperplane condition on
// every restriction (the implied-corollary form). A violator is reported as
// a counterexample finding.
Finding check_closing_corollary(int n, int m, std::uint64_t budget,
                                std::uint64_t seed);

// Re-derives every attached report from the carried matroid alone and checks
// the verdict is consistent with what was re-derived. Findings without a
// matroid verify iff they carry no reports and a non-failure verdict.
bool verify_finding(const Finding& f);

}  // namespace armlab
