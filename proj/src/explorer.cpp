#include "armlab/explorer.hpp"

#include <algorithm>
#include <random>

#include "armlab/closure.hpp"

namespace armlab {

namespace {

std::uint64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

int ambient_for_ground(int g) {
  for (int n = 2; n <= kMaxVertices; ++n)
    if (edge_count(n) >= g) return n;
  throw CapExceeded("ground does not fit in K(V) with 8 vertices");
}

bool reports_equal(const AxiomReport& a, const AxiomReport& b) {
  if (a.suite != b.suite || a.passed != b.passed) return false;
  if (a.scope.exhaustive != b.scope.exhaustive || a.scope.seed != b.scope.seed ||
      a.scope.count != b.scope.count)
    return false;
  if (a.violation_count != b.violation_count) return false;
  if (a.violations.size() != b.violations.size()) return false;
  for (std::size_t i = 0; i < a.violations.size(); ++i)
    if (!(a.violations[i] == b.violations[i])) return false;
  return a.details == b.details;
}

}  // namespace

std::uint64_t enumerate_matroids(int ground_size, int rank,
                                 const std::function<bool(const Matroid&)>& emit) {
  if (ground_size < 1 || ground_size > 10)
    throw CapExceeded("enumeration ground capped at 10 elements");
  if (rank < 0) throw std::invalid_argument("rank must be nonnegative");
  if (binom(ground_size, rank) > 20)
    throw CapExceeded("enumeration capped at 20 rank-subsets");
  int n = ambient_for_ground(ground_size);
  EdgeSet ground = EdgeSet::from_bits(n, (EdgeBits{1} << ground_size) - 1);

  std::vector<EdgeBits> rsubs;
  for (EdgeBits s = 0; s < (EdgeBits{1} << ground_size); ++s)
    if (std::popcount(s) == rank) rsubs.push_back(s);

  std::uint64_t emitted = 0;
  for (std::uint32_t fam = 1; fam < (1u << rsubs.size()); ++fam) {
    std::vector<EdgeSet> bases;
    for (std::size_t i = 0; i < rsubs.size(); ++i)
      if ((fam >> i) & 1) bases.push_back(EdgeSet::from_bits(n, rsubs[i]));
    try {
      Matroid m = Matroid::from_bases_on(n, ground, std::move(bases));
      ++emitted;
      if (!emit(m)) break;
    } catch (const ExchangeViolation&) {
    } catch (const UnequalCardinality&) {
    }
  }
  return emitted;
}

Finding confirm_theorem_2dim(int n, int m, const ConditionOverride& override_2dim) {
  if (m < 1 || n < m + 1)
    throw std::invalid_argument("need m >= 1 and n >= m+1");
  int target = m * n - m * (m + 1) / 2;
  Finding f;
  f.n = n;
  f.m = m;
  f.verdict = kVerdictEquivalenceConfirmed;
  enumerate_matroids(edge_count(n), target, [&](const Matroid& mat) {
    ++f.stats.enumerated;
    AxiomReport recursive = check_theorem_2dim(mat, m);
    AxiomReport rigidity = is_arm_prop6(mat, m);
    if (rigidity.passed) ++f.stats.arms_found;
    bool condition = override_2dim ? override_2dim(mat, m) : recursive.passed;
    if (condition != rigidity.passed) {
      f.verdict = kVerdictDiscrepancy;
      f.matroid = mat;
      f.reports = {recursive, rigidity};
      return false;
    }
    return true;
  });
  return f;
}

namespace {

// Candidate machinery shared by search_question and check_closing_corollary.
struct CandidateSearch {
  int n = 0;
  int m = 0;
  EdgeSet ground;
  std::vector<EdgeBits> hm;      // required hyperplanes
  std::vector<EdgeBits> extras;  // sets incomparable with every hm member
  SearchStats stats;

  // passed the candidate's realized matroid and the hm-subset report; return
  // an optional counterexample finding to stop the search
  std::function<std::optional<Finding>(const Matroid&, const AxiomReport&)> test;

  void init(int n_, int m_) {
    n = n_;
    m = m_;
    if (n < m + 2) throw std::invalid_argument("need n >= m+2");
    int g = edge_count(n);
    if (g > kGroundCapForClosure)
      throw CapExceeded("candidate validation needs a ground of at most 15 edges");
    ground = EdgeSet::from_bits(n, (EdgeBits{1} << g) - 1);
    for (const EdgeSet& h : hm_family(n, m)) hm.push_back(h.bits);
    std::sort(hm.begin(), hm.end());
    for (EdgeBits t = 0; t < (EdgeBits{1} << g); ++t) {
      bool incomparable = true;
      for (EdgeBits h : hm)
        if ((t & ~h) == 0 || (h & ~t) == 0) {
          incomparable = false;
          break;
        }
      if (incomparable && t != ground.bits) extras.push_back(t);
    }
  }

  // Standard hyperplane-axiom prune: distinct members H1, H2 and an element
  // x outside both must admit a member covering (H1 ∩ H2) ∪ {x}.
  bool consistent(const std::vector<EdgeBits>& fam) const {
    for (std::size_t i = 0; i < fam.size(); ++i) {
      for (std::size_t j = i + 1; j < fam.size(); ++j) {
        EdgeBits both = fam[i] & fam[j];
        EdgeBits outside = ground.bits & ~(fam[i] | fam[j]);
        while (outside) {
          int x = std::countr_zero(outside);
          outside &= outside - 1;
          EdgeBits need = both | (EdgeBits{1} << x);
          bool covered = false;
          for (EdgeBits h : fam)
            if ((need & ~h) == 0) {
              covered = true;
              break;
            }
          if (!covered) return false;
        }
      }
    }
    return true;
  }

  // Reconstructs, validates and tests the family hm ∪ S; returns a finding
  // to stop on, nullopt to continue.
  std::optional<Finding> run_candidate(const std::vector<EdgeBits>& chosen) {
    for (std::size_t i = 0; i < chosen.size(); ++i)
      for (std::size_t j = i + 1; j < chosen.size(); ++j)
        if ((chosen[i] & ~chosen[j]) == 0 || (chosen[j] & ~chosen[i]) == 0) {
          ++stats.pruned_inconsistent;
          return std::nullopt;
        }
    std::vector<EdgeBits> fam = hm;
    fam.insert(fam.end(), chosen.begin(), chosen.end());
    std::sort(fam.begin(), fam.end());
    if (!consistent(fam)) {
      ++stats.pruned_inconsistent;
      return std::nullopt;
    }
    auto sigma_fn = [&](EdgeSet x) {
      EdgeBits acc = ground.bits;
      bool any = false;
      for (EdgeBits h : fam)
        if ((x.bits & ~h) == 0) {
          acc = any ? (acc & h) : h;
          any = true;
        }
      return EdgeSet::from_bits(n, any ? acc : ground.bits);
    };
    ClosureOperator sigma = ClosureOperator::from_function(n, ground, sigma_fn);
    if (!validate_closure_axioms(sigma).passed) {
      ++stats.rejected_axioms;
      return std::nullopt;
    }
    std::optional<Matroid> mat;
    try {
      mat = Matroid::from_bases_on(n, ground, bases_from_closure(sigma));
    } catch (const std::runtime_error&) {
      ++stats.rejected_axioms;
      return std::nullopt;
    }
    AxiomReport hmrep = check_hm_subset(*mat, m);
    if (!hmrep.passed) {
      ++stats.rejected_hyperplanes;
      return std::nullopt;
    }
    ++stats.candidates_tested;
    return test(*mat, hmrep);
  }

  // Exhaustive when every subset of the incomparable pool can be visited;
  // otherwise seeded random subsets until `budget` candidates are tested.
  Finding run(std::uint64_t budget, std::uint64_t seed) {
    Finding f;
    f.n = n;
    f.m = m;
    f.seed = seed;
    f.budget = budget;
    if (extras.size() <= 12) {
      for (std::uint32_t smask = 0; smask < (1u << extras.size()); ++smask) {
        std::vector<EdgeBits> chosen;
        for (std::size_t i = 0; i < extras.size(); ++i)
          if ((smask >> i) & 1) chosen.push_back(extras[i]);
        if (auto found = run_candidate(chosen)) {
          found->seed = seed;
          found->budget = budget;
          found->stats = stats;
          return *found;
        }
      }
      f.verdict = kVerdictExhausted;
    } else {
      std::mt19937_64 rng(seed);
      std::uint64_t attempts = 0;
      std::uint64_t attempt_cap = budget * 64 + 64;
      while (stats.candidates_tested < budget && attempts < attempt_cap) {
        ++attempts;
        std::size_t take = rng() % 9;  // up to 8 extra hyperplanes at a time
        std::vector<EdgeBits> chosen;
        for (std::size_t i = 0; i < take; ++i)
          chosen.push_back(extras[rng() % extras.size()]);
        std::sort(chosen.begin(), chosen.end());
        chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
        if (auto found = run_candidate(chosen)) {
          found->seed = seed;
          found->budget = budget;
          found->stats = stats;
          return *found;
        }
      }
      f.verdict = kVerdictBudgetExhausted;
    }
    f.stats = stats;
    return f;
  }
};

}  // namespace

Finding search_question(int n, int m, std::uint64_t budget, std::uint64_t seed) {
  CandidateSearch cs;
  cs.init(n, m);
  cs.test = [&](const Matroid& mat,
                const AxiomReport& hmrep) -> std::optional<Finding> {
    AxiomReport rigidity = is_arm_prop6(mat, cs.m);
    if (rigidity.passed) return std::nullopt;
    Finding f;
    f.verdict = kVerdictCounterexample;
    f.n = cs.n;
    f.m = cs.m;
    f.matroid = mat;
    f.reports = {hmrep, rigidity};
    return f;
  };
  return cs.run(budget, seed);
}

Finding check_closing_corollary(int n, int m, std::uint64_t budget,
                                std::uint64_t seed) {
  CandidateSearch cs;
  cs.init(n, m);
  cs.test = [&](const Matroid& mat,
                const AxiomReport& hmrep) -> std::optional<Finding> {
    AxiomReport recursive = check_theorem_2dim(mat, cs.m);
    if (recursive.passed) return std::nullopt;
    Finding f;
    f.verdict = kVerdictCounterexample;
    f.n = cs.n;
    f.m = cs.m;
    f.matroid = mat;
    f.reports = {hmrep, recursive};
    return f;
  };
  return cs.run(budget, seed);
}

bool verify_finding(const Finding& f) {
  if (!f.matroid.has_value()) {
    if (!f.reports.empty()) return false;
    return f.verdict == kVerdictEquivalenceConfirmed ||
           f.verdict == kVerdictExhausted || f.verdict == kVerdictBudgetExhausted;
  }
  const Matroid& mat = *f.matroid;
  if (mat.n() != f.n) return false;
  bool hm_pass = false, hm_seen = false;
  bool prop6_seen = false, prop6_pass = false;
  bool rec_seen = false, rec_pass = false;
  for (const AxiomReport& rep : f.reports) {
    AxiomReport fresh;
    if (rep.suite == "hm") {
      fresh = check_hm_subset(mat, f.m);
      hm_seen = true;
      hm_pass = fresh.passed;
    } else if (rep.suite == "prop6") {
      fresh = is_arm_prop6(mat, f.m);
      prop6_seen = true;
      prop6_pass = fresh.passed;
    } else if (rep.suite == "2dim") {
      fresh = check_theorem_2dim(mat, f.m);
      rec_seen = true;
      rec_pass = fresh.passed;
    } else {
      return false;
    }
    if (!reports_equal(rep, fresh)) return false;
  }
  if (f.verdict == kVerdictCounterexample)
    return hm_seen && hm_pass &&
           ((prop6_seen && !prop6_pass) || (rec_seen && !rec_pass));
  if (f.verdict == kVerdictDiscrepancy)
    return prop6_seen && rec_seen && prop6_pass != rec_pass;
  return false;
}

}  // namespace armlab
