#pragma once

#include <functional>
#include <vector>

#include "armlab/matroid.hpp"

namespace armlab {

// Closure-operator tables are capped at 2^15 entries (15-edge grounds, n <= 6)
// because the axiom validator quantifies over all subsets and subset pairs.
inline constexpr int kGroundCapForClosure = 15;

// A matroid closure operator as an explicit function table over the subsets
// of its ground set.
struct ClosureOperator {
  int n = 0;
  EdgeSet ground;
  std::vector<int> positions;
  int pos_of_edge[kMaxEdges] = {};
  std::vector<EdgeBits> table;  // compact-indexed, values within ground

  std::uint32_t compact(EdgeBits ambient) const;
  EdgeBits expand(std::uint32_t idx) const;
  EdgeSet apply(EdgeSet x) const;

  // Tabulates fn over all subsets of ground; values are clipped to ground.
  static ClosureOperator from_function(int n, EdgeSet ground,
                                       const std::function<EdgeSet(EdgeSet)>& fn);
};

// The closure operator of a constructed matroid (rank-preserving-superset
// computation), tabulated.
ClosureOperator closure_operator_of(const Matroid& m);

// The operator induced by a valid basis family through its hyperplanes:
// sigma(A) = intersection of the hyperplanes containing A, or the full ground
// when no hyperplane contains A. Validates the family eagerly.
ClosureOperator closure_from_bases(int n, const std::vector<EdgeSet>& bases);

// Maximal sets that are independent under sigma (x independent iff no element
// of x lies in the closure of x minus that element).
std::vector<EdgeSet> bases_from_closure(const ClosureOperator& sigma);

// Checks extensivity, monotonicity, idempotence and the (guarded) exchange
// property exhaustively over the operator's domain; the report's details
// carry one pass/fail entry per axiom.
AxiomReport validate_closure_axioms(const ClosureOperator& sigma);

}  // namespace armlab
