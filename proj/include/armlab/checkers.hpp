#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "armlab/matroid.hpp"
#include "armlab/reports.hpp"

namespace armlab {

struct PreconditionNotMet : std::runtime_error {
  explicit PreconditionNotMet(const std::string& what) : std::runtime_error(what) {}
};

// sigma(E) = K(V(E)). Matroids whose ground is a complete K(X) only.
bool is_rigid(const Matroid& m, EdgeSet e);

// Closure axiom of rigidity: for all E,F with |V(E) ∩ V(F)| < m,
// sigma(E ∪ F) ⊆ K(V(E)) ∪ K(V(F)).
// Exhaustive over all subset pairs for n <= 5; beyond that an exhaustive
// request throws CapExceeded and a sampled scope checks all flat pairs plus
// seeded random pairs.
AxiomReport check_C1(const Matroid& m, int mdim, Scope scope);

// Gluing axiom of rigidity: rigid E,F with |V(E) ∩ V(F)| >= m union to a
// rigid set. Rigidity depends only on the closure, so the check quantifies
// over pairs of closed complete supports and is exhaustive at every n; the
// scope argument is accepted for interface symmetry.
AxiomReport check_C2(const Matroid& m, int mdim, Scope scope);

// The three per-instance conditions whose pairwise conjunction characterizes
// m-dimensional abstract rigidity matroids: (i) every vertex star minus m-1
// edges is a cocircuit, (ii) every K_{m+2} is a circuit, (iii) rank(K(V)) =
// m|V| - C(m+1,2). Report passes iff at least two hold; details carry each.
AxiomReport is_arm_prop6(const Matroid& m, int mdim);

// Cocircuit route: D1 = every cocircuit touches more than |V|-m vertices,
// D2 = every vertex star minus m-1 edges is a cocircuit.
AxiomReport check_D(const Matroid& m, int mdim);
// Hyperplane route: H1 = no hyperplane has m or more vertices of full
// valence, H2 = every Delta_v^A with |A| = m-1 is a hyperplane.
AxiomReport check_H(const Matroid& m, int mdim);
// Basis route: B1 = every basis spans V with minimum valence m,
// B2 = every bigstar of an m-set is a basis.
AxiomReport check_B(const Matroid& m, int mdim);
// Circuit route: Z1 = no circuit has a vertex of valence at most m,
// Z2 = every K_{m+2} is a circuit.
AxiomReport check_Z(const Matroid& m, int mdim);

// Sparsity count: |E ∩ K(U)| <= m|U| - C(m+1,2) for every vertex subset U
// with |U| >= m. Checking induced subgraphs is equivalent to checking all
// subsets F ⊆ E with |V(F)| >= m.
AxiomReport laman_check(EdgeSet e, int mdim);

// Every independent set of the matroid passes laman_check; exhaustive over
// independents via tables, or sampled greedy-independent draws per scope.
AxiomReport check_laman_independents(const Matroid& m, int mdim, Scope scope);

// Under the precondition that every vertex star minus m-1 edges is a
// cocircuit (PreconditionNotMet otherwise): (i) no circuit has a vertex of
// valence <= m; (ii) attaching a fresh vertex by k <= m edges preserves
// independence; (iii) if the gluing axiom holds, attaching by k >= m edges
// preserves rigidity. (ii) quantifies over all independent sets (ground
// capped at 15 edges).
AxiomReport check_extension_lemma(const Matroid& m, int mdim);

// Every member of hm_family(n, m) is a hyperplane. details["strict"] reports
// whether other hyperplanes exist (requires family enumeration; omitted with
// a note beyond the table cap).
AxiomReport check_hm_subset(const Matroid& m, int mdim);

// Every rigid set on at least m+1 vertices is m-vertex-connected.
// Exhaustive over all subsets via tables; sampled scope draws random rigid
// sets by seeded edge-deletion from closed complete supports.
AxiomReport check_connect(const Matroid& m, int mdim, Scope scope);

// Recursive hyperplane condition: for every X ⊆ V, every member of
// hm1_family over X is a hyperplane of the restriction to K(X). This is
// equivalent to being an abstract rigidity matroid; tests assert as much.
AxiomReport check_theorem_2dim(const Matroid& m, int mdim);

// The same condition checked only along the prefixes of one vertex ordering
// (which already implies the full condition). order must be a permutation of
// the vertices.
AxiomReport check_theorem_2dim_filtration(const Matroid& m, int mdim,
                                          const std::vector<int>& order);

// When all hm1 members are closed, K(V ∖ v0) is closed for every v0; when
// they are hyperplanes, rank(K(V ∖ v0)) = rank(K(V)) - m. With
// require_precondition, a failed hypothesis throws PreconditionNotMet;
// without it the conclusions are evaluated unconditionally (negative tests).
AxiomReport check_twoparts(const Matroid& m, int mdim,
                           bool require_precondition = true);

// When all hm1 members are closed, every K(V') with |V'| = m is independent.
AxiomReport check_bottom(const Matroid& m, int mdim,
                         bool require_precondition = true);

}  // namespace armlab
