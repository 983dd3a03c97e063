#include <stdexcept>
#include <vector>

#include "armlab/checkers.hpp"
#include "armlab/rigidity.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace armlab;
using namespace testsupport;

namespace {

EdgeSet es(int n, EdgeBits bits) { return EdgeSet::from_bits(n, bits); }

bool has_kind(const AxiomReport& rep, const std::string& kind) {
  for (const Witness& w : rep.violations)
    if (w.kind == kind) return true;
  return false;
}

}  // namespace

TEST_CASE("rigid sets: complete closures only") {
  Matroid g25 = generic_rigidity_matroid(5, 2, 3);
  // Small complete graphs and bigstars are rigid.
  CHECK(is_rigid(g25, complete_edges(VertexSet::of(5, {0, 1, 2}))));
  CHECK(is_rigid(g25, complete_edges(VertexSet::full(5))));
  CHECK(is_rigid(g25, bigstar(VertexSet::of(5, {0, 1}))));
  // A spanning tree path is flexible in the plane.
  CHECK_FALSE(is_rigid(g25, EdgeSet::of(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}})));
  // Two triangles sharing one vertex hinge at it.
  EdgeSet bowtie = edge_union(complete_edges(VertexSet::of(5, {0, 1, 2})),
                              complete_edges(VertexSet::of(5, {2, 3, 4})));
  CHECK_FALSE(is_rigid(g25, bowtie));

  // Two disjoint triangles on six vertices.
  Matroid g26 = generic_rigidity_matroid(6, 2, 3);
  EdgeSet two = edge_union(complete_edges(VertexSet::of(6, {0, 1, 2})),
                           complete_edges(VertexSet::of(6, {3, 4, 5})));
  CHECK_FALSE(is_rigid(g26, two));

  // In the cycle matroid a tree is rigid, a disconnected forest is not.
  Matroid c5 = Matroid::cycle(5);
  CHECK(is_rigid(c5, EdgeSet::of(5, {{0, 1}, {1, 2}})));
  CHECK_FALSE(is_rigid(c5, EdgeSet::of(5, {{0, 1}, {2, 3}})));
}

TEST_CASE("closure axiom C1 passes on rigidity matroids") {
  for (int n = 4; n <= 5; ++n) {
    AxiomReport rep = check_C1(generic_rigidity_matroid(n, 2, 5), 2, Scope::Exhaustive());
    CHECK(rep.passed);
    CHECK(rep.scope.exhaustive);
    CHECK(rep.violation_count == 0);
  }
  CHECK(check_C1(Matroid::cycle(5), 1, Scope::Exhaustive()).passed);
  CHECK(check_C1(uniform_on_k4(), 2, Scope::Exhaustive()).passed);
}

TEST_CASE("closure axiom C1 fails on the near-uniform matroid") {
  AxiomReport rep = check_C1(near_uniform_on_k4(), 2, Scope::Exhaustive());
  CHECK_FALSE(rep.passed);
  CHECK(rep.violation_count > 0);
  CHECK(has_kind(rep, "closure-escapes-supports"));
}

TEST_CASE("closure axiom C1 fails with the wrong dimension") {
  // At m=3 two planar-rigid blocks overlapping in two vertices still merge.
  AxiomReport rep = check_C1(generic_rigidity_matroid(5, 2, 5), 3, Scope::Exhaustive());
  CHECK_FALSE(rep.passed);
  CHECK(has_kind(rep, "closure-escapes-supports"));
}

TEST_CASE("closure axiom C1 scope handling at n=6") {
  Matroid g = generic_rigidity_matroid(6, 2, 6);
  CHECK_THROWS_AS(check_C1(g, 2, Scope::Exhaustive()), CapExceeded);
  AxiomReport rep = check_C1(g, 2, Scope::Sampled(13, 400));
  CHECK(rep.passed);
  CHECK_FALSE(rep.scope.exhaustive);
  CHECK(rep.scope.seed == 13);
}

TEST_CASE("gluing axiom C2 passes on rigidity matroids and is support-exhaustive") {
  for (int n = 4; n <= 6; ++n) {
    AxiomReport rep = check_C2(generic_rigidity_matroid(n, 2, 7), 2, Scope::Exhaustive());
    CHECK(rep.passed);
    CHECK(rep.scope.exhaustive);  // exhaustive at every n by support reduction
  }
  CHECK(check_C2(Matroid::cycle(5), 1, Scope::Exhaustive()).passed);
}

TEST_CASE("gluing axiom C2 fails on the near-uniform matroid") {
  // Two triangles sharing two vertices union to the five-edge dependent set,
  // which is one rank short of complete.
  AxiomReport rep = check_C2(near_uniform_on_k4(), 2, Scope::Exhaustive());
  CHECK_FALSE(rep.passed);
  CHECK(has_kind(rep, "union-not-rigid"));
}

TEST_CASE("gluing axiom C2 fails with the wrong dimension") {
  // At m=1 two triangles overlapping in one vertex would have to merge.
  AxiomReport rep = check_C2(generic_rigidity_matroid(5, 2, 7), 1, Scope::Exhaustive());
  CHECK_FALSE(rep.passed);
  CHECK(has_kind(rep, "union-not-rigid"));
}

TEST_CASE("two-of-three characterization: positive instances") {
  struct Row {
    Matroid m;
    int mdim;
  };
  std::vector<Row> rows;
  rows.push_back({cycle_matroid_arm(4), 1});
  rows.push_back({cycle_matroid_arm(5), 1});
  rows.push_back({uniform_on_k4(), 2});
  rows.push_back({generic_rigidity_matroid(5, 2, 8), 2});
  rows.push_back({free_on_k4(), 3});  // generic at m=3, n=4 is free
  for (const Row& r : rows) {
    AxiomReport rep = is_arm_prop6(r.m, r.mdim);
    CHECK(rep.passed);
    CHECK(rep.violations.empty());
    CHECK(rep.details["stars_minus_are_cocircuits"] == true);
    CHECK(rep.details["km2_are_circuits"] == true);
    CHECK(rep.details["rank_formula"] == true);
  }
}

TEST_CASE("two-of-three characterization: near-uniform keeps only the rank") {
  AxiomReport rep = is_arm_prop6(near_uniform_on_k4(), 2);
  CHECK_FALSE(rep.passed);
  CHECK(rep.details["stars_minus_are_cocircuits"] == false);
  CHECK(rep.details["km2_are_circuits"] == false);
  CHECK(rep.details["rank_formula"] == true);
  CHECK((has_kind(rep, "star-minus-not-cocircuit") || has_kind(rep, "km2-not-circuit")));
}

TEST_CASE("two-of-three characterization: other negative instances") {
  AxiomReport wrong_rank = is_arm_prop6(free_on_k4(), 2);
  CHECK_FALSE(wrong_rank.passed);
  CHECK(wrong_rank.details["rank_formula"] == false);

  AxiomReport c = is_arm_prop6(Matroid::cycle(4), 2);
  CHECK_FALSE(c.passed);
  CHECK(c.details["rank_formula"] == false);
  CHECK(c.details["km2_are_circuits"] == false);
}

TEST_CASE("characterization checkers demand a complete ground and a dimension") {
  Matroid r = Matroid::from_bases_on(4, es(4, 0b000111), {es(4, 0b000011)});
  CHECK_THROWS_AS(is_arm_prop6(r, 2), PreconditionNotMet);
  CHECK_THROWS_AS(check_D(r, 2), PreconditionNotMet);
  CHECK_THROWS_AS(is_arm_prop6(uniform_on_k4(), 0), std::invalid_argument);
  CHECK_THROWS_AS(check_C1(uniform_on_k4(), -1, Scope::Exhaustive()), std::invalid_argument);
}

TEST_CASE("cocircuit route D") {
  CHECK(check_D(Matroid::cycle(4), 1).passed);
  CHECK(check_D(generic_rigidity_matroid(5, 2, 9), 2).passed);
  CHECK(check_D(free_on_k4(), 3).passed);

  // Wrong dimension on the cycle matroid: stars minus one edge are not cuts.
  AxiomReport c = check_D(Matroid::cycle(4), 2);
  CHECK_FALSE(c.passed);
  CHECK(c.details["D1"] == true);
  CHECK(c.details["D2"] == false);
  CHECK(has_kind(c, "star-minus-not-cocircuit"));

  // Near-uniform: the loop-like cocircuit {23} spans too few vertices.
  AxiomReport nu = check_D(near_uniform_on_k4(), 2);
  CHECK_FALSE(nu.passed);
  CHECK(nu.details["D1"] == false);
  CHECK(nu.details["D2"] == false);
  CHECK(has_kind(nu, "cocircuit-too-few-vertices"));
}

TEST_CASE("hyperplane route H") {
  CHECK(check_H(Matroid::cycle(4), 1).passed);
  CHECK(check_H(uniform_on_k4(), 2).passed);
  CHECK(check_H(generic_rigidity_matroid(5, 2, 10), 2).passed);
  CHECK(check_H(free_on_k4(), 3).passed);

  // Near-uniform: the five-edge hyperplane has two saturated vertices, and
  // some Delta sets are not hyperplanes.
  AxiomReport nu = check_H(near_uniform_on_k4(), 2);
  CHECK_FALSE(nu.passed);
  CHECK(nu.details["H1"] == false);
  CHECK(nu.details["H2"] == false);
  CHECK(has_kind(nu, "hyperplane-too-many-full-valence-vertices"));
  CHECK(has_kind(nu, "delta-not-hyperplane"));
}

TEST_CASE("basis route B") {
  CHECK(check_B(Matroid::cycle(4), 1).passed);
  CHECK(check_B(uniform_on_k4(), 2).passed);
  CHECK(check_B(generic_rigidity_matroid(5, 2, 11), 2).passed);
  CHECK(check_B(free_on_k4(), 3).passed);

  // Cycle matroid at m=2: spanning trees have leaves, bigstars are no bases.
  AxiomReport c = check_B(Matroid::cycle(4), 2);
  CHECK_FALSE(c.passed);
  CHECK(c.details["B1"] == false);
  CHECK(c.details["B2"] == false);
  CHECK(has_kind(c, "basis-bad-valence"));
  CHECK(has_kind(c, "bigstar-not-basis"));

  // Near-uniform: every basis still spans well, but one bigstar is dependent.
  AxiomReport nu = check_B(near_uniform_on_k4(), 2);
  CHECK_FALSE(nu.passed);
  CHECK(nu.details["B1"] == true);
  CHECK(nu.details["B2"] == false);
  CHECK(has_kind(nu, "bigstar-not-basis"));
}

TEST_CASE("circuit route Z") {
  CHECK(check_Z(Matroid::cycle(4), 1).passed);
  CHECK(check_Z(uniform_on_k4(), 2).passed);
  CHECK(check_Z(generic_rigidity_matroid(5, 2, 12), 2).passed);
  CHECK(check_Z(free_on_k4(), 3).passed);

  // Free matroid at m=2: no circuit exists, so K_4 fails to be one.
  AxiomReport f = check_Z(free_on_k4(), 2);
  CHECK_FALSE(f.passed);
  CHECK(f.details["Z1"] == true);  // vacuous
  CHECK(f.details["Z2"] == false);
  CHECK(has_kind(f, "km2-not-circuit"));

  // Near-uniform: its one circuit has a valence-2 vertex.
  AxiomReport nu = check_Z(near_uniform_on_k4(), 2);
  CHECK_FALSE(nu.passed);
  CHECK(nu.details["Z1"] == false);
  CHECK(nu.details["Z2"] == false);
  CHECK(has_kind(nu, "circuit-low-valence"));
}

TEST_CASE("sparsity counts") {
  // K_4 carries one edge too many for the plane.
  AxiomReport k4 = laman_check(complete_edges(VertexSet::full(4)), 2);
  CHECK_FALSE(k4.passed);
  CHECK(has_kind(k4, "sparsity-violation"));

  CHECK(laman_check(complete_edges(VertexSet::full(4)).without(5), 2).passed);
  CHECK(laman_check(EdgeSet::of(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}}), 1).passed);
  CHECK(laman_check(complete_edges(VertexSet::of(5, {0, 1, 2})), 2).passed);

  // The double banana overshoots the planar count: 11 edges > 2*6-3.
  AxiomReport banana = laman_check(double_banana(), 2);
  CHECK_FALSE(banana.passed);

  // In three dimensions it satisfies every count (11 <= 3*6-6, and each
  // block is exactly tight), which is why counting alone cannot certify
  // spatial rigidity: the hinge leaves it flexible anyway.
  CHECK(laman_check(double_banana(), 3).passed);
}

TEST_CASE("independent sets of rigidity matroids are sparse") {
  CHECK(check_laman_independents(generic_rigidity_matroid(4, 2, 13), 2,
                                 Scope::Exhaustive())
            .passed);
  CHECK(check_laman_independents(generic_rigidity_matroid(5, 2, 13), 2,
                                 Scope::Exhaustive())
            .passed);
  AxiomReport sampled = check_laman_independents(generic_rigidity_matroid(6, 2, 13), 2,
                                                 Scope::Sampled(3, 200));
  CHECK(sampled.passed);
  CHECK_FALSE(sampled.scope.exhaustive);

  // The free matroid holds all of K_4 independent: too dense for m=2.
  AxiomReport f = check_laman_independents(free_on_k4(), 2, Scope::Exhaustive());
  CHECK_FALSE(f.passed);
  CHECK(has_kind(f, "sparsity-violation"));
}

TEST_CASE("extension lemma on honest rigidity matroids") {
  AxiomReport g = check_extension_lemma(generic_rigidity_matroid(4, 2, 14), 2);
  CHECK(g.passed);
  CHECK(g.details["circuit_valence"] == true);
  CHECK(g.details["independent_extensions"] == true);
  CHECK(g.details["gluing_holds"] == true);
  CHECK(g.details["rigid_extensions"] == true);

  CHECK(check_extension_lemma(generic_rigidity_matroid(5, 2, 14), 2).passed);
  CHECK(check_extension_lemma(Matroid::cycle(5), 1).passed);
}

TEST_CASE("extension lemma guards") {
  CHECK_THROWS_AS(check_extension_lemma(near_uniform_on_k4(), 2), PreconditionNotMet);
  CHECK_THROWS_AS(check_extension_lemma(Matroid::cycle(7), 1), CapExceeded);
}

TEST_CASE("prescribed hyperplanes: hm members are hyperplanes of generics") {
  for (int n = 4; n <= 5; ++n) {
    AxiomReport rep = check_hm_subset(generic_rigidity_matroid(n, 2, 15), 2);
    CHECK(rep.passed);
    CHECK(rep.details["hm_size"] == hm_family(n, 2).size());
    CHECK(rep.details["strict"] == true);
  }
  AxiomReport u = check_hm_subset(uniform_on_k4(), 2);
  CHECK(u.passed);
  CHECK(u.details["hyperplanes"] == 15);
  CHECK(u.details["strict"] == true);
}

TEST_CASE("prescribed hyperplanes: near-uniform loses one") {
  AxiomReport rep = check_hm_subset(near_uniform_on_k4(), 2);
  CHECK_FALSE(rep.passed);
  CHECK(rep.details["hyperplanes"] == 11);
  REQUIRE(has_kind(rep, "hm-member-not-hyperplane"));
  // K({0,2}) ∪ K({0,1,3}) misses edge 23 and is not closed.
  bool found = false;
  for (const Witness& w : rep.violations)
    for (const auto& [name, e] : w.edge_sets)
      found = found || (name == "member" && e == es(4, 0b010111));
  CHECK(found);
}

TEST_CASE("rigid sets are m-connected in rigidity matroids") {
  AxiomReport g25 = check_connect(generic_rigidity_matroid(5, 2, 16), 2,
                                  Scope::Exhaustive());
  CHECK(g25.passed);
  CHECK(g25.scope.exhaustive);

  AxiomReport g36 = check_connect(generic_rigidity_matroid(6, 3, 16), 3,
                                  Scope::Sampled(8, 50));
  CHECK(g36.passed);

  CHECK(check_connect(Matroid::cycle(5), 1, Scope::Exhaustive()).passed);
}

TEST_CASE("a rigid but disconnected set is reported") {
  // In U_{2,6} a perfect matching closes to everything: rigid, disconnected.
  AxiomReport rep = check_connect(rank2_uniform_on_k4(), 2, Scope::Exhaustive());
  CHECK_FALSE(rep.passed);
  REQUIRE(has_kind(rep, "rigid-not-m-connected"));
  // Single edges are also rigid here but sit below the m+1 vertex threshold;
  // they must not be flagged.
  for (const Witness& w : rep.violations)
    for (const auto& [name, e] : w.edge_sets)
      if (name == "rigid_set") CHECK(support(e).count() >= 3);
}

TEST_CASE("recursive hyperplane condition matches the characterization") {
  struct Row {
    Matroid m;
    int mdim;
  };
  std::vector<Row> rows;
  rows.push_back({uniform_on_k4(), 2});
  rows.push_back({near_uniform_on_k4(), 2});
  rows.push_back({free_on_k4(), 2});
  rows.push_back({Matroid::cycle(4), 2});
  rows.push_back({rank2_uniform_on_k4(), 2});
  rows.push_back({generic_rigidity_matroid(5, 2, 18), 2});
  for (const Row& r : rows) {
    AxiomReport rec = check_theorem_2dim(r.m, r.mdim);
    AxiomReport chr = is_arm_prop6(r.m, r.mdim);
    CHECK(rec.passed == chr.passed);
  }
  AxiomReport nu = check_theorem_2dim(near_uniform_on_k4(), 2);
  CHECK(has_kind(nu, "hm1-not-restriction-hyperplane"));
}

TEST_CASE("one filtration order already decides the recursive condition") {
  for (const Matroid& m : {uniform_on_k4(), near_uniform_on_k4()}) {
    AxiomReport full = check_theorem_2dim(m, 2);
    AxiomReport filt = check_theorem_2dim_filtration(m, 2, {0, 1, 2, 3});
    CHECK(full.passed == filt.passed);
    AxiomReport rev = check_theorem_2dim_filtration(m, 2, {3, 2, 1, 0});
    CHECK(full.passed == rev.passed);
  }
  CHECK_THROWS_AS(check_theorem_2dim_filtration(uniform_on_k4(), 2, {0, 1, 2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_theorem_2dim_filtration(uniform_on_k4(), 2, {0, 1, 2, 2}),
                  std::invalid_argument);
}

TEST_CASE("closed hm1 families force closed vertex-deleted completes") {
  AxiomReport g = check_twoparts(generic_rigidity_matroid(5, 3, 19), 3);
  CHECK(g.passed);
  CHECK(g.details["hm1_all_closed"] == true);
  CHECK(g.details["hm1_all_hyperplanes"] == true);
  CHECK(g.details["rank_drop_checked"] == true);

  CHECK(check_twoparts(generic_rigidity_matroid(5, 2, 19), 2).passed);

  // Near-uniform leaves an hm1 member unclosed: precondition refused, but
  // the conclusions themselves still hold when forced through.
  CHECK_THROWS_AS(check_twoparts(near_uniform_on_k4(), 2, true), PreconditionNotMet);
  AxiomReport forced = check_twoparts(near_uniform_on_k4(), 2, false);
  CHECK(forced.passed);
  CHECK(forced.details["hm1_all_closed"] == false);

  // The free matroid closes everything, so the hypothesis holds but the
  // members are not hyperplanes; the rank-drop clause is then vacuous ...
  AxiomReport fr = check_twoparts(free_on_k4(), 2, true);
  CHECK(fr.passed);
  CHECK(fr.details["hm1_all_hyperplanes"] == false);
  CHECK(fr.details["rank_drop_checked"] == false);
  // ... and checking it unconditionally exposes the wrong rank drop.
  AxiomReport fr2 = check_twoparts(free_on_k4(), 2, false);
  CHECK_FALSE(fr2.passed);
  CHECK(has_kind(fr2, "rank-drop"));
}

TEST_CASE("closed hm1 families force independent m-sets") {
  CHECK(check_bottom(generic_rigidity_matroid(5, 3, 20), 3).passed);
  CHECK(check_bottom(uniform_on_k4(), 2).passed);

  // With a loop at edge 23, K({2,3}) is dependent.
  CHECK_THROWS_AS(check_bottom(loop_on_k4(), 2, true), PreconditionNotMet);
  AxiomReport forced = check_bottom(loop_on_k4(), 2, false);
  CHECK_FALSE(forced.passed);
  CHECK(has_kind(forced, "complete-on-m-set-dependent"));
}
