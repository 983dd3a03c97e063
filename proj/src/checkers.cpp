#include "armlab/checkers.hpp"

#include <algorithm>
#include <random>

#include "armlab/closure.hpp"

namespace armlab {

namespace {

EdgeSet full_k(int n) {
  return EdgeSet::from_bits(n, (EdgeBits{1} << edge_count(n)) - 1);
}

void require_complete_ground(const Matroid& m) {
  if (m.ground().bits != full_k(m.n()).bits)
    throw PreconditionNotMet("checker needs a matroid on the whole of K(V)");
}

void require_dimension(int mdim) {
  if (mdim < 1) throw std::invalid_argument("dimension must be positive");
}

// rank and closedness of K(W) for every vertex subset W, by direct queries.
struct CompleteInfo {
  int n = 0;
  std::vector<EdgeBits> kw;
  std::vector<int> rank;
  std::vector<char> closed;
};

CompleteInfo complete_info(const Matroid& m) {
  CompleteInfo ci;
  ci.n = m.n();
  std::size_t size = std::size_t{1} << ci.n;
  ci.kw.resize(size);
  ci.rank.resize(size);
  ci.closed.resize(size);
  for (std::size_t w = 0; w < size; ++w) {
    VertexSet vs{ci.n, static_cast<VertexBits>(w)};
    EdgeSet k = complete_edges(vs);
    ci.kw[w] = k.bits;
    ci.rank[w] = m.rank(k);
    ci.closed[w] = (m.closure(k).bits == k.bits) ? 1 : 0;
  }
  return ci;
}

bool is_hyperplane_direct(const Matroid& m, EdgeSet h, int full_rank) {
  h.n = m.n();
  if (m.rank(h) != full_rank - 1) return false;
  return m.closure(h).bits == h.bits;
}

// D2: every star(v) minus an (m-1)-subset is a cocircuit. Direct queries; an
// optional sink collects one witness per failing set.
bool stars_minus_are_cocircuits(const Matroid& m, int mdim,
                                std::vector<Witness>* sink) {
  int n = m.n();
  int r = m.rank();
  EdgeSet ground = m.ground();
  bool ok = true;
  for (int v = 0; v < n; ++v) {
    EdgeBits sv = star(v, n).bits;
    // (m-1)-subsets of the star, enumerated as submasks
    for (EdgeBits s = sv;; s = (s - 1) & sv) {
      if (std::popcount(s) == mdim - 1) {
        EdgeBits coc = sv & ~s;
        EdgeSet h = EdgeSet::from_bits(n, ground.bits & ~coc);
        if (!is_hyperplane_direct(m, h, r)) {
          ok = false;
          if (sink)
            sink->push_back(Witness("star-minus-not-cocircuit")
                                .with("cocircuit_candidate", EdgeSet::from_bits(n, coc))
                                .with("complement", h)
                                .with("vertex", std::int64_t{v}));
        }
      }
      if (s == 0) break;
    }
  }
  return ok;
}

// Z2: every K(W) with |W| = m+2 is a circuit. Direct queries.
bool km2_are_circuits(const Matroid& m, int mdim, std::vector<Witness>* sink) {
  int n = m.n();
  if (mdim + 2 > n) return true;  // no K_{m+2} exists
  bool ok = true;
  for (VertexBits w = 0; w < (VertexBits(1) << n); ++w) {
    if (std::popcount(w) != mdim + 2) continue;
    EdgeSet c = complete_edges(VertexSet{n, w});
    int s = c.count();
    bool circuit = (m.rank(c) == s - 1);
    if (circuit) {
      EdgeBits rest = c.bits;
      while (rest) {
        int e = std::countr_zero(rest);
        rest &= rest - 1;
        if (m.rank(c.without(e)) != s - 1) {
          circuit = false;
          break;
        }
      }
    }
    if (!circuit) {
      ok = false;
      if (sink)
        sink->push_back(Witness("km2-not-circuit")
                            .with("complete_set", c)
                            .with("rank", m.rank(c)));
    }
  }
  return ok;
}

int min_valence(const EdgeSet& e) {
  VertexSet sup = support(e);
  int best = -1;
  for (int v : sup.members()) {
    int val = valence(e, v);
    if (best < 0 || val < best) best = val;
  }
  return best;
}

}  // namespace

bool is_rigid(const Matroid& m, EdgeSet e) {
  e.n = m.n();
  return m.closure(e).bits == complete_edges(support(e)).bits;
}

AxiomReport check_C1(const Matroid& m, int mdim, Scope scope) {
  require_dimension(mdim);
  require_complete_ground(m);
  AxiomReport rep;
  rep.suite = "C1";
  int n = m.n();
  auto test_pair = [&](EdgeSet e, EdgeSet f, EdgeSet cl) {
    EdgeBits allowed =
        complete_edges(support(e)).bits | complete_edges(support(f)).bits;
    if (cl.bits & ~allowed)
      rep.record(Witness("closure-escapes-supports")
                     .with("E", e)
                     .with("F", f)
                     .with("closure", cl)
                     .with("outside", EdgeSet::from_bits(n, cl.bits & ~allowed)));
  };
  if (scope.exhaustive) {
    if (n > 5)
      throw CapExceeded("exhaustive pair check infeasible beyond n = 5");
    rep.scope = Scope::Exhaustive();
    const SubsetTables& t = m.tables();
    std::size_t size = t.size();
    std::vector<VertexBits> sup(size);
    std::vector<EdgeBits> ksup(size);
    for (std::size_t i = 0; i < size; ++i) {
      EdgeSet e = EdgeSet::from_bits(n, t.expand(static_cast<std::uint32_t>(i)));
      VertexSet s = support(e);
      sup[i] = s.bits;
      ksup[i] = complete_edges(s).bits;
    }
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t j = i; j < size; ++j) {
        if (std::popcount(static_cast<VertexBits>(sup[i] & sup[j])) >= mdim)
          continue;
        EdgeBits cl = t.closure_of[i | j];
        if (cl & ~(ksup[i] | ksup[j]))
          test_pair(EdgeSet::from_bits(n, t.expand(static_cast<std::uint32_t>(i))),
                    EdgeSet::from_bits(n, t.expand(static_cast<std::uint32_t>(j))),
                    EdgeSet::from_bits(n, cl));
      }
    }
  } else {
    rep.scope = scope;
    bool have_tables = m.ground().count() <= kGroundCapForTables;
    std::uint64_t flat_pairs = 0;
    if (have_tables) {
      const SubsetTables& t = m.tables();
      FamilyReport fl = m.flats();
      for (std::size_t a = 0; a < fl.members.size(); ++a) {
        for (std::size_t b = a; b < fl.members.size(); ++b) {
          const EdgeSet& e = fl.members[a];
          const EdgeSet& f = fl.members[b];
          if (vertex_intersection(support(e), support(f)).count() >= mdim)
            continue;
          ++flat_pairs;
          EdgeBits cl = t.closure_of[t.compact(e.bits | f.bits)];
          test_pair(e, f, EdgeSet::from_bits(n, cl));
        }
      }
    }
    rep.details["flat_pairs"] = flat_pairs;
    std::mt19937_64 rng(scope.seed);
    EdgeBits gbits = m.ground().bits;
    for (std::uint64_t i = 0; i < scope.count; ++i) {
      EdgeSet e = EdgeSet::from_bits(n, static_cast<EdgeBits>(rng()) & gbits);
      EdgeSet f = EdgeSet::from_bits(n, static_cast<EdgeBits>(rng()) & gbits);
      if (vertex_intersection(support(e), support(f)).count() >= mdim) continue;
      EdgeSet u = edge_union(e, f);
      EdgeSet cl = have_tables
                       ? EdgeSet::from_bits(n, m.tables().closure_of[m.tables().compact(u.bits)])
                       : m.closure(u);
      test_pair(e, f, cl);
    }
  }
  rep.finalize();
  return rep;
}

AxiomReport check_C2(const Matroid& m, int mdim, Scope /*scope*/) {
  require_dimension(mdim);
  require_complete_ground(m);
  AxiomReport rep;
  rep.suite = "C2";
  // Rigidity depends only on the closure: a rigid set with support W exists
  // iff K(W) is closed, and the union E ∪ F is rigid iff K(W1 ∪ W2) is
  // closed with rank equal to rank(K(W1) ∪ K(W2)). Quantifying over pairs of
  // closed complete supports is therefore exhaustive.
  rep.scope = Scope::Exhaustive();
  int n = m.n();
  CompleteInfo ci = complete_info(m);
  std::vector<VertexBits> rigid_supports;
  for (VertexBits w = 0; w < (VertexBits(1) << n); ++w)
    if (std::popcount(w) >= 2 && ci.closed[w]) rigid_supports.push_back(w);
  for (std::size_t a = 0; a < rigid_supports.size(); ++a) {
    for (std::size_t b = a; b < rigid_supports.size(); ++b) {
      VertexBits w1 = rigid_supports[a], w2 = rigid_supports[b];
      if (std::popcount(static_cast<VertexBits>(w1 & w2)) < mdim) continue;
      VertexBits wu = w1 | w2;
      EdgeSet u = EdgeSet::from_bits(n, ci.kw[w1] | ci.kw[w2]);
      bool rigid_union = ci.closed[wu] && m.rank(u) == ci.rank[wu];
      if (!rigid_union)
        rep.record(Witness("union-not-rigid")
                       .with("E", EdgeSet::from_bits(n, ci.kw[w1]))
                       .with("F", EdgeSet::from_bits(n, ci.kw[w2]))
                       .with("union", u)
                       .with("union_rank", m.rank(u))
                       .with("complete_rank", ci.rank[wu]));
    }
  }
  rep.details["rigid_supports"] = rigid_supports.size();
  rep.finalize();
  return rep;
}

AxiomReport is_arm_prop6(const Matroid& m, int mdim) {
  require_dimension(mdim);
  require_complete_ground(m);
  AxiomReport rep;
  rep.suite = "prop6";
  rep.scope = Scope::Exhaustive();
  int n = m.n();
  int r = m.rank();

  std::vector<Witness> w1, w2;
  bool cond_stars = stars_minus_are_cocircuits(m, mdim, &w1);
  bool cond_circuits = km2_are_circuits(m, mdim, &w2);
  int expected = mdim * n - mdim * (mdim + 1) / 2;
  bool cond_rank = (r == expected);

  rep.details["stars_minus_are_cocircuits"] = cond_stars;
  rep.details["km2_are_circuits"] = cond_circuits;
  rep.details["rank_formula"] = cond_rank;
  rep.details["rank"] = r;
  rep.details["expected_rank"] = expected;

  int holds = int(cond_stars) + int(cond_circuits) + int(cond_rank);
  if (holds < 2) {
    for (auto& w : w1) rep.record(std::move(w));
    for (auto& w : w2) rep.record(std::move(w));
    if (!cond_rank)
      rep.record(Witness("rank-formula")
                     .with("rank", r)
                     .with("expected", expected));
    if (rep.violations.empty())
      rep.record(Witness("fewer-than-two-conditions"));
  }
  rep.finalize();
  return rep;
}

AxiomReport check_D(const Matroid& m, int mdim) {
  require_dimension(mdim);
  require_complete_ground(m);
  AxiomReport rep;
  rep.suite = "D";
  rep.scope = Scope::Exhaustive();
  int n = m.n();
  bool d1 = true;
  FamilyReport cocs = m.cocircuits();
  for (const auto& c : cocs.members) {
    int verts = support(c).count();
    if (verts <= n - mdim) {
      d1 = false;
      rep.record(Witness("cocircuit-too-few-vertices")
                     .with("cocircuit", c)
                     .with("vertices", verts)
                     .with("required_more_than", n - mdim));
    }
  }
  std::vector<Witness> w2;
  bool d2 = stars_minus_are_cocircuits(m, mdim, &w2);
  for (auto& w : w2) rep.record(std::move(w));
  rep.details["D1"] = d1;
  rep.details["D2"] = d2;
  rep.finalize();
  return rep;
}

AxiomReport check_H(const Matroid& m, int mdim) {
  require_dimension(mdim);
  require_complete_ground(m);
  AxiomReport rep;
  rep.suite = "H";
  rep.scope = Scope::Exhaustive();
  int n = m.n();
  int r = m.rank();
  bool h1 = true;
  FamilyReport hs = m.hyperplanes();
  for (const auto& h : hs.members) {
    int full_valence = 0;
    for (int v : support(h).members())
      if (valence(h, v) == n - 1) ++full_valence;
    if (full_valence > mdim - 1) {
      h1 = false;
      rep.record(Witness("hyperplane-too-many-full-valence-vertices")
                     .with("hyperplane", h)
                     .with("full_valence_vertices", full_valence));
    }
  }
  bool h2 = true;
  for (int v = 0; v < n; ++v) {
    VertexBits rest = static_cast<VertexBits>(((VertexBits(1) << n) - 1) & ~(VertexBits(1) << v));
    for (VertexBits a = rest;; a = (a - 1) & rest) {
      if (std::popcount(a) == mdim - 1) {
        EdgeSet d = delta(v, VertexSet{n, a});
        if (!is_hyperplane_direct(m, d, r)) {
          h2 = false;
          rep.record(Witness("delta-not-hyperplane")
                         .with("delta", d)
                         .with("vertex", std::int64_t{v})
                         .with("A", std::int64_t{a}));
        }
      }
      if (a == 0) break;
    }
  }
  rep.details["H1"] = h1;
  rep.details["H2"] = h2;
  rep.finalize();
  return rep;
}

AxiomReport check_B(const Matroid& m, int mdim) {
  require_dimension(mdim);
  require_complete_ground(m);
  AxiomReport rep;
  rep.suite = "B";
  rep.scope = Scope::Exhaustive();
  int n = m.n();
  int r = m.rank();
  bool b1 = true;
  for (const auto& b : m.bases()) {
    bool spans = (support(b).bits == VertexSet::full(n).bits);
    int min_val = -1;
    for (int v = 0; v < n; ++v) {
      int val = valence(b, v);
      if (min_val < 0 || val < min_val) min_val = val;
    }
    if (!spans || min_val < mdim) {
      b1 = false;
      rep.record(Witness("basis-bad-valence")
                     .with("basis", b)
                     .with("min_valence", min_val));
    }
  }
  bool b2 = true;
  for (VertexBits w = 0; w < (VertexBits(1) << n); ++w) {
    if (std::popcount(w) != mdim) continue;
    EdgeSet bs = bigstar(VertexSet{n, w});
    bool is_basis = (bs.count() == r) && (m.rank(bs) == r);
    if (!is_basis) {
      b2 = false;
      rep.record(Witness("bigstar-not-basis")
                     .with("bigstar", bs)
                     .with("size", bs.count())
                     .with("rank", m.rank(bs))
                     .with("full_rank", r));
    }
  }
  rep.details["B1"] = b1;
  rep.details["B2"] = b2;
  rep.finalize();
  return rep;
}

AxiomReport check_Z(const Matroid& m, int mdim) {
  require_dimension(mdim);
  require_complete_ground(m);
  AxiomReport rep;
  rep.suite = "Z";
  rep.scope = Scope::Exhaustive();
  bool z1 = true;
  FamilyReport cs = m.circuits();
  for (const auto& c : cs.members) {
    int mv = min_valence(c);
    if (mv >= 0 && mv < mdim + 1) {
      z1 = false;
      rep.record(Witness("circuit-low-valence")
                     .with("circuit", c)
                     .with("min_valence", mv));
    }
  }
  std::vector<Witness> w2;
  bool z2 = km2_are_circuits(m, mdim, &w2);
  for (auto& w : w2) rep.record(std::move(w));
  rep.details["Z1"] = z1;
  rep.details["Z2"] = z2;
  rep.finalize();
  return rep;
}

AxiomReport laman_check(EdgeSet e, int mdim) {
  require_dimension(mdim);
  AxiomReport rep;
  rep.suite = "laman";
  rep.scope = Scope::Exhaustive();
  int n = e.n;
  VertexBits sup = support(e).bits;
  for (VertexBits u = sup;; u = (u - 1) & sup) {
    int verts = std::popcount(u);
    if (verts >= mdim) {
      EdgeSet ku = complete_edges(VertexSet{n, u});
      int induced = std::popcount(e.bits & ku.bits);
      int bound = mdim * verts - mdim * (mdim + 1) / 2;
      if (induced > bound)
        rep.record(Witness("sparsity-violation")
                       .with("induced", EdgeSet::from_bits(n, e.bits & ku.bits))
                       .with("complete_on_subset", ku)
                       .with("vertices", verts)
                       .with("edges", induced)
                       .with("bound", bound));
    }
    if (u == 0) break;
  }
  rep.finalize();
  return rep;
}

AxiomReport check_laman_independents(const Matroid& m, int mdim, Scope scope) {
  require_dimension(mdim);
  require_complete_ground(m);
  AxiomReport rep;
  rep.suite = "laman-independents";
  rep.scope = scope;
  int n = m.n();
  auto check_one = [&](EdgeSet e) {
    AxiomReport one = laman_check(e, mdim);
    if (!one.passed) {
      Witness w = one.violations.front();
      w.with("independent_set", e);
      rep.record(std::move(w));
    }
  };
  if (scope.exhaustive) {
    const SubsetTables& t = m.tables();
    for (std::size_t i = 0; i < t.size(); ++i) {
      std::uint32_t idx = static_cast<std::uint32_t>(i);
      if (t.rank_of[i] != std::popcount(idx)) continue;
      check_one(EdgeSet::from_bits(n, t.expand(idx)));
    }
  } else {
    std::mt19937_64 rng(scope.seed);
    EdgeBits gbits = m.ground().bits;
    for (std::uint64_t i = 0; i < scope.count; ++i) {
      EdgeBits x = static_cast<EdgeBits>(rng()) & gbits;
      // greedy independent subset of the draw
      EdgeSet cur = EdgeSet::empty_on(n);
      int r = 0;
      EdgeBits rest = x;
      while (rest) {
        int e = std::countr_zero(rest);
        rest &= rest - 1;
        EdgeSet cand = cur.with(e);
        if (m.rank(cand) > r) {
          cur = cand;
          ++r;
        }
      }
      check_one(cur);
    }
  }
  rep.finalize();
  return rep;
}

AxiomReport check_extension_lemma(const Matroid& m, int mdim) {
  require_dimension(mdim);
  require_complete_ground(m);
  if (m.ground().count() > kGroundCapForClosure)
    throw CapExceeded("extension check quantifies over all independents; ground capped at 15 edges");
  if (!stars_minus_are_cocircuits(m, mdim, nullptr))
    throw PreconditionNotMet("vertex stars minus m-1 edges must be cocircuits");
  int n = m.n();
  AxiomReport rep;
  rep.suite = "ext";
  rep.scope = Scope::Exhaustive();

  bool c1 = true;
  FamilyReport cs = m.circuits();
  for (const auto& c : cs.members) {
    int mv = min_valence(c);
    if (mv >= 0 && mv < mdim + 1) {
      c1 = false;
      rep.record(Witness("circuit-low-valence")
                     .with("circuit", c)
                     .with("min_valence", mv));
    }
  }

  bool c2 = true;
  const SubsetTables& t = m.tables();
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::uint32_t idx = static_cast<std::uint32_t>(i);
    int s = std::popcount(idx);
    if (t.rank_of[i] != s || s == 0) continue;
    EdgeSet e = EdgeSet::from_bits(n, t.expand(idx));
    VertexBits sup = support(e).bits;
    for (int w = 0; w < n; ++w) {
      if ((sup >> w) & 1) continue;
      for (VertexBits a = sup;; a = (a - 1) & sup) {
        int k = std::popcount(a);
        if (k >= 1 && k <= mdim) {
          EdgeSet ext = zero_extension(e, VertexSet{n, a}, w);
          if (t.rank_of[t.compact(ext.bits)] != s + k) {
            c2 = false;
            rep.record(Witness("extension-dependent")
                           .with("independent_set", e)
                           .with("extension", ext)
                           .with("new_vertex", std::int64_t{w})
                           .with("k", std::int64_t{k}));
          }
        }
        if (a == 0) break;
      }
    }
  }

  AxiomReport gluing = check_C2(m, mdim, Scope::Exhaustive());
  rep.details["gluing_holds"] = gluing.passed;
  bool c3 = true;
  if (gluing.passed) {
    CompleteInfo ci = complete_info(m);
    for (VertexBits wbits = 0; wbits < (VertexBits(1) << n); ++wbits) {
      if (std::popcount(wbits) < 2 || !ci.closed[wbits]) continue;
      for (int w = 0; w < n; ++w) {
        if ((wbits >> w) & 1) continue;
        for (VertexBits a = wbits;; a = (a - 1) & wbits) {
          if (std::popcount(a) >= mdim) {
            EdgeSet base = EdgeSet::from_bits(n, ci.kw[wbits]);
            EdgeSet ext = zero_extension(base, VertexSet{n, a}, w);
            VertexBits wu = wbits | (VertexBits(1) << w);
            bool rigid_ext = ci.closed[wu] && m.rank(ext) == ci.rank[wu];
            if (!rigid_ext) {
              c3 = false;
              rep.record(Witness("extension-not-rigid")
                             .with("rigid_set", base)
                             .with("extension", ext)
                             .with("new_vertex", std::int64_t{w}));
            }
          }
          if (a == 0) break;
        }
      }
    }
  }
  rep.details["circuit_valence"] = c1;
  rep.details["independent_extensions"] = c2;
  rep.details["rigid_extensions"] = gluing.passed ? nlohmann::json(c3)
                                                  : nlohmann::json("skipped-no-gluing");
  rep.finalize();
  return rep;
}

AxiomReport check_hm_subset(const Matroid& m, int mdim) {
  require_dimension(mdim);
  require_complete_ground(m);
  AxiomReport rep;
  rep.suite = "hm";
  rep.scope = Scope::Exhaustive();
  int n = m.n();
  int r = m.rank();
  std::vector<EdgeSet> hm = hm_family(n, mdim);
  for (const auto& h : hm) {
    if (!is_hyperplane_direct(m, h, r))
      rep.record(Witness("hm-member-not-hyperplane")
                     .with("member", h)
                     .with("rank", m.rank(h))
                     .with("full_rank", r));
  }
  rep.details["hm_size"] = hm.size();
  if (m.ground().count() <= kGroundCapForTables) {
    FamilyReport hs = m.hyperplanes();
    std::vector<EdgeBits> hmbits;
    hmbits.reserve(hm.size());
    for (const auto& h : hm) hmbits.push_back(h.bits);
    std::sort(hmbits.begin(), hmbits.end());
    bool strict = false;
    for (const auto& h : hs.members)
      if (!std::binary_search(hmbits.begin(), hmbits.end(), h.bits)) {
        strict = true;
        break;
      }
    rep.details["strict"] = strict;
    rep.details["hyperplanes"] = hs.members.size();
  } else {
    rep.details["strict"] = "unknown-beyond-table-cap";
  }
  rep.finalize();
  return rep;
}

AxiomReport check_connect(const Matroid& m, int mdim, Scope scope) {
  require_dimension(mdim);
  require_complete_ground(m);
  AxiomReport rep;
  rep.suite = "connect";
  rep.scope = scope;
  int n = m.n();
  auto check_one = [&](EdgeSet e) {
    if (!is_k_vertex_connected(e, mdim))
      rep.record(Witness("rigid-not-m-connected")
                     .with("rigid_set", e)
                     .with("vertices", support(e).count()));
  };
  if (scope.exhaustive) {
    const SubsetTables& t = m.tables();
    for (std::size_t i = 0; i < t.size(); ++i) {
      std::uint32_t idx = static_cast<std::uint32_t>(i);
      EdgeSet e = EdgeSet::from_bits(n, t.expand(idx));
      VertexSet sup = support(e);
      if (sup.count() < mdim + 1) continue;
      if (t.closure_of[i] != complete_edges(sup).bits) continue;  // not rigid
      check_one(e);
    }
  } else {
    CompleteInfo ci = complete_info(m);
    std::vector<VertexBits> candidates;
    for (VertexBits w = 0; w < (VertexBits(1) << n); ++w)
      if (std::popcount(w) >= mdim + 1 && ci.closed[w]) candidates.push_back(w);
    rep.details["rigid_supports"] = candidates.size();
    if (!candidates.empty()) {
      std::mt19937_64 rng(scope.seed);
      for (std::uint64_t i = 0; i < scope.count; ++i) {
        VertexBits w = candidates[rng() % candidates.size()];
        EdgeSet e = EdgeSet::from_bits(n, ci.kw[w]);
        int target = ci.rank[w];
        // random deletions that keep the set rigid with support w
        std::vector<Edge> order = e.edges();
        std::shuffle(order.begin(), order.end(), rng);
        for (const Edge& uv : order) {
          if ((rng() & 1) == 0) continue;
          EdgeSet trial = e.without(edge_rank(uv, n));
          if (support(trial).bits != w) continue;
          if (m.rank(trial) == target) e = trial;
        }
        check_one(e);
      }
    }
  }
  rep.finalize();
  return rep;
}

namespace {

// hm1 over X within the ambient tables: member h is a hyperplane of the
// restriction to K(X) iff rank(h) = rank(K(X)) - 1 and closure(h) ∩ K(X) = h.
void check_2dim_for_subset(const Matroid& m, int mdim, VertexBits x,
                           const SubsetTables& t, AxiomReport& rep) {
  int n = m.n();
  VertexSet xs{n, x};
  EdgeSet kx = complete_edges(xs);
  int rx = t.rank_of[t.compact(kx.bits)];
  for (const EdgeSet& h : hm1_family_on(xs, mdim)) {
    std::uint32_t hi = t.compact(h.bits);
    bool hyperplane = rx >= 1 && t.rank_of[hi] == rx - 1 &&
                      (t.closure_of[hi] & kx.bits) == h.bits;
    if (!hyperplane)
      rep.record(Witness("hm1-not-restriction-hyperplane")
                     .with("member", h)
                     .with("complete_on_x", kx)
                     .with("x", std::int64_t{x}));
  }
}

}  // namespace

AxiomReport check_theorem_2dim(const Matroid& m, int mdim) {
  require_dimension(mdim);
  require_complete_ground(m);
  AxiomReport rep;
  rep.suite = "2dim";
  rep.scope = Scope::Exhaustive();
  const SubsetTables& t = m.tables();
  int n = m.n();
  for (VertexBits x = 0; x < (VertexBits(1) << n); ++x)
    check_2dim_for_subset(m, mdim, x, t, rep);
  rep.finalize();
  return rep;
}

AxiomReport check_theorem_2dim_filtration(const Matroid& m, int mdim,
                                          const std::vector<int>& order) {
  require_dimension(mdim);
  require_complete_ground(m);
  int n = m.n();
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (int v = 0; v < n; ++v)
    if (v >= static_cast<int>(sorted.size()) || sorted[v] != v)
      throw std::invalid_argument("order must be a permutation of the vertices");
  AxiomReport rep;
  rep.suite = "2dim-filtration";
  rep.scope = Scope::Exhaustive();
  const SubsetTables& t = m.tables();
  VertexBits x = 0;
  for (int v : order) {
    x |= VertexBits(1) << v;
    check_2dim_for_subset(m, mdim, x, t, rep);
  }
  rep.details["order"] = order;
  rep.finalize();
  return rep;
}

namespace {

struct Hm1Status {
  std::vector<EdgeSet> members;
  bool all_closed = true;
  bool all_hyperplanes = true;
};

Hm1Status hm1_status(const Matroid& m, int mdim) {
  Hm1Status st;
  st.members = hm1_family(m.n(), mdim);
  int r = m.rank();
  for (const auto& h : st.members) {
    if (m.closure(h).bits != h.bits) st.all_closed = false;
    if (!is_hyperplane_direct(m, h, r)) st.all_hyperplanes = false;
  }
  return st;
}

}  // namespace

AxiomReport check_twoparts(const Matroid& m, int mdim, bool require_precondition) {
  require_dimension(mdim);
  require_complete_ground(m);
  int n = m.n();
  if (require_precondition && (mdim < 2 || n < mdim + 1))
    throw PreconditionNotMet("statement needs m >= 2 and |V| >= m+1");
  Hm1Status st = hm1_status(m, mdim);
  if (require_precondition && !st.all_closed)
    throw PreconditionNotMet("every hm1 member must be closed");
  AxiomReport rep;
  rep.suite = "twoparts";
  rep.scope = Scope::Exhaustive();
  rep.details["hm1_all_closed"] = st.all_closed;
  rep.details["hm1_all_hyperplanes"] = st.all_hyperplanes;
  int r = m.rank();
  bool check_rank_drop = st.all_hyperplanes || !require_precondition;
  rep.details["rank_drop_checked"] = check_rank_drop;
  for (int v0 = 0; v0 < n; ++v0) {
    EdgeSet kv = complete_edges(VertexSet::full(n).without(v0));
    if (m.closure(kv).bits != kv.bits)
      rep.record(Witness("complete-minus-vertex-not-closed")
                     .with("set", kv)
                     .with("vertex", std::int64_t{v0}));
    if (check_rank_drop && m.rank(kv) != r - mdim)
      rep.record(Witness("rank-drop")
                     .with("set", kv)
                     .with("vertex", std::int64_t{v0})
                     .with("rank", m.rank(kv))
                     .with("expected", r - mdim));
  }
  rep.finalize();
  return rep;
}

AxiomReport check_bottom(const Matroid& m, int mdim, bool require_precondition) {
  require_dimension(mdim);
  require_complete_ground(m);
  int n = m.n();
  if (require_precondition && (mdim < 2 || n < mdim + 1))
    throw PreconditionNotMet("statement needs m >= 2 and |V| >= m+1");
  Hm1Status st = hm1_status(m, mdim);
  if (require_precondition && !st.all_closed)
    throw PreconditionNotMet("every hm1 member must be closed");
  AxiomReport rep;
  rep.suite = "bottom";
  rep.scope = Scope::Exhaustive();
  rep.details["hm1_all_closed"] = st.all_closed;
  for (VertexBits w = 0; w < (VertexBits(1) << n); ++w) {
    if (std::popcount(w) != mdim) continue;
    EdgeSet kw = complete_edges(VertexSet{n, w});
    if (!m.is_independent(kw))
      rep.record(Witness("complete-on-m-set-dependent")
                     .with("set", kw)
                     .with("vertices", std::int64_t{w})
                     .with("rank", m.rank(kw)));
  }
  rep.finalize();
  return rep;
}

}  // namespace armlab
