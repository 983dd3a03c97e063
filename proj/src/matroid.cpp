#include "armlab/matroid.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <unordered_set>

#include "armlab/parallel.hpp"

namespace armlab {

void validate_basis_axioms(EdgeSet ground, const std::vector<EdgeSet>& bases) {
  if (bases.empty()) throw EmptyFamily();
  for (const auto& b : bases) {
    if ((b.bits & ~ground.bits) != 0)
      throw std::invalid_argument("basis not contained in ground set");
  }
  int card = bases[0].count();
  for (const auto& b : bases)
    if (b.count() != card) throw UnequalCardinality(bases[0], b);
  std::unordered_set<EdgeBits> fam;
  for (const auto& b : bases) fam.insert(b.bits);
  int n = ground.n;
  for (const auto& b1 : bases) {
    for (const auto& b2 : bases) {
      if (b1.bits == b2.bits) continue;
      EdgeBits only1 = b1.bits & ~b2.bits;
      EdgeBits rest = only1;
      while (rest) {
        int x = std::countr_zero(rest);
        rest &= rest - 1;
        EdgeBits stripped = b1.bits & ~(EdgeBits{1} << x);
        bool found = false;
        EdgeBits cand = b2.bits & ~b1.bits;
        while (cand) {
          int y = std::countr_zero(cand);
          cand &= cand - 1;
          if (fam.count(stripped | (EdgeBits{1} << y))) {
            found = true;
            break;
          }
        }
        if (!found) throw ExchangeViolation(b1, b2, edge_unrank(x, n));
      }
    }
  }
}

Matroid::Matroid(int n, EdgeSet ground, Backend b)
    : n_(n), ground_(ground), backend_(std::move(b)),
      tables_mu_(std::make_shared<std::mutex>()) {}

static EdgeSet full_ground(int n) {
  return EdgeSet::from_bits(n, (EdgeBits{1} << edge_count(n)) - 1);
}

Matroid Matroid::from_bases(int n, std::vector<EdgeSet> bases) {
  return from_bases_on(n, full_ground(n), std::move(bases));
}

Matroid Matroid::from_bases_on(int n, EdgeSet ground, std::vector<EdgeSet> bases) {
  for (auto& b : bases) b.n = n;
  ground.n = n;
  sort_family(bases);
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  validate_basis_axioms(ground, bases);
  return Matroid(n, ground, BasisBackend{std::move(bases)});
}

Matroid Matroid::from_linear_rows(int n, RationalMatrix rows, std::uint64_t seed) {
  if (rows.rows != edge_count(n))
    throw std::invalid_argument("need one matrix row per edge of K(V)");
  auto shared_rows = std::make_shared<const RationalMatrix>(std::move(rows));
  auto engine = std::make_shared<const LinearRankEngine>(*shared_rows, seed);
  return Matroid(n, full_ground(n),
                 LinearBackend{std::move(engine), std::move(shared_rows)});
}

Matroid Matroid::cycle(int n) {
  if (n < 2) throw std::invalid_argument("cycle matroid needs n >= 2");
  return Matroid(n, full_ground(n), CycleBackend{});
}

std::string Matroid::backend_name() const {
  if (std::holds_alternative<BasisBackend>(backend_)) return "bases";
  if (std::holds_alternative<LinearBackend>(backend_)) return "linear";
  return "cycle";
}

static int cycle_rank(const EdgeSet& x) {
  std::array<VertexBits, kMaxVertices> adj{};
  EdgeBits rest = x.bits;
  while (rest) {
    int e = std::countr_zero(rest);
    rest &= rest - 1;
    Edge uv = edge_unrank(e, x.n);
    adj[uv.u] |= VertexBits(1) << uv.v;
    adj[uv.v] |= VertexBits(1) << uv.u;
  }
  VertexBits sup = support(x).bits;
  int comps = 0;
  VertexBits todo = sup;
  while (todo) {
    int v = std::countr_zero(todo);
    VertexBits comp = VertexBits(1) << v;
    VertexBits frontier = comp;
    while (frontier) {
      VertexBits next = 0;
      VertexBits f = frontier;
      while (f) {
        int u = std::countr_zero(f);
        f &= f - 1;
        next |= adj[u];
      }
      next &= ~comp;
      comp |= next;
      frontier = next;
    }
    todo &= ~comp;
    ++comps;
  }
  return std::popcount(sup) - comps;
}

int Matroid::backend_rank(EdgeSet x) const {
  if (const auto* bb = std::get_if<BasisBackend>(&backend_)) {
    int best = 0;
    for (const auto& b : bb->bases)
      best = std::max(best, std::popcount(b.bits & x.bits));
    return best;
  }
  if (const auto* lb = std::get_if<LinearBackend>(&backend_))
    return lb->engine->rank_rows(x.bits);
  return cycle_rank(x);
}

int Matroid::rank(EdgeSet x) const {
  if ((x.bits & ~ground_.bits) != 0)
    throw std::invalid_argument("rank query outside ground set");
  x.n = n_;
  return backend_rank(x);
}

EdgeSet Matroid::closure(EdgeSet x) const {
  x.n = n_;
  int r = rank(x);
  EdgeBits cl = x.bits;
  EdgeBits rest = ground_.bits & ~x.bits;
  while (rest) {
    int e = std::countr_zero(rest);
    rest &= rest - 1;
    if (backend_rank(EdgeSet::from_bits(n_, x.bits | (EdgeBits{1} << e))) == r)
      cl |= EdgeBits{1} << e;
  }
  return EdgeSet::from_bits(n_, cl);
}

EdgeSet Matroid::closure_via_hyperplanes(EdgeSet x) const {
  x.n = n_;
  if ((x.bits & ~ground_.bits) != 0)
    throw std::invalid_argument("closure query outside ground set");
  FamilyReport hs = hyperplanes();
  EdgeBits acc = ground_.bits;
  bool any = false;
  for (const auto& h : hs.members) {
    if ((x.bits & ~h.bits) == 0) {
      acc &= h.bits;
      any = true;
    }
  }
  return EdgeSet::from_bits(n_, any ? acc : ground_.bits);
}

const SubsetTables& Matroid::tables() const {
  std::lock_guard<std::mutex> lk(*tables_mu_);
  if (tables_) return *tables_;

  int g = ground_.count();
  if (g > kGroundCapForTables)
    throw CapExceeded("family enumeration needs a ground of at most " +
                      std::to_string(kGroundCapForTables) + " edges, have " +
                      std::to_string(g));
  auto t = std::make_shared<SubsetTables>();
  t->ground = ground_;
  for (int e = 0; e < kMaxEdges; ++e) t->pos_of_edge[e] = -1;
  EdgeBits rest = ground_.bits;
  while (rest) {
    int e = std::countr_zero(rest);
    rest &= rest - 1;
    t->pos_of_edge[e] = static_cast<int>(t->positions.size());
    t->positions.push_back(e);
  }
  std::size_t size = std::size_t{1} << g;
  t->rank_of.resize(size);
  t->closure_of.resize(size);
  parallel_chunks(size, [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t i = lo; i < hi; ++i)
      t->rank_of[i] = static_cast<std::uint8_t>(
          backend_rank(EdgeSet::from_bits(n_, t->expand(static_cast<std::uint32_t>(i)))));
  });
  parallel_chunks(size, [&](std::uint64_t lo, std::uint64_t hi) {
    for (std::uint64_t i = lo; i < hi; ++i) {
      std::uint32_t idx = static_cast<std::uint32_t>(i);
      std::uint8_t base = t->rank_of[i];
      std::uint32_t cl = idx;
      for (int b = 0; b < g; ++b) {
        if ((idx >> b) & 1) continue;
        if (t->rank_of[i | (std::uint64_t{1} << b)] == base) cl |= 1u << b;
      }
      t->closure_of[i] = t->expand(cl);
    }
  });
  tables_ = std::move(t);
  return *tables_;
}

FamilyReport Matroid::circuits() const {
  const SubsetTables& t = tables();
  FamilyReport out{"circuits", n_, {}};
  for (std::size_t i = 1; i < t.size(); ++i) {
    int s = std::popcount(static_cast<std::uint32_t>(i));
    if (t.rank_of[i] != s - 1) continue;  // circuits have rank |C|-1
    bool minimal = true;
    std::uint32_t rest = static_cast<std::uint32_t>(i);
    while (rest) {
      int b = std::countr_zero(rest);
      rest &= rest - 1;
      if (t.rank_of[i & ~(std::size_t{1} << b)] != s - 1) {
        minimal = false;
        break;
      }
    }
    if (minimal)
      out.members.push_back(EdgeSet::from_bits(n_, t.expand(static_cast<std::uint32_t>(i))));
  }
  sort_family(out.members);
  return out;
}

FamilyReport Matroid::hyperplanes() const {
  const SubsetTables& t = tables();
  int r = t.rank_of[t.size() - 1];
  FamilyReport out{"hyperplanes", n_, {}};
  if (r == 0) return out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t.rank_of[i] != r - 1) continue;
    EdgeBits self = t.expand(static_cast<std::uint32_t>(i));
    if (t.closure_of[i] == self)
      out.members.push_back(EdgeSet::from_bits(n_, self));
  }
  sort_family(out.members);
  return out;
}

FamilyReport Matroid::cocircuits() const {
  FamilyReport hs = hyperplanes();
  FamilyReport out{"cocircuits", n_, {}};
  out.members.reserve(hs.members.size());
  for (const auto& h : hs.members)
    out.members.push_back(EdgeSet::from_bits(n_, ground_.bits & ~h.bits));
  sort_family(out.members);
  return out;
}

FamilyReport Matroid::flats() const {
  const SubsetTables& t = tables();
  FamilyReport out{"flats", n_, {}};
  for (std::size_t i = 0; i < t.size(); ++i) {
    EdgeBits self = t.expand(static_cast<std::uint32_t>(i));
    if (t.closure_of[i] == self)
      out.members.push_back(EdgeSet::from_bits(n_, self));
  }
  sort_family(out.members);
  return out;
}

std::vector<EdgeSet> Matroid::bases() const {
  if (const auto* bb = std::get_if<BasisBackend>(&backend_)) return bb->bases;
  const SubsetTables& t = tables();
  int r = t.rank_of[t.size() - 1];
  std::vector<EdgeSet> out;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (std::popcount(static_cast<std::uint32_t>(i)) == r && t.rank_of[i] == r)
      out.push_back(EdgeSet::from_bits(n_, t.expand(static_cast<std::uint32_t>(i))));
  sort_family(out);
  return out;
}

FamilyReport Matroid::bases_report() const {
  FamilyReport out{"bases", n_, bases()};
  sort_family(out.members);
  return out;
}

Matroid Matroid::dual() const {
  std::vector<EdgeSet> co;
  for (const auto& b : bases())
    co.push_back(EdgeSet::from_bits(n_, ground_.bits & ~b.bits));
  return from_bases_on(n_, ground_, std::move(co));
}

Matroid Matroid::restriction(EdgeSet t) const {
  t.n = n_;
  if ((t.bits & ~ground_.bits) != 0)
    throw std::invalid_argument("restriction target not within ground set");
  if (const auto* bb = std::get_if<BasisBackend>(&backend_)) {
    int best = 0;
    for (const auto& b : bb->bases)
      best = std::max(best, std::popcount(b.bits & t.bits));
    std::vector<EdgeSet> fam;
    for (const auto& b : bb->bases)
      if (std::popcount(b.bits & t.bits) == best)
        fam.push_back(EdgeSet::from_bits(n_, b.bits & t.bits));
    return from_bases_on(n_, t, std::move(fam));
  }
  return Matroid(n_, t, backend_);
}

const std::vector<EdgeSet>* Matroid::basis_family() const {
  if (const auto* bb = std::get_if<BasisBackend>(&backend_)) return &bb->bases;
  return nullptr;
}

const RationalMatrix* Matroid::linear_rows() const {
  if (const auto* lb = std::get_if<LinearBackend>(&backend_)) return lb->rows.get();
  return nullptr;
}

AxiomReport check_circuit_cocircuit_intersection(const Matroid& m) {
  AxiomReport rep;
  rep.suite = "circuit-cocircuit-intersection";
  rep.scope = Scope::Exhaustive();
  FamilyReport cs = m.circuits();
  FamilyReport ds = m.cocircuits();
  for (const auto& c : cs.members) {
    for (const auto& d : ds.members) {
      if (std::popcount(c.bits & d.bits) == 1) {
        Witness w("circuit-cocircuit-single-intersection");
        w.with("circuit", c).with("cocircuit", d);
        w.with("common_edge", std::countr_zero(c.bits & d.bits));
        rep.record(std::move(w));
      }
    }
  }
  rep.details["circuits"] = cs.members.size();
  rep.details["cocircuits"] = ds.members.size();
  rep.finalize();
  return rep;
}

bool check_flat_by_circuits(const Matroid& m, EdgeSet f) {
  f.n = m.n();
  FamilyReport cs = m.circuits();
  bool crit = true;
  for (const auto& c : cs.members) {
    if (std::popcount(c.bits & ~f.bits) <= 1 && (c.bits & ~f.bits) != 0) {
      crit = false;
      break;
    }
  }
  bool closed = (m.closure(f).bits == f.bits);
  if (crit != closed)
    throw std::logic_error("circuit flat criterion disagrees with closure");
  return crit;
}

bool verify_chain_rank(const Matroid& m, EdgeSet t) {
  t.n = m.n();
  if (m.closure(t).bits != t.bits) throw TNotClosed(t);
  const SubsetTables& tab = m.tables();
  std::vector<EdgeBits> above;  // flats containing t, sorted by size
  for (std::size_t i = 0; i < tab.size(); ++i) {
    EdgeBits self = tab.expand(static_cast<std::uint32_t>(i));
    if (tab.closure_of[i] == self && (t.bits & ~self) == 0)
      above.push_back(self);
  }
  std::sort(above.begin(), above.end(), [](EdgeBits a, EdgeBits b) {
    int ca = std::popcount(a), cb = std::popcount(b);
    return ca != cb ? ca < cb : a < b;
  });
  auto rank_at = [&](EdgeBits f) { return tab.rank_of[tab.compact(f)]; };
  for (const EdgeBits f : above) {
    std::vector<EdgeBits> min_covers;
    for (const EdgeBits g : above) {
      if (g == f || (f & ~g) != 0) continue;  // need f strictly below g
      bool minimal = true;
      for (const EdgeBits h : min_covers)
        if ((h & ~g) == 0) {
          minimal = false;
          break;
        }
      if (!minimal) continue;
      min_covers.push_back(g);
      if (rank_at(g) != rank_at(f) + 1) return false;
    }
  }
  return true;
}

AxiomReport check_rank_axioms(const Matroid& m, Scope scope) {
  AxiomReport rep;
  rep.suite = "rank-axioms";
  rep.scope = scope;
  EdgeSet ground = m.ground();
  int g = ground.count();
  std::vector<int> pos;
  {
    EdgeBits rest = ground.bits;
    while (rest) {
      pos.push_back(std::countr_zero(rest));
      rest &= rest - 1;
    }
  }
  auto probe = [&](EdgeSet x, int e, int f) {
    // e, f are ambient edge indices outside x (f may be -1)
    int rx = m.rank(x);
    if (rx > x.count())
      rep.record(Witness("rank-exceeds-size").with("set", x).with("rank", rx));
    if (e < 0) return;
    EdgeSet xe = x.with(e);
    int rxe = m.rank(xe);
    if (rxe < rx || rxe > rx + 1)
      rep.record(Witness("rank-unit-increase")
                     .with("set", x)
                     .with("edge", std::int64_t{e})
                     .with("rank", rx)
                     .with("rank_with_edge", rxe));
    if (f < 0) return;
    EdgeSet xf = x.with(f);
    EdgeSet xef = xe.with(f);
    if (m.rank(xef) + rx > rxe + m.rank(xf))
      rep.record(Witness("submodularity")
                     .with("set", x)
                     .with("edge_e", std::int64_t{e})
                     .with("edge_f", std::int64_t{f}));
  };
  if (scope.exhaustive) {
    if (g > 15)
      throw CapExceeded("exhaustive rank-axiom check capped at 15 ground edges");
    const SubsetTables& t = m.tables();
    for (std::size_t i = 0; i < t.size(); ++i) {
      std::uint32_t idx = static_cast<std::uint32_t>(i);
      int s = std::popcount(idx);
      if (t.rank_of[i] > s)
        rep.record(Witness("rank-exceeds-size")
                       .with("set", EdgeSet::from_bits(m.n(), t.expand(idx)))
                       .with("rank", t.rank_of[i]));
      for (int b = 0; b < g; ++b) {
        if ((idx >> b) & 1) continue;
        std::size_t ie = i | (std::size_t{1} << b);
        if (t.rank_of[ie] < t.rank_of[i] || t.rank_of[ie] > t.rank_of[i] + 1)
          rep.record(Witness("rank-unit-increase")
                         .with("set", EdgeSet::from_bits(m.n(), t.expand(idx)))
                         .with("edge", std::int64_t{t.positions[b]}));
        for (int c = b + 1; c < g; ++c) {
          if ((idx >> c) & 1) continue;
          std::size_t icf = i | (std::size_t{1} << c);
          std::size_t ief = ie | (std::size_t{1} << c);
          if (t.rank_of[ief] + t.rank_of[i] > t.rank_of[ie] + t.rank_of[icf])
            rep.record(Witness("submodularity")
                           .with("set", EdgeSet::from_bits(m.n(), t.expand(idx)))
                           .with("edge_e", std::int64_t{t.positions[b]})
                           .with("edge_f", std::int64_t{t.positions[c]}));
        }
      }
    }
  } else {
    std::mt19937_64 rng(scope.seed);
    for (std::uint64_t i = 0; i < scope.count; ++i) {
      EdgeBits x = static_cast<EdgeBits>(rng()) & ground.bits;
      std::vector<int> outside;
      for (int p : pos)
        if (!((x >> p) & 1)) outside.push_back(p);
      int e = -1, f = -1;
      if (!outside.empty()) e = outside[rng() % outside.size()];
      if (outside.size() >= 2) {
        do {
          f = outside[rng() % outside.size()];
        } while (f == e);
      }
      probe(EdgeSet::from_bits(m.n(), x), e, f);
    }
  }
  rep.finalize();
  return rep;
}

}  // namespace armlab
