#include "armlab/closure.hpp"

#include <algorithm>

namespace armlab {

std::uint32_t ClosureOperator::compact(EdgeBits ambient) const {
  std::uint32_t idx = 0;
  EdgeBits rest = ambient & ground.bits;
  while (rest) {
    int e = std::countr_zero(rest);
    rest &= rest - 1;
    idx |= 1u << pos_of_edge[e];
  }
  return idx;
}

EdgeBits ClosureOperator::expand(std::uint32_t idx) const {
  EdgeBits bits = 0;
  while (idx) {
    int b = std::countr_zero(idx);
    idx &= idx - 1;
    bits |= EdgeBits{1} << positions[b];
  }
  return bits;
}

EdgeSet ClosureOperator::apply(EdgeSet x) const {
  return EdgeSet::from_bits(n, table[compact(x.bits)]);
}

ClosureOperator ClosureOperator::from_function(
    int n, EdgeSet ground, const std::function<EdgeSet(EdgeSet)>& fn) {
  ClosureOperator op;
  op.n = n;
  op.ground = ground;
  op.ground.n = n;
  int g = ground.count();
  if (g > kGroundCapForClosure)
    throw CapExceeded("closure-operator tables capped at " +
                      std::to_string(kGroundCapForClosure) + " ground edges");
  for (int e = 0; e < kMaxEdges; ++e) op.pos_of_edge[e] = -1;
  EdgeBits rest = ground.bits;
  while (rest) {
    int e = std::countr_zero(rest);
    rest &= rest - 1;
    op.pos_of_edge[e] = static_cast<int>(op.positions.size());
    op.positions.push_back(e);
  }
  op.table.resize(std::size_t{1} << g);
  for (std::size_t i = 0; i < op.table.size(); ++i) {
    EdgeSet x = EdgeSet::from_bits(n, op.expand(static_cast<std::uint32_t>(i)));
    op.table[i] = fn(x).bits & ground.bits;
  }
  return op;
}

ClosureOperator closure_operator_of(const Matroid& m) {
  return ClosureOperator::from_function(
      m.n(), m.ground(), [&m](EdgeSet x) { return m.closure(x); });
}

ClosureOperator closure_from_bases(int n, const std::vector<EdgeSet>& bases) {
  Matroid m = Matroid::from_bases(n, bases);
  FamilyReport hs = m.hyperplanes();
  EdgeSet ground = m.ground();
  return ClosureOperator::from_function(n, ground, [&](EdgeSet x) {
    EdgeBits acc = ground.bits;
    bool any = false;
    for (const auto& h : hs.members) {
      if ((x.bits & ~h.bits) == 0) {
        acc &= h.bits;
        any = true;
      }
    }
    return EdgeSet::from_bits(n, any ? acc : ground.bits);
  });
}

std::vector<EdgeSet> bases_from_closure(const ClosureOperator& sigma) {
  std::vector<EdgeSet> independents;
  int best = 0;
  for (std::size_t i = 0; i < sigma.table.size(); ++i) {
    std::uint32_t idx = static_cast<std::uint32_t>(i);
    bool indep = true;
    std::uint32_t rest = idx;
    while (rest) {
      int b = std::countr_zero(rest);
      rest &= rest - 1;
      std::uint32_t without = idx & ~(1u << b);
      EdgeBits elem = EdgeBits{1} << sigma.positions[b];
      if (sigma.table[without] & elem) {
        indep = false;
        break;
      }
    }
    if (!indep) continue;
    int s = std::popcount(idx);
    if (s > best) {
      best = s;
      independents.clear();
    }
    if (s == best)
      independents.push_back(EdgeSet::from_bits(sigma.n, sigma.expand(idx)));
  }
  sort_family(independents);
  return independents;
}

AxiomReport validate_closure_axioms(const ClosureOperator& sigma) {
  AxiomReport rep;
  rep.suite = "closure-axioms";
  rep.scope = Scope::Exhaustive();
  int g = static_cast<int>(sigma.positions.size());
  std::size_t size = sigma.table.size();
  auto as_set = [&](std::uint32_t idx) {
    return EdgeSet::from_bits(sigma.n, sigma.expand(idx));
  };
  bool ok_ext = true, ok_mono = true, ok_idem = true, ok_exch = true;
  std::vector<std::uint32_t> ct(size);
  for (std::size_t i = 0; i < size; ++i) ct[i] = sigma.compact(sigma.table[i]);

  for (std::size_t i = 0; i < size; ++i) {
    std::uint32_t a = static_cast<std::uint32_t>(i);
    if ((a & ~ct[i]) != 0) {
      ok_ext = false;
      rep.record(Witness("extensivity")
                     .with("A", as_set(a))
                     .with("closure", as_set(ct[i])));
    }
    if (sigma.table[ct[i]] != sigma.table[i]) {
      ok_idem = false;
      rep.record(Witness("idempotence")
                     .with("A", as_set(a))
                     .with("closure", as_set(ct[i])));
    }
  }

  // monotonicity over all nested pairs: enumerate supersets b of each a by
  // walking submasks of the complement
  for (std::size_t i = 0; i < size; ++i) {
    std::uint32_t a = static_cast<std::uint32_t>(i);
    std::uint32_t comp = static_cast<std::uint32_t>(size - 1) & ~a;
    for (std::uint32_t add = comp;; add = (add - 1) & comp) {
      if (add != 0) {
        std::uint32_t b = a | add;
        if ((ct[a] & ~ct[b]) != 0) {
          ok_mono = false;
          rep.record(Witness("monotonicity")
                         .with("A", as_set(a))
                         .with("B", as_set(b)));
        }
      }
      if (add == 0) break;
    }
  }

  // guarded exchange: x in sigma(A+y) \ sigma(A) implies y in sigma(A+x)
  for (std::size_t i = 0; i < size; ++i) {
    std::uint32_t a = static_cast<std::uint32_t>(i);
    for (int by = 0; by < g; ++by) {
      if ((a >> by) & 1) continue;
      std::uint32_t ay = a | (1u << by);
      std::uint32_t gained = ct[ay] & ~ct[a];
      std::uint32_t rest = gained & ~(1u << by);
      while (rest) {
        int bx = std::countr_zero(rest);
        rest &= rest - 1;
        std::uint32_t ax = a | (1u << bx);
        if (!((ct[ax] >> by) & 1)) {
          ok_exch = false;
          rep.record(Witness("exchange")
                         .with("A", as_set(a))
                         .with("x", std::int64_t{sigma.positions[bx]})
                         .with("y", std::int64_t{sigma.positions[by]}));
        }
      }
    }
  }

  rep.details["extensivity"] = ok_ext;
  rep.details["monotonicity"] = ok_mono;
  rep.details["idempotence"] = ok_idem;
  rep.details["exchange"] = ok_exch;
  rep.finalize();
  return rep;
}

}  // namespace armlab
