#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "armlab/edges.hpp"
#include "armlab/exact_linalg.hpp"
#include "armlab/reports.hpp"

namespace armlab {

struct EmptyFamily : std::runtime_error {
  EmptyFamily() : std::runtime_error("basis family is empty") {}
};

struct UnequalCardinality : std::runtime_error {
  EdgeSet b1, b2;
  UnequalCardinality(EdgeSet a, EdgeSet b)
      : std::runtime_error("basis family members have unequal cardinality"),
        b1(a), b2(b) {}
};

struct ExchangeViolation : std::runtime_error {
  EdgeSet b1, b2;
  Edge x;
  ExchangeViolation(EdgeSet a, EdgeSet b, Edge e)
      : std::runtime_error("basis exchange fails"), b1(a), b2(b), x(e) {}
};

struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct TNotClosed : std::runtime_error {
  EdgeSet t;
  explicit TNotClosed(EdgeSet e)
      : std::runtime_error("set is not closed"), t(e) {}
};

// Family enumeration works off a full per-subset rank/closure table; the table
// is capped at 2^21 entries (ground of at most 21 edges, i.e. n <= 7).
inline constexpr int kGroundCapForTables = 21;

// Throws EmptyFamily / UnequalCardinality / ExchangeViolation on the first
// failure found; returns normally iff the family satisfies all three basis
// axioms on the given ground set.
void validate_basis_axioms(EdgeSet ground, const std::vector<EdgeSet>& bases);

// Full rank/closure lookup over every subset of the ground set, addressed by
// a compact index that packs the ground's edge positions into low bits.
struct SubsetTables {
  EdgeSet ground;
  std::vector<int> positions;  // ambient edge index of each compact bit
  int pos_of_edge[kMaxEdges];  // inverse map, -1 off ground
  std::vector<std::uint8_t> rank_of;   // indexed by compact subset
  std::vector<EdgeBits> closure_of;    // ambient bits, indexed by compact subset

  std::uint32_t compact(EdgeBits ambient) const {
    std::uint32_t idx = 0;
    EdgeBits rest = ambient & ground.bits;
    while (rest) {
      int e = std::countr_zero(rest);
      rest &= rest - 1;
      idx |= 1u << pos_of_edge[e];
    }
    return idx;
  }
  EdgeBits expand(std::uint32_t idx) const {
    EdgeBits bits = 0;
    while (idx) {
      int b = std::countr_zero(idx);
      idx &= idx - 1;
      bits |= EdgeBits{1} << positions[b];
    }
    return bits;
  }
  std::size_t size() const { return rank_of.size(); }
};

class Matroid {
 public:
  // Validates the family eagerly (O(|bases|^2 r^2) pair-pivot scan).
  static Matroid from_bases(int n, std::vector<EdgeSet> bases);
  static Matroid from_bases_on(int n, EdgeSet ground, std::vector<EdgeSet> bases);
  // Row r of the matrix represents the edge with index r; a seeded residue
  // fast path backs rank queries, cross-checked against exact rationals.
  static Matroid from_linear_rows(int n, RationalMatrix rows, std::uint64_t seed);
  // Cycle matroid of the complete graph K_n.
  static Matroid cycle(int n);

  int n() const { return n_; }
  EdgeSet ground() const { return ground_; }
  std::string backend_name() const;

  int rank() const { return rank(ground_); }
  int rank(EdgeSet x) const;
  bool is_independent(EdgeSet x) const { return rank(x) == x.count(); }
  // Largest superset of x within ground with the same rank.
  EdgeSet closure(EdgeSet x) const;
  // Intersection of the hyperplanes containing x; ground when none do.
  // Agrees with closure() on every input (asserted in tests).
  EdgeSet closure_via_hyperplanes(EdgeSet x) const;

  FamilyReport circuits() const;
  FamilyReport hyperplanes() const;
  FamilyReport cocircuits() const;
  FamilyReport flats() const;
  FamilyReport bases_report() const;
  // The basis family itself (enumerated via tables unless this is an
  // unrestricted bases backend).
  std::vector<EdgeSet> bases() const;

  Matroid dual() const;
  // Matroid on t (subset of ground) with the inherited rank function.
  Matroid restriction(EdgeSet t) const;

  // Lazily built; throws CapExceeded when the ground exceeds 21 edges.
  const SubsetTables& tables() const;

  // Serialization access: non-null for the matching backend.
  const std::vector<EdgeSet>* basis_family() const;
  const RationalMatrix* linear_rows() const;

 private:
  struct BasisBackend {
    std::vector<EdgeSet> bases;
  };
  struct LinearBackend {
    std::shared_ptr<const LinearRankEngine> engine;
    std::shared_ptr<const RationalMatrix> rows;
  };
  struct CycleBackend {};
  using Backend = std::variant<BasisBackend, LinearBackend, CycleBackend>;

  Matroid(int n, EdgeSet ground, Backend b);

  int backend_rank(EdgeSet x) const;

  int n_ = 0;
  EdgeSet ground_;
  Backend backend_;
  mutable std::shared_ptr<const SubsetTables> tables_;
  std::shared_ptr<std::mutex> tables_mu_;
};

// |C ∩ C*| != 1 for every circuit C and cocircuit C*.
AxiomReport check_circuit_cocircuit_intersection(const Matroid& m);

// Decides whether f is a flat by the circuit criterion (every circuit c with
// |c \ f| <= 1 lies inside f); throws std::logic_error if the criterion
// disagrees with closure(f) == f.
bool check_flat_by_circuits(const Matroid& m, EdgeSet f);

// True iff every unrefinable chain of flats from t to the ground set has
// length rank(ground) - rank(t). Throws TNotClosed when t is not a flat.
bool verify_chain_rank(const Matroid& m, EdgeSet t);

// rank(x) <= |x|, monotonicity, and (local) submodularity; exhaustive for
// grounds of at most 15 edges, sampled per scope above that.
AxiomReport check_rank_axioms(const Matroid& m, Scope scope);

}  // namespace armlab
