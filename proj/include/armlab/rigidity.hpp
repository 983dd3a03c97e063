#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "armlab/exact_linalg.hpp"
#include "armlab/matroid.hpp"

namespace armlab {

struct GenericityNotCertified : std::runtime_error {
  int n, m;
  std::uint64_t seed;
  GenericityNotCertified(int n_, int m_, std::uint64_t s)
      : std::runtime_error("no sampled embedding certified as generic within the retry budget"),
        n(n_), m(m_), seed(s) {}
};

// n points in R^m with exact rational coordinates, pairwise distinct.
struct Embedding {
  int n = 0, m = 0;
  std::vector<std::vector<Rational>> coords;  // coords[v] has m entries
};

inline constexpr long long kCoordinateRange = 1 << 20;
inline constexpr int kGenericRetryBudget = 8;

// Integer coordinates drawn uniformly from [-2^20, 2^20], redrawn (whole
// embedding) on the vanishing chance of a coincidence.
Embedding random_integer_embedding(int n, int m, std::uint64_t seed);

// r(K(U)) in an m-dimensional abstract rigidity matroid:
// C(u,2) for u <= m+1, else m*u - C(m+1,2).
int complete_rank_formula(int u, int m);

// One row per edge of K(V) in lexicographic order; columns in m blocks of n.
// Row uv carries coords(u)-coords(v) in u's column of each block and the
// negation in v's column. Throws std::invalid_argument on coincident points;
// degenerate (e.g. collinear) embeddings are accepted.
RationalMatrix rigidity_matrix(const Embedding& p);

// Linear-representation matroid of an explicit embedding, uncertified.
Matroid matroid_from_embedding(const Embedding& p, std::uint64_t engine_seed);

// True iff rank(K(U)) matches complete_rank_formula for every U subseteq V,
// computed over the exact arithmetic path.
bool certify_generic(const Embedding& p, int m);

// Seeded random embedding whose matroid is certified generic by checking the
// rank of every K(U) against the formula (exact arithmetic); re-samples up to
// kGenericRetryBudget embeddings, then throws GenericityNotCertified.
Matroid generic_rigidity_matroid(int n, int m, std::uint64_t seed);

// The unique 1-dimensional abstract rigidity matroid on K(V).
Matroid cycle_matroid_arm(int n);

}  // namespace armlab
