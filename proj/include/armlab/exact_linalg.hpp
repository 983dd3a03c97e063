// Exact rank computation for small integer/rational matrices: fraction-free
// Bareiss elimination over GMP integers as ground truth, plus a fast path
// over residues modulo a random 62-bit prime that is cross-checked against
// the exact path on a deterministic seeded sample of queries.
#pragma once

#include <gmpxx.h>

#include <atomic>
#include <cstdint>
#include <vector>

namespace armlab {

using BigInt = mpz_class;
using Rational = mpq_class;

// Dense row-major matrix of exact rationals; tiny sizes only.
struct RationalMatrix {
  int rows = 0, cols = 0;
  std::vector<Rational> a;

  RationalMatrix() = default;
  RationalMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  Rational& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Rational& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

// Rank of an integer matrix by Bareiss fraction-free elimination.
int bareiss_rank(std::vector<std::vector<BigInt>> m);

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(std::uint64_t x);
// Seeded random prime in [2^61, 2^62).
std::uint64_t random_prime_62(std::uint64_t seed);

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p);

// Rank of a row set over GF(p), p < 2^63.
int modular_rank(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p);

// Rank oracle over a fixed row family: each query selects a subset of rows by
// a bitmask. Answers come from the modular fast path; roughly one query in 64
// (seeded, deterministic in query order) is recomputed exactly and any
// disagreement throws. exact_rank_rows() always takes the exact path.
class LinearRankEngine {
 public:
  LinearRankEngine(RationalMatrix rows, std::uint64_t seed);

  int row_count() const { return all_rows_.rows; }
  int col_count() const { return all_rows_.cols; }
  const RationalMatrix& rows() const { return all_rows_; }

  int rank_rows(std::uint32_t row_mask) const;
  int exact_rank_rows(std::uint32_t row_mask) const;

 private:
  RationalMatrix all_rows_;
  std::vector<std::vector<BigInt>> int_rows_;       // denominator-cleared
  std::vector<std::vector<std::uint64_t>> mod_rows_;
  std::uint64_t prime_;
  std::uint64_t seed_;
  mutable std::atomic<std::uint64_t> query_counter_{0};
};

}  // namespace armlab
