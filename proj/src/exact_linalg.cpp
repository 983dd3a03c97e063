#include "armlab/exact_linalg.hpp"

#include <bit>
#include <random>
#include <stdexcept>
#include <utility>

namespace armlab {

int bareiss_rank(std::vector<std::vector<BigInt>> m) {
  if (m.empty()) return 0;
  int rows = static_cast<int>(m.size());
  int cols = static_cast<int>(m[0].size());
  BigInt prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[r], m[pivot]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        BigInt t = m[i][j] * m[r][c] - m[i][c] * m[r][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = t;
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % p);
}

static std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, p);
    a = mulmod_u64(a, a, p);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(std::uint64_t x) {
  if (x < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (x % q == 0) return x == q;
  }
  std::uint64_t d = x - 1;
  int s = std::countr_zero(d);
  d >>= s;
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t y = powmod_u64(a, d, x);
    if (y == 1 || y == x - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      y = mulmod_u64(y, y, x);
      if (y == x - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t random_prime_62(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (;;) {
    std::uint64_t c = (1ull << 61) | (rng() & ((1ull << 61) - 1)) | 1ull;
    if (is_prime_u64(c)) return c;
  }
}

int modular_rank(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) {
  if (m.empty()) return 0;
  int rows = static_cast<int>(m.size());
  int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] % p != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[r], m[pivot]);
    std::uint64_t inv = powmod_u64(m[r][c] % p, p - 2, p);
    for (int i = r + 1; i < rows; ++i) {
      std::uint64_t f = mulmod_u64(m[i][c] % p, inv, p);
      if (f == 0) continue;
      for (int j = c; j < cols; ++j) {
        std::uint64_t sub = mulmod_u64(f, m[r][j] % p, p);
        m[i][j] = (m[i][j] % p + p - sub) % p;
      }
    }
    ++r;
  }
  return r;
}

static std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

LinearRankEngine::LinearRankEngine(RationalMatrix rows, std::uint64_t seed)
    : all_rows_(std::move(rows)), prime_(random_prime_62(seed ^ 0x62b17ull)), seed_(seed) {
  int_rows_.resize(all_rows_.rows);
  mod_rows_.resize(all_rows_.rows);
  for (int r = 0; r < all_rows_.rows; ++r) {
    // scale the row to integers; row scaling does not change the row matroid
    BigInt lcm = 1;
    for (int c = 0; c < all_rows_.cols; ++c) {
      BigInt den = all_rows_.at(r, c).get_den();
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    int_rows_[r].resize(all_rows_.cols);
    mod_rows_[r].resize(all_rows_.cols);
    for (int c = 0; c < all_rows_.cols; ++c) {
      Rational scaled = all_rows_.at(r, c) * Rational(lcm);
      BigInt z = scaled.get_num();  // denominator is 1 after scaling
      int_rows_[r][c] = z;
      BigInt zm = z % BigInt(static_cast<unsigned long>(prime_));
      if (zm < 0) zm += static_cast<unsigned long>(prime_);
      mod_rows_[r][c] = zm.get_ui();
    }
  }
}

int LinearRankEngine::exact_rank_rows(std::uint32_t row_mask) const {
  std::vector<std::vector<BigInt>> sel;
  for (int r = 0; r < all_rows_.rows; ++r)
    if ((row_mask >> r) & 1) sel.push_back(int_rows_[r]);
  return bareiss_rank(std::move(sel));
}

int LinearRankEngine::rank_rows(std::uint32_t row_mask) const {
  std::vector<std::vector<std::uint64_t>> sel;
  for (int r = 0; r < all_rows_.rows; ++r)
    if ((row_mask >> r) & 1) sel.push_back(mod_rows_[r]);
  int fast = modular_rank(std::move(sel), prime_);
  std::uint64_t idx = query_counter_.fetch_add(1, std::memory_order_relaxed);
  if ((splitmix64(seed_ ^ idx) & 63) == 0) {
    int exact = exact_rank_rows(row_mask);
    if (exact != fast)
      throw std::logic_error("LinearRankEngine: modular and exact rank disagree");
  }
  return fast;
}

}  // namespace armlab
