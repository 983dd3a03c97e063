#include "armlab/rigidity.hpp"

#include <random>

namespace armlab {

static bool points_distinct(const Embedding& p) {
  for (int u = 0; u < p.n; ++u)
    for (int v = u + 1; v < p.n; ++v)
      if (p.coords[u] == p.coords[v]) return false;
  return true;
}

Embedding random_integer_embedding(int n, int m, std::uint64_t seed) {
  if (n < 1 || n > kMaxVertices) throw std::invalid_argument("vertex count out of range");
  if (m < 1) throw std::invalid_argument("dimension must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-kCoordinateRange, kCoordinateRange);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Embedding p;
    p.n = n;
    p.m = m;
    p.coords.assign(n, {});
    for (int v = 0; v < n; ++v) {
      p.coords[v].reserve(m);
      for (int k = 0; k < m; ++k) p.coords[v].emplace_back(dist(rng));
    }
    if (points_distinct(p)) return p;
  }
  throw std::logic_error("could not draw distinct points");
}

int complete_rank_formula(int u, int m) {
  if (u <= m + 1) return u * (u - 1) / 2;
  return m * u - m * (m + 1) / 2;
}

RationalMatrix rigidity_matrix(const Embedding& p) {
  if (p.n < 1 || static_cast<int>(p.coords.size()) != p.n)
    throw std::invalid_argument("malformed embedding");
  for (const auto& c : p.coords)
    if (static_cast<int>(c.size()) != p.m)
      throw std::invalid_argument("malformed embedding");
  if (!points_distinct(p)) throw std::invalid_argument("coincident points");
  int rows = edge_count(p.n);
  RationalMatrix r(rows, p.m * p.n);
  for (int e = 0; e < rows; ++e) {
    Edge uv = edge_unrank(e, p.n);
    for (int k = 0; k < p.m; ++k) {
      Rational d = p.coords[uv.u][k] - p.coords[uv.v][k];
      r.at(e, k * p.n + uv.u) = d;
      r.at(e, k * p.n + uv.v) = -d;
    }
  }
  return r;
}

Matroid matroid_from_embedding(const Embedding& p, std::uint64_t engine_seed) {
  return Matroid::from_linear_rows(p.n, rigidity_matrix(p), engine_seed);
}

bool certify_generic(const Embedding& p, int m) {
  LinearRankEngine engine(rigidity_matrix(p), 0);
  int n = p.n;
  for (VertexBits u = 0; u < (VertexBits(1) << n); ++u) {
    VertexSet vs{n, u};
    EdgeSet ku = complete_edges(vs);
    if (engine.exact_rank_rows(ku.bits) != complete_rank_formula(vs.count(), m))
      return false;
  }
  return true;
}

Matroid generic_rigidity_matroid(int n, int m, std::uint64_t seed) {
  if (m < 1) throw std::invalid_argument("dimension must be positive");
  if (n < m + 1) throw std::invalid_argument("need n >= m+1");
  if (n > kMaxVertices) throw std::invalid_argument("vertex count out of range");
  for (int attempt = 0; attempt < kGenericRetryBudget; ++attempt) {
    Embedding p = random_integer_embedding(
        n, m, seed + 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(attempt));
    if (certify_generic(p, m)) return matroid_from_embedding(p, seed);
  }
  throw GenericityNotCertified(n, m, seed);
}

Matroid cycle_matroid_arm(int n) { return Matroid::cycle(n); }

}  // namespace armlab
