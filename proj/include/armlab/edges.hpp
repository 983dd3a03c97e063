// Combinatorics of the complete graph K(V): edges, bit-packed edge sets,
// the named edge-set constructions (star, bigstar, delta, the H_m families),
// and vertex connectivity by exhaustive cut enumeration.
#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace armlab {

// Desk scale: everything in this workbench lives on K(V) with |V| <= 8,
// so an edge set fits in 28 bits and a vertex set in 8.
constexpr int kMaxVertices = 8;
constexpr int kMaxEdges = kMaxVertices * (kMaxVertices - 1) / 2;

using EdgeBits = std::uint32_t;
using VertexBits = std::uint16_t;

struct Edge {
  int u = 0, v = 1;  // canonical: u < v
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Lexicographic rank of (u,v) among the n(n-1)/2 edges of K(V); fixed once,
// used by every serialization and every bit layout.
int edge_rank(Edge e, int n);
Edge edge_unrank(int r, int n);
int edge_count(int n);  // n(n-1)/2

struct VertexSet {
  int n = 0;
  VertexBits bits = 0;

  static VertexSet of(int n, std::initializer_list<int> vs);
  static VertexSet full(int n);
  bool contains(int v) const { return (bits >> v) & 1; }
  int count() const { return std::popcount(bits); }
  bool empty() const { return bits == 0; }
  bool subset_of(const VertexSet& o) const { return (bits & ~o.bits) == 0; }
  VertexSet with(int v) const { return {n, static_cast<VertexBits>(bits | (VertexBits(1) << v))}; }
  VertexSet without(int v) const { return {n, static_cast<VertexBits>(bits & ~(VertexBits(1) << v))}; }
  std::vector<int> members() const;
  friend bool operator==(const VertexSet&, const VertexSet&) = default;
};

VertexSet vertex_union(const VertexSet& a, const VertexSet& b);
VertexSet vertex_intersection(const VertexSet& a, const VertexSet& b);
VertexSet vertex_difference(const VertexSet& a, const VertexSet& b);

struct EdgeSet {
  int n = 0;
  EdgeBits bits = 0;

  static EdgeSet empty_on(int n) { return {n, 0}; }
  static EdgeSet of(int n, std::initializer_list<Edge> es);
  static EdgeSet from_bits(int n, EdgeBits b) { return {n, b}; }

  int count() const { return std::popcount(bits); }
  bool empty() const { return bits == 0; }
  bool contains(int edge_index) const { return (bits >> edge_index) & 1; }
  bool contains(Edge e) const;
  bool subset_of(const EdgeSet& o) const { return (bits & ~o.bits) == 0; }
  EdgeSet with(int edge_index) const { return {n, bits | (EdgeBits(1) << edge_index)}; }
  EdgeSet without(int edge_index) const { return {n, bits & ~(EdgeBits(1) << edge_index)}; }
  std::vector<Edge> edges() const;  // lexicographic order
  friend bool operator==(const EdgeSet&, const EdgeSet&) = default;
};

EdgeSet edge_union(const EdgeSet& a, const EdgeSet& b);
EdgeSet edge_intersection(const EdgeSet& a, const EdgeSet& b);
EdgeSet edge_difference(const EdgeSet& a, const EdgeSet& b);
EdgeSet edge_complement(const EdgeSet& a);  // within K(V)

// Canonical family order: by (cardinality, bit pattern). All enumerated
// families are reported in this order for reproducible output.
bool family_less(const EdgeSet& a, const EdgeSet& b);
void sort_family(std::vector<EdgeSet>& family);

// K(W) = {uv | u,v in W, u != v}.
EdgeSet complete_edges(const VertexSet& w);
// V(E): endpoints of the edges of E.
VertexSet support(const EdgeSet& e);
// star(v) = {vu in K(V) | u != v}.
EdgeSet star(int v, int n);
// bigstar(V') = K(V) \ K(V \ V').
EdgeSet bigstar(const VertexSet& vp);
// Delta_v^A = K({v} u A) ∪ K(V \ {v}); requires v not in A.
EdgeSet delta(int v, const VertexSet& a);
// Number of edges of E containing v.
int valence(const EdgeSet& e, int v);
// E ∪ {aw : a in anchors}; anchors ⊆ support(E), w fresh.
EdgeSet zero_extension(const EdgeSet& e, const VertexSet& anchors, int w);

// H_m(V): all K(V1) ∪ K(V2) with V1 ∪ V2 = V, |V1 ∩ V2| = m-1 and neither
// side contained in the other, deduplicated by edge-set equality.
std::vector<EdgeSet> hm_family(int n, int m);
// H_m^(1)(V): the subfamily with |V1| = m, i.e. all Delta_v^A with |A| = m-1.
// Empty for n <= m (the containment guard kills every candidate).
std::vector<EdgeSet> hm1_family(int n, int m);
// H_m^(1) relative to the complete graph on X only (used by the recursive
// hyperplane condition): all K_X(V1) ∪ K_X(V2) splits of X with |V1| = m.
std::vector<EdgeSet> hm1_family_on(const VertexSet& x, int m);

// True iff (support(E), E) has >= k+1 vertices and no vertex cut of size < k,
// decided by removing every vertex subset of size < k. Exhaustion doubles as
// the correctness oracle at this scale.
bool is_k_vertex_connected(const EdgeSet& e, int k);

std::string to_string(const Edge& e);
std::string to_string(const EdgeSet& e);
std::string to_string(const VertexSet& v);

}  // namespace armlab
