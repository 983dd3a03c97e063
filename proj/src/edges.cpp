#include "armlab/edges.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace armlab {

int edge_count(int n) {
  if (n < 0 || n > kMaxVertices)
    throw std::invalid_argument("edge_count: vertex count outside desk scale");
  return n * (n - 1) / 2;
}

static void require_vertex(int v, int n, const char* what) {
  if (v < 0 || v >= n)
    throw std::invalid_argument(std::string(what) + ": vertex out of range");
}

int edge_rank(Edge e, int n) {
  require_vertex(e.u, n, "edge_rank");
  require_vertex(e.v, n, "edge_rank");
  if (e.u >= e.v) throw std::invalid_argument("edge_rank: edge not canonical (need u < v)");
  return e.u * (2 * n - e.u - 1) / 2 + (e.v - e.u - 1);
}

Edge edge_unrank(int r, int n) {
  if (r < 0 || r >= edge_count(n)) throw std::invalid_argument("edge_unrank: rank out of range");
  int u = 0;
  while (r >= n - 1 - u) {
    r -= n - 1 - u;
    ++u;
  }
  return {u, u + 1 + r};
}

VertexSet VertexSet::of(int n, std::initializer_list<int> vs) {
  VertexSet s{n, 0};
  for (int v : vs) {
    require_vertex(v, n, "VertexSet::of");
    s.bits |= VertexBits(1) << v;
  }
  return s;
}

VertexSet VertexSet::full(int n) {
  return {n, static_cast<VertexBits>((VertexBits(1) << n) - 1)};
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (contains(v)) out.push_back(v);
  return out;
}

static void require_same_n(int a, int b, const char* what) {
  if (a != b) throw std::invalid_argument(std::string(what) + ": mixed ambient vertex counts");
}

VertexSet vertex_union(const VertexSet& a, const VertexSet& b) {
  require_same_n(a.n, b.n, "vertex_union");
  return {a.n, static_cast<VertexBits>(a.bits | b.bits)};
}
VertexSet vertex_intersection(const VertexSet& a, const VertexSet& b) {
  require_same_n(a.n, b.n, "vertex_intersection");
  return {a.n, static_cast<VertexBits>(a.bits & b.bits)};
}
VertexSet vertex_difference(const VertexSet& a, const VertexSet& b) {
  require_same_n(a.n, b.n, "vertex_difference");
  return {a.n, static_cast<VertexBits>(a.bits & ~b.bits)};
}

EdgeSet EdgeSet::of(int n, std::initializer_list<Edge> es) {
  EdgeSet s{n, 0};
  for (const Edge& e : es) s.bits |= EdgeBits(1) << edge_rank(e, n);
  return s;
}

bool EdgeSet::contains(Edge e) const { return contains(edge_rank(e, n)); }

std::vector<Edge> EdgeSet::edges() const {
  std::vector<Edge> out;
  for (int i = 0; i < edge_count(n); ++i)
    if (contains(i)) out.push_back(edge_unrank(i, n));
  return out;
}

EdgeSet edge_union(const EdgeSet& a, const EdgeSet& b) {
  require_same_n(a.n, b.n, "edge_union");
  return {a.n, a.bits | b.bits};
}
EdgeSet edge_intersection(const EdgeSet& a, const EdgeSet& b) {
  require_same_n(a.n, b.n, "edge_intersection");
  return {a.n, a.bits & b.bits};
}
EdgeSet edge_difference(const EdgeSet& a, const EdgeSet& b) {
  require_same_n(a.n, b.n, "edge_difference");
  return {a.n, a.bits & ~b.bits};
}
EdgeSet edge_complement(const EdgeSet& a) {
  EdgeBits full = (EdgeBits(1) << edge_count(a.n)) - 1;
  return {a.n, static_cast<EdgeBits>(full & ~a.bits)};
}

bool family_less(const EdgeSet& a, const EdgeSet& b) {
  if (a.count() != b.count()) return a.count() < b.count();
  return a.bits < b.bits;
}

void sort_family(std::vector<EdgeSet>& family) {
  std::sort(family.begin(), family.end(), family_less);
}

EdgeSet complete_edges(const VertexSet& w) {
  EdgeSet out{w.n, 0};
  for (int i = 0; i < edge_count(w.n); ++i) {
    Edge e = edge_unrank(i, w.n);
    if (w.contains(e.u) && w.contains(e.v)) out.bits |= EdgeBits(1) << i;
  }
  return out;
}

VertexSet support(const EdgeSet& e) {
  VertexSet s{e.n, 0};
  for (int i = 0; i < edge_count(e.n); ++i)
    if (e.contains(i)) {
      Edge ed = edge_unrank(i, e.n);
      s.bits |= (VertexBits(1) << ed.u) | (VertexBits(1) << ed.v);
    }
  return s;
}

EdgeSet star(int v, int n) {
  require_vertex(v, n, "star");
  EdgeSet out{n, 0};
  for (int u = 0; u < n; ++u)
    if (u != v) out.bits |= EdgeBits(1) << edge_rank({std::min(u, v), std::max(u, v)}, n);
  return out;
}

EdgeSet bigstar(const VertexSet& vp) {
  VertexSet rest = vertex_difference(VertexSet::full(vp.n), vp);
  return edge_difference(complete_edges(VertexSet::full(vp.n)), complete_edges(rest));
}

EdgeSet delta(int v, const VertexSet& a) {
  require_vertex(v, a.n, "delta");
  if (a.contains(v)) throw std::invalid_argument("delta: v must not lie in A");
  return edge_union(complete_edges(a.with(v)),
                    complete_edges(VertexSet::full(a.n).without(v)));
}

int valence(const EdgeSet& e, int v) {
  require_vertex(v, e.n, "valence");
  return edge_intersection(e, star(v, e.n)).count();
}

EdgeSet zero_extension(const EdgeSet& e, const VertexSet& anchors, int w) {
  require_same_n(e.n, anchors.n, "zero_extension");
  require_vertex(w, e.n, "zero_extension");
  VertexSet sup = support(e);
  if (sup.contains(w)) throw std::invalid_argument("zero_extension: w already in support(E)");
  if (!anchors.subset_of(sup)) throw std::invalid_argument("zero_extension: anchors not in support(E)");
  EdgeSet out = e;
  for (int a : anchors.members())
    out.bits |= EdgeBits(1) << edge_rank({std::min(a, w), std::max(a, w)}, e.n);
  return out;
}

// Shared split enumerator: emits K(V1) ∪ K(V2) for every unordered split of
// scope into V1, V2 with intersection core of size m-1 and both extras
// nonempty (which is exactly the "neither side contained in the other" rule).
static std::vector<EdgeSet> splits_with_core(const VertexSet& scope, int m,
                                             bool one_side_size_m) {
  int n = scope.n;
  std::set<EdgeBits> seen;
  std::vector<EdgeSet> out;
  std::vector<int> verts = scope.members();
  int k = static_cast<int>(verts.size());
  // cores: (m-1)-subsets of scope, as index combinations
  std::vector<int> idx(m - 1);
  for (int i = 0; i < m - 1; ++i) idx[i] = i;
  bool more = (m - 1 <= k);
  if (m - 1 == 0) more = true;
  while (more) {
    VertexBits core = 0;
    for (int i : idx) core |= VertexBits(1) << verts[i];
    VertexBits rest = scope.bits & ~core;
    int rest_count = std::popcount(rest);
    if (rest_count >= 2) {
      // enumerate nonempty proper submasks of rest; fix lowest rest bit into
      // side 1 to kill the unordered double count
      VertexBits low = rest & static_cast<VertexBits>(-static_cast<int>(rest));
      for (VertexBits s1 = rest; s1 != 0; s1 = (s1 - 1) & rest) {
        if (!(s1 & low) || s1 == rest) continue;
        VertexBits s2 = rest & ~s1;
        VertexSet v1{n, static_cast<VertexBits>(core | s1)};
        VertexSet v2{n, static_cast<VertexBits>(core | s2)};
        if (one_side_size_m && v1.count() != m && v2.count() != m) continue;
        EdgeSet h = edge_union(complete_edges(v1), complete_edges(v2));
        if (seen.insert(h.bits).second) out.push_back(h);
      }
    }
    // next (m-1)-combination
    if (m - 1 == 0) break;
    int i = m - 2;
    while (i >= 0 && idx[i] == k - (m - 1) + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < m - 1; ++j) idx[j] = idx[j - 1] + 1;
  }
  sort_family(out);
  return out;
}

std::vector<EdgeSet> hm_family(int n, int m) {
  if (m < 1) throw std::invalid_argument("hm_family: m must be >= 1");
  if (n <= m - 1) throw std::invalid_argument("hm_family: need n >= m");
  return splits_with_core(VertexSet::full(n), m, false);
}

std::vector<EdgeSet> hm1_family(int n, int m) {
  if (m < 1) throw std::invalid_argument("hm1_family: m must be >= 1");
  if (n < 0 || n > kMaxVertices) throw std::invalid_argument("hm1_family: n out of range");
  if (n <= m) return {};
  return splits_with_core(VertexSet::full(n), m, true);
}

std::vector<EdgeSet> hm1_family_on(const VertexSet& x, int m) {
  if (m < 1) throw std::invalid_argument("hm1_family_on: m must be >= 1");
  if (x.count() <= m) return {};
  return splits_with_core(x, m, true);
}

bool is_k_vertex_connected(const EdgeSet& e, int k) {
  if (e.empty()) throw std::invalid_argument("is_k_vertex_connected: empty edge set");
  VertexSet sup = support(e);
  if (sup.count() < k + 1) return false;
  // adjacency over support
  std::vector<VertexBits> adj(e.n, 0);
  for (const Edge& ed : e.edges()) {
    adj[ed.u] |= VertexBits(1) << ed.v;
    adj[ed.v] |= VertexBits(1) << ed.u;
  }
  // remove every vertex subset S ⊆ support with |S| < k; the remainder must
  // stay connected whenever it has at least 2 vertices
  for (VertexBits s = sup.bits;; s = (s - 1) & sup.bits) {
    VertexBits cut = sup.bits & ~s;  // iterate complements so s=sup comes first
    if (std::popcount(cut) < k) {
      VertexBits rest = sup.bits & ~cut;
      if (std::popcount(rest) >= 2) {
        VertexBits start = rest & static_cast<VertexBits>(-static_cast<int>(rest));
        VertexBits reached = start, frontier = start;
        while (frontier) {
          VertexBits next = 0;
          VertexBits f = frontier;
          while (f) {
            int v = std::countr_zero(f);
            f &= f - 1;
            next |= adj[v] & rest;
          }
          frontier = next & ~reached;
          reached |= next;
        }
        if (reached != rest) return false;
      }
    }
    if (s == 0) break;
  }
  return true;
}

std::string to_string(const Edge& e) {
  return std::to_string(e.u) + std::to_string(e.v);
}

std::string to_string(const EdgeSet& e) {
  std::string out = "{";
  bool first = true;
  for (const Edge& ed : e.edges()) {
    if (!first) out += ",";
    out += to_string(ed);
    first = false;
  }
  return out + "}";
}

std::string to_string(const VertexSet& v) {
  std::string out = "{";
  bool first = true;
  for (int x : v.members()) {
    if (!first) out += ",";
    out += std::to_string(x);
    first = false;
  }
  return out + "}";
}

}  // namespace armlab
