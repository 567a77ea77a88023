#pragma once

// Reference implementations used only by the tests. They are deliberately
// slow and share no code with the library beyond the Graph type.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "cutcount/count.hpp"
#include "cutcount/graph.hpp"

namespace oracle {

using cutcount::Count;
using cutcount::Edge;
using cutcount::Graph;
using cutcount::Vertex;
using cutcount::VertexSet;

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Number of connected subgraphs whose vertex set contains `required`,
// by looping over every edge subset.
inline Count oracle_containing(const Graph& g, VertexSet required) {
  const int n = g.order();
  const auto& edges = g.edges();
  const int m = static_cast<int>(edges.size());
  Count total = 0;
  if (std::popcount(required) <= 1) {
    total += required == 0 ? n : 1;
  }
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    DisjointSets ds(n);
    VertexSet touched = 0;
    for (int i = 0; i < m; ++i) {
      if ((mask >> i) & 1U) {
        ds.unite(edges[i].u, edges[i].v);
        touched |= VertexSet{1} << edges[i].u | VertexSet{1} << edges[i].v;
      }
    }
    if ((touched & required) != required) continue;
    const int root = ds.find(std::countr_zero(touched));
    bool connected = true;
    for (int v = 0; v < n && connected; ++v) {
      if (((touched >> v) & 1U) && ds.find(v) != root) connected = false;
    }
    if (connected) ++total;
  }
  return total;
}

inline Count count(const Graph& g) { return oracle_containing(g, 0); }
inline Count count_at(const Graph& g, Vertex v) { return oracle_containing(g, VertexSet{1} << v); }

inline int components_without(const Graph& g, VertexSet removed) {
  const int n = g.order();
  DisjointSets ds(n);
  for (const Edge& e : g.edges()) {
    if (!((removed >> e.u) & 1U) && !((removed >> e.v) & 1U)) ds.unite(e.u, e.v);
  }
  int count = 0;
  for (int v = 0; v < n; ++v) {
    if (!((removed >> v) & 1U) && ds.find(v) == v) ++count;
  }
  return count;
}

inline bool connected(const Graph& g) { return components_without(g, 0) == 1; }

// Vertices whose removal increases the number of components.
inline VertexSet cut_vertices(const Graph& g) {
  const int base = components_without(g, 0);
  VertexSet cuts = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (components_without(g, VertexSet{1} << v) > base) cuts |= VertexSet{1} << v;
  }
  return cuts;
}

// Two edges lie in different blocks iff some vertex x separates them in G - x,
// where an edge at x is placed with its other endpoint.
inline bool same_block(const Graph& g, const Edge& e, const Edge& f) {
  if (e == f) return true;
  for (int x = 0; x < g.order(); ++x) {
    DisjointSets ds(g.order());
    for (const Edge& h : g.edges()) {
      if (h.u != x && h.v != x) ds.unite(h.u, h.v);
    }
    const int a = ds.find(e.u == x ? e.v : e.u);
    const int b = ds.find(f.u == x ? f.v : f.u);
    if (a != b) return false;
  }
  return true;
}

// Shortest cycle through each edge: 1 + distance between its ends once the
// edge is removed. Returns 0 for forests.
inline int girth(const Graph& g) {
  const int n = g.order();
  int best = 0;
  for (const Edge& e : g.edges()) {
    std::vector<int> dist(n, -1);
    std::vector<int> queue{e.u};
    dist[e.u] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int x = queue[head];
      for (int y = 0; y < n; ++y) {
        if (!g.adjacent(x, y) || dist[y] >= 0) continue;
        if ((x == e.u && y == e.v) || (x == e.v && y == e.u)) continue;
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
    if (dist[e.v] > 0 && (best == 0 || dist[e.v] + 1 < best)) best = dist[e.v] + 1;
  }
  return best;
}

// Lexicographically largest upper-triangle bit string over all n! labelings.
inline std::vector<bool> canonical_bits(const Graph& g) {
  const int n = g.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<bool> best;
  do {
    std::vector<bool> bits;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(perm[i], perm[j]));
    }
    if (best.empty() || bits > best) best = bits;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() && canonical_bits(a) == canonical_bits(b);
}

inline bool same_orbit(const Graph& g, Vertex u, Vertex v) {
  const int n = g.order();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (perm[u] != v) continue;
    bool automorphism = true;
    for (const Edge& e : g.edges()) {
      if (!g.adjacent(perm[e.u], perm[e.v])) {
        automorphism = false;
        break;
      }
    }
    if (automorphism) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Every labeled graph on n vertices, from its upper-triangle bit mask.
inline Graph from_mask(int n, std::uint64_t mask) {
  std::vector<Edge> edges;
  int bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if ((mask >> bit) & 1U) edges.push_back({i, j});
    }
  }
  return Graph(n, edges);
}

// Connected graphs on n vertices up to isomorphism, by brute force (n <= 6).
inline std::vector<Graph> connected_graphs(int n) {
  std::vector<Graph> reps;
  std::vector<std::vector<bool>> seen;
  const int pairs = n * (n - 1) / 2;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    Graph g = from_mask(n, mask);
    if (!connected(g)) continue;
    auto bits = canonical_bits(g);
    if (std::find(seen.begin(), seen.end(), bits) != seen.end()) continue;
    seen.push_back(std::move(bits));
    reps.push_back(std::move(g));
  }
  return reps;
}

// Random connected graph: a random spanning tree plus extra random edges.
inline Graph random_connected(std::mt19937_64& rng, int n, int extra_edges) {
  std::vector<Edge> edges;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (int i = 1; i < n; ++i) {
    const int j = std::uniform_int_distribution<int>(0, i - 1)(rng);
    edges.push_back({std::min(order[i], order[j]), std::max(order[i], order[j])});
  }
  const int max_edges = n * (n - 1) / 2;
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int tries = 0; tries < 50 * extra_edges && static_cast<int>(edges.size()) < std::min(max_edges, n - 1 + extra_edges); ++tries) {
    int a = pick(rng);
    int b = pick(rng);
    if (a == b) continue;
    Edge e{std::min(a, b), std::max(a, b)};
    if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
  }
  return Graph(n, edges);
}

}  // namespace oracle
