#include "cutcount/census.hpp"

#include <numeric>

namespace cutcount {

namespace {

Count to_count(std::uint64_t x) { return Count(x); }
Count to_count(const Count& x) { return x; }
Count to_count(unsigned __int128 x) {
  Count c = static_cast<std::uint64_t>(x >> 64);
  c <<= 64;
  c += static_cast<std::uint64_t>(x);
  return c;
}

template <class Int>
Int shifted_one(int exponent) {
  Int one = 1;
  return one << exponent;
}

void require_edge_capacity(const Graph& g) {
  if (g.size() > 64) {
    throw CountLimitExceeded("subgraph enumeration supports at most 64 edges, got " +
                             std::to_string(g.size()));
  }
}

// Edge-set growth anchored at the lowest edge. Starting from {anchor}, each
// frontier edge (an unused edge > anchor touching the current set) is either
// banned for the rest of the branch or added, which extends the frontier.
// Every connected edge set whose minimum edge is the anchor is reached by
// exactly one decision sequence, and every branch ends in a visit, so the work
// is proportional to the number of sets produced.
class EdgeSetGrower {
 public:
  explicit EdgeSetGrower(const Graph& g) : g_(g) {
    const auto& edges = g.edges();
    const int m = g.size();
    touching_.assign(m, 0);
    ends_.resize(m);
    for (int i = 0; i < m; ++i) {
      ends_[i] = singleton(edges[i].u) | singleton(edges[i].v);
      for (int j = 0; j < m; ++j) {
        if (i != j && (ends_[i] & (singleton(edges[j].u) | singleton(edges[j].v)))) {
          touching_[i] |= std::uint64_t{1} << j;
        }
      }
    }
  }

  template <class Visit>
  void run(Visit&& visit) {
    const int m = g_.size();
    for (int anchor = 0; anchor < m; ++anchor) {
      const std::uint64_t allowed = anchor == 63 ? 0 : ~std::uint64_t{0} << (anchor + 1);
      const std::uint64_t start = std::uint64_t{1} << anchor;
      grow(start, ends_[anchor], touching_[anchor] & allowed, ~allowed, visit);
    }
  }

 private:
  template <class Visit>
  void grow(std::uint64_t set, VertexSet verts, std::uint64_t frontier, std::uint64_t banned,
            Visit& visit) {
    while (frontier) {
      const int e = std::countr_zero(frontier);
      const std::uint64_t bit = std::uint64_t{1} << e;
      frontier &= ~bit;
      // Include e: the frontier gains the unseen edges touching it.
      const std::uint64_t seen = set | bit | banned | frontier;
      grow(set | bit, verts | ends_[e], frontier | (touching_[e] & ~seen), banned, visit);
      // Exclude e for the remainder of this loop.
      banned |= bit;
    }
    visit(verts, set);
  }

  const Graph& g_;
  std::vector<std::uint64_t> touching_;
  std::vector<VertexSet> ends_;
};

struct DisjointSets {
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<int> parent;
};

void check_required(const Graph& g, VertexSet required) {
  if (required & ~g.vertices()) {
    throw VertexOutOfRange("required vertex out of range for n=" + std::to_string(g.order()));
  }
}

}  // namespace

void enumerate_connected_subgraphs(const Graph& g, VertexSet required,
                                   const SubgraphVisitor& visit) {
  check_required(g, required);
  require_edge_capacity(g);
  if (popcount(required) <= 1) {
    for (Vertex v = 0; v < g.order(); ++v) {
      if (!required || required == singleton(v)) visit({singleton(v), 0});
    }
  }
  EdgeSetGrower grower(g);
  grower.run([&](VertexSet verts, std::uint64_t edges) {
    if ((verts & required) == required) visit({verts, edges});
  });
}

Count count_containing(const Graph& g, VertexSet required) {
  check_required(g, required);
  require_edge_capacity(g);
  std::uint64_t count = 0;
  if (popcount(required) <= 1) count += required ? 1 : g.order();
  EdgeSetGrower grower(g);
  grower.run([&](VertexSet verts, std::uint64_t) {
    if ((verts & required) == required) ++count;
  });
  return Count(count);
}

Count count_connected_subgraphs(const Graph& g) { return count_containing(g, 0); }

Count subgraph_number(const Graph& g, Vertex v) {
  g.check_vertex(v);
  return count_containing(g, singleton(v));
}

Count count_containing_naive(const Graph& g, VertexSet required) {
  check_required(g, required);
  const int m = g.size();
  if (m > 30) throw CountLimitExceeded("naive edge-subset loop supports at most 30 edges");
  const auto& edges = g.edges();
  Count total = popcount(required) <= 1 ? Count(required ? 1 : g.order()) : Count(0);
  std::uint64_t count = 0;
  for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << m); ++subset) {
    DisjointSets sets(g.order());
    VertexSet verts = 0;
    int merges = 0;
    for (int i = 0; i < m; ++i) {
      if ((subset >> i) & 1U) {
        verts |= singleton(edges[i].u) | singleton(edges[i].v);
        merges += sets.unite(edges[i].u, edges[i].v);
      }
    }
    // A forest-or-more on |V'| vertices is connected iff it merged |V'|-1 times.
    if (merges == popcount(verts) - 1 && (verts & required) == required) ++count;
  }
  return total + count;
}

SubsetCountTable::SubsetCountTable(const Graph& g, VertexSet within)
    : domain_(within & g.vertices()), globals_(members(domain_)) {
  const int k = static_cast<int>(globals_.size());
  if (k == 0) throw InvalidGraph("subset table over an empty vertex set");
  if (k > kMaxVertices) {
    throw CountLimitExceeded("subset table supports at most " + std::to_string(kMaxVertices) +
                             " vertices, got " + std::to_string(k));
  }
  const std::uint32_t full = (std::uint32_t{1} << k) - 1;
  std::vector<std::uint32_t> local_adj(k, 0);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (g.adjacent(globals_[i], globals_[j])) local_adj[i] |= std::uint32_t{1} << j;
    }
  }
  std::vector<int> inside(full + 1, 0);
  for (std::uint32_t s = 1; s <= full; ++s) {
    const int low = std::countr_zero(s);
    const std::uint32_t rest = s & (s - 1);
    inside[s] = inside[rest] + std::popcount(local_adj[low] & rest);
  }
  const int m = inside[full];

  auto build = [&]<class Int>(Tables<Int>& t) {
    t.spanning.assign(full + 1, Int(0));
    for (std::uint32_t s = 1; s <= full; ++s) {
      const std::uint32_t low_bit = s & (~s + 1);
      if (s == low_bit) {
        t.spanning[s] = 1;
        continue;
      }
      Int value = shifted_one<Int>(inside[s]);
      const std::uint32_t others = s & ~low_bit;
      // Proper subsets T of s containing the lowest vertex: T = low_bit | u, u != others.
      for (std::uint32_t u = (others - 1) & others;; u = (u - 1) & others) {
        const std::uint32_t part = low_bit | u;
        value -= t.spanning[part] * shifted_one<Int>(inside[s & ~part]);
        if (u == 0) break;
      }
      t.spanning[s] = value;
    }
    t.superset_sums = t.spanning;
    t.superset_sums[0] = 0;
    for (int bit = 0; bit < k; ++bit) {
      const std::uint32_t b = std::uint32_t{1} << bit;
      for (std::uint32_t s = 0; s <= full; ++s) {
        if (!(s & b)) t.superset_sums[s] += t.superset_sums[s | b];
      }
    }
  };

  // Every stored value is at most 2^(m + k).
  if (m + k <= 63) {
    Tables<std::uint64_t> t;
    build(t);
    tables_ = std::move(t);
  } else if (m + k <= 127) {
    Tables<unsigned __int128> t;
    build(t);
    tables_ = std::move(t);
  } else {
    Tables<Count> t;
    build(t);
    tables_ = std::move(t);
  }
}

std::uint32_t SubsetCountTable::local(VertexSet s) const {
  if (s & ~domain_) throw VertexOutOfRange("vertex outside the table's vertex set");
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < globals_.size(); ++i) {
    if (contains(s, globals_[i])) out |= std::uint32_t{1} << i;
  }
  return out;
}

Count SubsetCountTable::containing(VertexSet required) const {
  const std::uint32_t idx = local(required);
  return std::visit([&](const auto& t) { return to_count(t.superset_sums[idx]); }, tables_);
}

Count SubsetCountTable::spanning(VertexSet s) const {
  const std::uint32_t idx = local(s);
  return std::visit([&](const auto& t) { return to_count(t.spanning[idx]); }, tables_);
}

}  // namespace cutcount
