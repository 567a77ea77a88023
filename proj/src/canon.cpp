#include "cutcount/canon.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "cutcount/graph_io.hpp"

namespace cutcount {

namespace {

using Partition = std::vector<VertexSet>;

// Splits every cell by the number of neighbors each vertex has in each
// splitter cell, until the partition is equitable. Pieces of a split cell
// are ordered by increasing neighbor count.
void refine(std::span<const VertexSet> adj, Partition& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size(); ++s) {
      const VertexSet splitter = cells[s];
      Partition next;
      next.reserve(cells.size() + 4);
      for (VertexSet cell : cells) {
        if (popcount(cell) == 1) {
          next.push_back(cell);
          continue;
        }
        std::array<VertexSet, kMaxVertices + 1> by_count{};
        int lo = kMaxVertices, hi = 0;
        for (VertexSet rest = cell; rest; rest &= rest - 1) {
          const Vertex v = lowest(rest);
          const int c = popcount(adj[v] & splitter);
          by_count[c] |= singleton(v);
          lo = std::min(lo, c);
          hi = std::max(hi, c);
        }
        if (lo == hi) {
          next.push_back(cell);
          continue;
        }
        changed = true;
        for (int c = lo; c <= hi; ++c) {
          if (by_count[c]) next.push_back(by_count[c]);
        }
      }
      cells.swap(next);
    }
  }
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : adj_(g.rows().begin(), g.rows().end()), n_(g.order()) {}

  CanonicalForm run(Partition cells) {
    std::vector<Vertex> fixed;
    search(std::move(cells), fixed);
    return {best_order_, best_rows_};
  }

 private:
  void search(Partition cells, std::vector<Vertex>& fixed) {
    refine(adj_, cells);
    std::size_t target = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (popcount(cells[i]) > 1) {
        target = i;
        break;
      }
    }
    if (target == cells.size()) {
      leaf(cells);
      return;
    }
    const VertexSet cell = cells[target];
    std::vector<Vertex> explored;
    for (VertexSet rest = cell; rest; rest &= rest - 1) {
      const Vertex v = lowest(rest);
      if (!explored.empty() && equivalent_to_explored(v, explored, fixed)) continue;
      Partition child;
      child.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i == target) {
          child.push_back(singleton(v));
          child.push_back(cell & ~singleton(v));
        } else {
          child.push_back(cells[i]);
        }
      }
      fixed.push_back(v);
      search(std::move(child), fixed);
      fixed.pop_back();
      explored.push_back(v);
    }
  }

  bool equivalent_to_explored(Vertex v, const std::vector<Vertex>& explored,
                              const std::vector<Vertex>& fixed) {
    UnionFind uf(n_);
    bool any = false;
    for (const auto& gamma : automorphisms_) {
      if (!std::all_of(fixed.begin(), fixed.end(), [&](Vertex x) { return gamma[x] == x; })) continue;
      any = true;
      for (Vertex x = 0; x < n_; ++x) uf.unite(x, gamma[x]);
    }
    if (!any) return false;
    const int root = uf.find(v);
    return std::any_of(explored.begin(), explored.end(), [&](Vertex u) { return uf.find(u) == root; });
  }

  void leaf(const Partition& cells) {
    std::vector<Vertex> order(n_);
    std::vector<Vertex> pos(n_);
    for (int p = 0; p < n_; ++p) {
      order[p] = lowest(cells[p]);
      pos[order[p]] = p;
    }
    std::vector<VertexSet> rows(n_, 0);
    for (int p = 0; p < n_; ++p) {
      for (VertexSet nb = adj_[order[p]]; nb; nb &= nb - 1) rows[p] |= singleton(pos[lowest(nb)]);
    }
    if (best_order_.empty() || rows > best_rows_) {
      best_order_ = std::move(order);
      best_rows_ = std::move(rows);
    } else if (rows == best_rows_) {
      std::vector<Vertex> gamma(n_);
      for (int p = 0; p < n_; ++p) gamma[best_order_[p]] = order[p];
      automorphisms_.push_back(std::move(gamma));
    }
  }

  std::vector<VertexSet> adj_;
  int n_;
  std::vector<Vertex> best_order_;
  std::vector<VertexSet> best_rows_;
  std::vector<std::vector<Vertex>> automorphisms_;
};

Partition initial_partition(const Graph& g, std::span<const int> colors) {
  if (colors.empty()) return {g.vertices()};
  if (static_cast<int>(colors.size()) != g.order()) {
    throw InvalidGraph("color list length must equal the vertex count");
  }
  std::vector<int> distinct(colors.begin(), colors.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  Partition cells(distinct.size(), 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto idx = std::lower_bound(distinct.begin(), distinct.end(), colors[v]) - distinct.begin();
    cells[idx] |= singleton(v);
  }
  return cells;
}

std::vector<VertexSet> marked_rows(const Graph& g, Vertex v) {
  std::vector<int> colors(g.order(), 1);
  colors[v] = 0;
  return canonical_form(g, colors).rows;
}

}  // namespace

std::vector<Vertex> CanonicalForm::positions() const {
  std::vector<Vertex> pos(order.size());
  for (std::size_t p = 0; p < order.size(); ++p) pos[order[p]] = static_cast<Vertex>(p);
  return pos;
}

CanonicalForm canonical_form(const Graph& g, std::span<const int> colors) {
  return Canonizer(g).run(initial_partition(g, colors));
}

std::string canonical_graph6(const Graph& g) { return serialize_graph6(canonical_form(g).graph()); }

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a).rows == canonical_form(b).rows;
}

bool same_orbit(const Graph& g, Vertex u, Vertex v) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v) return true;
  if (g.degree(u) != g.degree(v)) return false;
  return marked_rows(g, u) == marked_rows(g, v);
}

std::vector<int> vertex_orbits(const Graph& g) {
  std::vector<std::vector<VertexSet>> keys;
  keys.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) keys.push_back(marked_rows(g, v));
  std::vector<int> orbit(g.order(), -1);
  int next = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (orbit[v] >= 0) continue;
    orbit[v] = next;
    for (Vertex u = v + 1; u < g.order(); ++u) {
      if (orbit[u] < 0 && keys[u] == keys[v]) orbit[u] = next;
    }
    ++next;
  }
  return orbit;
}

}  // namespace cutcount
