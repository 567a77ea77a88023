#include "cutcount/graph.hpp"

#include <algorithm>
#include <functional>

namespace cutcount {

std::vector<Vertex> members(VertexSet s) {
  std::vector<Vertex> out;
  out.reserve(popcount(s));
  for (; s; s &= s - 1) out.push_back(lowest(s));
  return out;
}

VertexSet make_set(std::span<const Vertex> vertices) {
  VertexSet s = 0;
  for (Vertex v : vertices) s |= singleton(v);
  return s;
}

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 1 || n > kMaxVertices) {
    throw InvalidGraph("vertex count must be in 1..64, got " + std::to_string(n));
  }
  adj_.assign(n, 0);
  edges_.reserve(edges.size());
  for (Edge e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw VertexOutOfRange("edge endpoint out of range: " + std::to_string(e.u) + " " +
                             std::to_string(e.v));
    }
    if (e.u == e.v) throw InvalidGraph("self-loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
    if (contains(adj_[e.u], e.v)) {
      throw InvalidGraph("duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v));
    }
    adj_[e.u] |= singleton(e.v);
    adj_[e.v] |= singleton(e.u);
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
}

Graph Graph::from_adjacency(std::span<const VertexSet> rows) {
  const int n = static_cast<int>(rows.size());
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    if (contains(rows[u], u)) throw InvalidGraph("self-loop at vertex " + std::to_string(u));
    if (rows[u] & ~first_n(n)) throw VertexOutOfRange("adjacency row has bits beyond n");
    for (Vertex v : members(rows[u] & ~first_n(u + 1))) {
      if (!contains(rows[v], u)) throw InvalidGraph("adjacency rows are not symmetric");
      edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

int Graph::edge_index(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
  if (it == edges_.end() || *it != Edge{u, v}) return -1;
  return static_cast<int>(it - edges_.begin());
}

int Graph::edges_within(VertexSet s) const {
  int twice = 0;
  for (VertexSet t = s; t; t &= t - 1) twice += popcount(adj_[lowest(t)] & s);
  return twice / 2;
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw VertexOutOfRange("vertex " + std::to_string(v) + " out of range for n=" +
                           std::to_string(n_));
  }
}

Graph Graph::without_edge(const Edge& e) const {
  const int idx = edge_index(e.u, e.v);
  if (idx < 0) throw InvalidGraph("edge not present");
  std::vector<Edge> rest = edges_;
  rest.erase(rest.begin() + idx);
  return Graph(n_, rest);
}

Graph Graph::with_edge(const Edge& e) const {
  std::vector<Edge> more = edges_;
  more.push_back(e);
  return Graph(n_, more);
}

Graph Graph::induced(VertexSet s) const {
  std::vector<Vertex> index(n_, -1);
  int next = 0;
  for (Vertex v : members(s & vertices())) index[v] = next++;
  if (next == 0) throw InvalidGraph("induced subgraph on empty vertex set");
  std::vector<Edge> sub;
  for (const Edge& e : edges_) {
    if (contains(s, e.u) && contains(s, e.v)) sub.push_back({index[e.u], index[e.v]});
  }
  return Graph(next, sub);
}

Graph Graph::relabeled(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw InvalidGraph("permutation size mismatch");
  std::vector<Edge> moved;
  moved.reserve(edges_.size());
  for (const Edge& e : edges_) moved.push_back({perm[e.u], perm[e.v]});
  return Graph(n_, moved);
}

int Girth::value() const {
  if (!length_) throw std::logic_error("girth is infinite");
  return *length_;
}

std::string Girth::to_string() const {
  return length_ ? std::to_string(*length_) : std::string("inf");
}

std::vector<int> BlockCutTree::pendant_blocks() const {
  std::vector<int> out;
  for (int b = 0; b < block_count(); ++b) {
    if (is_pendant(b)) out.push_back(b);
  }
  return out;
}

int BlockCutTree::find(VertexSet block) const {
  auto it = std::find(blocks.begin(), blocks.end(), block);
  return it == blocks.end() ? -1 : static_cast<int>(it - blocks.begin());
}

VertexSet component_of(const Graph& g, Vertex start, VertexSet within) {
  VertexSet seen = singleton(start);
  VertexSet frontier = seen;
  while (frontier) {
    VertexSet next = 0;
    for (VertexSet f = frontier; f; f &= f - 1) next |= g.neighbors(lowest(f));
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

std::vector<VertexSet> components(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  for (VertexSet rest = within; rest;) {
    const VertexSet c = component_of(g, lowest(rest), within);
    out.push_back(c);
    rest &= ~c;
  }
  return out;
}

bool is_connected(const Graph& g, VertexSet within) {
  if (!within) return true;
  return component_of(g, lowest(within), within) == within;
}

bool is_connected(const Graph& g) { return is_connected(g, g.vertices()); }

bool is_tree(const Graph& g) { return g.size() == g.order() - 1 && is_connected(g); }

namespace {

// Iterative Tarjan low-link traversal over G[within]. Calls on_block with the
// vertex set of every biconnected component as it is closed.
template <class OnBlock>
VertexSet lowlink_traversal(const Graph& g, VertexSet within, OnBlock&& on_block) {
  const int n = g.order();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Vertex> parent(n, -1);
  std::vector<VertexSet> pending(n, 0);
  std::vector<Edge> edge_stack;
  VertexSet cuts = 0;
  int time = 0;

  struct Frame {
    Vertex v;
    int children;
  };
  std::vector<Frame> stack;

  for (VertexSet roots = within; roots; roots &= roots - 1) {
    const Vertex root = lowest(roots);
    if (disc[root] >= 0) continue;
    disc[root] = low[root] = time++;
    pending[root] = g.neighbors(root) & within;
    stack.push_back({root, 0});
    while (!stack.empty()) {
      const Vertex v = stack.back().v;
      if (pending[v]) {
        const Vertex w = lowest(pending[v]);
        pending[v] &= pending[v] - 1;
        if (disc[w] < 0) {
          parent[w] = v;
          disc[w] = low[w] = time++;
          pending[w] = g.neighbors(w) & within;
          edge_stack.push_back({v, w});
          ++stack.back().children;
          stack.push_back({w, 0});
        } else if (w != parent[v] && disc[w] < disc[v]) {
          low[v] = std::min(low[v], disc[w]);
          edge_stack.push_back({v, w});
        }
        continue;
      }
      const int children = stack.back().children;
      stack.pop_back();
      if (stack.empty()) {
        if (children >= 2) cuts |= singleton(v);
        break;
      }
      const Vertex p = parent[v];
      low[p] = std::min(low[p], low[v]);
      if (low[v] >= disc[p]) {
        if (parent[p] >= 0) cuts |= singleton(p);
        VertexSet block = 0;
        while (true) {
          const Edge e = edge_stack.back();
          edge_stack.pop_back();
          block |= singleton(e.u) | singleton(e.v);
          if (e.u == p && e.v == v) break;
        }
        on_block(block);
      }
    }
  }
  return cuts;
}

void require_connected(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedGraph("graph is not connected");
}

}  // namespace

VertexSet articulation_points(const Graph& g, VertexSet within) {
  return lowlink_traversal(g, within, [](VertexSet) {});
}

VertexSet cut_vertices(const Graph& g) {
  require_connected(g);
  return articulation_points(g, g.vertices());
}

BlockCutTree block_cut_tree(const Graph& g) {
  require_connected(g);
  BlockCutTree tree;
  tree.cut_vertices =
      lowlink_traversal(g, g.vertices(), [&](VertexSet b) { tree.blocks.push_back(b); });
  if (g.order() == 1) tree.blocks.push_back(singleton(0));
  tree.blocks_of.assign(g.order(), {});
  for (int b = 0; b < tree.block_count(); ++b) {
    for (Vertex v : members(tree.blocks[b])) tree.blocks_of[v].push_back(b);
  }
  return tree;
}

Girth girth(const Graph& g) {
  const int n = g.order();
  int best = -1;
  std::vector<int> dist(n);
  std::vector<Vertex> parent(n), queue(n);
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = -1;
    int head = 0, tail = 0;
    queue[tail++] = root;
    while (head < tail) {
      const Vertex u = queue[head++];
      if (best >= 0 && 2 * dist[u] + 1 >= best) break;
      for (Vertex w : members(g.neighbors(u))) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue[tail++] = w;
        } else if (w != parent[u]) {
          const int len = dist[u] + dist[w] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  return best < 0 ? Girth::infinite() : Girth::finite(best);
}

int distance(const Graph& g, Vertex u, Vertex v) {
  g.check_vertex(u);
  g.check_vertex(v);
  VertexSet seen = singleton(u);
  VertexSet frontier = seen;
  for (int d = 0; frontier; ++d) {
    if (contains(frontier, v)) return d;
    VertexSet next = 0;
    for (VertexSet f = frontier; f; f &= f - 1) next |= g.neighbors(lowest(f));
    frontier = next & ~seen;
    seen |= frontier;
  }
  throw DisconnectedGraph("vertices lie in different components");
}

std::vector<VertexSet> s_pendant_blocks(const Graph& g) {
  const BlockCutTree tree = block_cut_tree(g);
  if (!tree.cut_vertices) throw NoPendantBlocks("graph has no cut vertex");
  std::vector<VertexSet> out;
  for (int b : tree.pendant_blocks()) {
    const Vertex w = lowest(tree.cut_vertices_in(b));
    int non_pendant = 0;
    for (int other : tree.blocks_of[w]) {
      if (other != b && !tree.is_pendant(other)) ++non_pendant;
    }
    if (non_pendant == 1) out.push_back(tree.blocks[b]);
  }
  return out;
}

Graph path_graph(int n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph(n, e);
}

Graph cycle_graph(int n) {
  if (n < 3) throw InvalidGraph("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Graph(n, e);
}

Graph star_graph(int n) {
  std::vector<Edge> e;
  for (Vertex i = 1; i < n; ++i) e.push_back({0, i});
  return Graph(n, e);
}

Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) e.push_back({i, j});
  return Graph(n, e);
}

}  // namespace cutcount
