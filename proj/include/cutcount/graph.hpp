#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cutcount {

using Vertex = int;

/// Set of vertex ids as a 64-bit mask; bit i set means vertex i is a member.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr VertexSet singleton(Vertex v) { return VertexSet{1} << v; }
constexpr bool contains(VertexSet s, Vertex v) { return (s >> v) & 1U; }
constexpr int popcount(VertexSet s) { return std::popcount(s); }
constexpr Vertex lowest(VertexSet s) { return std::countr_zero(s); }
constexpr VertexSet first_n(int n) {
  return n >= 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

std::vector<Vertex> members(VertexSet s);
VertexSet make_set(std::span<const Vertex> vertices);

// Error types. Each structural failure mode has its own type so callers (and
// the CLI exit-code mapping) can tell them apart.
class InvalidGraph : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class VertexOutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class DisconnectedGraph : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotACutVertex : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NoPendantBlocks : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on vertices 0..n-1 (1 <= n <= 64).
///
/// Adjacency is stored as one neighbor bitset per vertex; the edge list is
/// kept sorted with u < v in every pair.
class Graph {
 public:
  Graph() : Graph(1, {}) {}

  /// Throws InvalidGraph on self-loops, duplicate edges or a bad order, and
  /// VertexOutOfRange on endpoints >= n.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  /// Builds a graph from neighbor bitsets; the rows must be symmetric and loop-free.
  static Graph from_adjacency(std::span<const VertexSet> rows);

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  VertexSet vertices() const { return first_n(n_); }
  VertexSet neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return popcount(adj_[v]); }
  bool adjacent(Vertex u, Vertex v) const { return contains(adj_[u], v); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const VertexSet> rows() const { return {adj_.data(), static_cast<std::size_t>(n_)}; }

  /// Index of edge {u, v} in edges(), or -1 when absent.
  int edge_index(Vertex u, Vertex v) const;

  /// Number of edges with both endpoints in `s`.
  int edges_within(VertexSet s) const;

  void check_vertex(Vertex v) const;

  Graph without_edge(const Edge& e) const;
  Graph with_edge(const Edge& e) const;

  /// Subgraph induced on `s`, relabeled so the members of `s` become 0..|s|-1
  /// in increasing order.
  Graph induced(VertexSet s) const;

  /// Same graph with vertex v renamed to perm[v].
  Graph relabeled(std::span<const Vertex> perm) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 1;
  std::vector<VertexSet> adj_;
  std::vector<Edge> edges_;
};

/// Shortest-cycle length, or Infinite for forests.
class Girth {
 public:
  static Girth infinite() { return Girth(); }
  static Girth finite(int length) { return Girth(length); }

  bool is_infinite() const { return !length_.has_value(); }
  /// Throws std::logic_error when infinite.
  int value() const;
  bool at_least(int bound) const { return is_infinite() || *length_ >= bound; }
  std::string to_string() const;

  friend bool operator==(const Girth&, const Girth&) = default;

 private:
  Girth() = default;
  explicit Girth(int length) : length_(length) {}
  std::optional<int> length_;
};

struct BlockCutTree {
  /// Vertex sets of the blocks, in discovery order. Bridges are 2-vertex blocks.
  std::vector<VertexSet> blocks;
  VertexSet cut_vertices = 0;
  /// For every vertex, the indices of the blocks containing it.
  std::vector<std::vector<int>> blocks_of;

  int block_count() const { return static_cast<int>(blocks.size()); }
  VertexSet cut_vertices_in(int block) const { return blocks[block] & cut_vertices; }
  bool is_pendant(int block) const { return popcount(cut_vertices_in(block)) == 1; }
  std::vector<int> pendant_blocks() const;
  /// Index of the block with exactly this vertex set, or -1.
  int find(VertexSet block) const;
};

/// Vertices reachable from `start` inside G[within].
VertexSet component_of(const Graph& g, Vertex start, VertexSet within);
/// Connected components of G[within], ordered by their lowest vertex.
std::vector<VertexSet> components(const Graph& g, VertexSet within);

bool is_connected(const Graph& g);
bool is_connected(const Graph& g, VertexSet within);
bool is_tree(const Graph& g);

/// Articulation vertices of the induced subgraph G[within], which must be
/// connected (not checked here).
VertexSet articulation_points(const Graph& g, VertexSet within);

/// Throws DisconnectedGraph for disconnected g.
VertexSet cut_vertices(const Graph& g);
BlockCutTree block_cut_tree(const Graph& g);
Girth girth(const Graph& g);
int distance(const Graph& g, Vertex u, Vertex v);
/// Pendant blocks whose cut vertex lies in exactly one non-pendant block.
/// Throws NoPendantBlocks when g has no cut vertex.
std::vector<VertexSet> s_pendant_blocks(const Graph& g);

// Small named graphs used throughout the library and the tests.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int n);
Graph complete_graph(int n);

}  // namespace cutcount
