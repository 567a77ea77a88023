#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "cutcount/census.hpp"
#include "cutcount/count.hpp"
#include "cutcount/graph.hpp"

namespace cutcount {

/// One side of a split at a cut vertex: a connected component of G - w with w
/// re-attached. `graph` is relabeled; `to_parent[i]` is the original id of
/// local vertex i.
struct SplitPart {
  VertexSet vertices = 0;
  Graph graph;
  std::vector<Vertex> to_parent;
  Vertex local_w = 0;
};

struct SplitAtCutVertex {
  Vertex w = 0;
  std::vector<SplitPart> parts;
};

/// Splits g at its cut vertex w into one part per component of g - w.
/// Throws NotACutVertex otherwise.
SplitAtCutVertex split_at(const Graph& g, Vertex w);

/// Merge of two graphs glued at a single vertex w:
///   F(G) = F1 + F2 - 1 + (f1(w) - 1)(f2(w) - 1).
Count merge_count(const Count& total1, const Count& total2, const Count& at_w1,
                  const Count& at_w2);

/// How the recursion picks among several cut vertices.
enum class SplitOrder { Lowest, Highest, Shuffled };

struct DecomposeOptions {
  SplitOrder order = SplitOrder::Lowest;
  std::uint64_t seed = 0;  // used by Shuffled
};

/// Recursive cut-vertex decomposition over induced subgraphs of one graph.
/// 2-connected pieces are counted with a SubsetCountTable (or, for blocks over
/// its vertex limit, the edge-set enumerator); everything else is assembled
/// with the gluing identities. Block tables and intermediate results are
/// memoized per instance, so reuse one Decomposer for many queries on the
/// same graph. Not thread-safe; make one per thread.
class Decomposer {
 public:
  explicit Decomposer(const Graph& g, DecomposeOptions options = {});

  const Graph& graph() const { return g_; }

  /// F(G[within]); within must induce a connected subgraph.
  Count total(VertexSet within);
  /// F_{G[within]}(required); required must lie inside within.
  Count containing(VertexSet within, VertexSet required);

  Count total() { return total(g_.vertices()); }
  Count subgraph_number(Vertex v) { return containing(g_.vertices(), singleton(v)); }

 private:
  Vertex choose_cut_vertex(VertexSet cuts);
  Count block_containing(VertexSet block, VertexSet required);
  std::vector<VertexSet> parts_at(VertexSet within, Vertex w);

  const Graph& g_;
  DecomposeOptions options_;
  std::uint64_t rng_state_;
  std::map<VertexSet, VertexSet> cut_cache_;
  std::map<VertexSet, std::unique_ptr<SubsetCountTable>> tables_;
  std::map<std::pair<VertexSet, VertexSet>, Count> memo_;
};

/// f_G(w) for a cut vertex w as the product of f_part(w) over split_at(g, w).
Count cut_vertex_subgraph_number(const Graph& g, Vertex w);

/// F(G) for connected g; throws DisconnectedGraph otherwise.
Count count_via_decomposition(const Graph& g, DecomposeOptions options = {});
Count subgraph_number_via_decomposition(const Graph& g, Vertex v,
                                        DecomposeOptions options = {});
Count count_containing_via_decomposition(const Graph& g, VertexSet required,
                                         DecomposeOptions options = {});

/// F(G) expanded over the cut vertices w_1..w_s of the block B:
///
///   F(B) + sum_i (F(G_i) - 1) + sum_i (f_B(w_i) - 1)(f_{G_i}(w_i) - 1)
///        + sum_{|S| >= 2} f_B(w_S) prod_{i in S} (f_{G_i}(w_i) - 1)
///
/// with G_i the branch hanging off w_i. Throws InvalidGraph if `block` is not a
/// block of g.
Count block_expansion_count(const Graph& g, VertexSet block);

/// f_G(v0) for v0 in block B by the analogous expansion
///   sum_{S} f_B(v0, w_S) prod_{i in S} (f_{G_i}(w_i) - 1).
Count block_expansion_subgraph_number(const Graph& g, VertexSet block, Vertex v0);

}  // namespace cutcount
