#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "cutcount/count.hpp"
#include "cutcount/graph.hpp"

namespace cutcount {

/// Raised when a brute-force routine is asked to handle more than it can.
class CountLimitExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A connected subgraph (V', E'). Bit i of `edges` refers to g.edges()[i].
/// Single-vertex subgraphs have an empty edge mask.
struct ConnectedSubgraph {
  VertexSet vertices = 0;
  std::uint64_t edges = 0;
};

using SubgraphVisitor = std::function<void(const ConnectedSubgraph&)>;

// Brute-force counting. A connected subgraph is a pair (V', E') with E' inside
// G[V'] forming a connected graph; single vertices count and the empty graph
// does not. Every subgraph with two or more vertices is determined by its edge
// set, so the counts are n plus the number of connected non-empty edge sets.
//
// All of these enumerate output-sensitively and need m <= 64.

/// F(G).
Count count_connected_subgraphs(const Graph& g);
/// f_G(v).
Count subgraph_number(const Graph& g, Vertex v);
/// F_G(required); the empty set counts everything, and a set spread over
/// several components counts zero.
Count count_containing(const Graph& g, VertexSet required);

/// Visits every connected subgraph whose vertex set contains `required`, once
/// each: first the single vertices in increasing order, then edge sets grouped
/// by their lowest edge index.
void enumerate_connected_subgraphs(const Graph& g, VertexSet required,
                                   const SubgraphVisitor& visit);

/// Independent oracle: loops over all 2^m edge subsets and checks each with a
/// union-find. Limited to m <= 30.
Count count_containing_naive(const Graph& g, VertexSet required);

/// Connected-subgraph counts for every vertex subset of G[within], computed by
/// inclusion-exclusion over vertex subsets:
///
///   c(S) = 2^e(S) - sum_{T subset S, min(S) in T, T != S} c(T) * 2^e(S \ T)
///
/// where c(S) is the number of connected spanning edge sets of G[S]. Cost is
/// O(3^k) for k = |within|, independent of the edge count, so dense blocks are
/// cheap. Limited to k <= kMaxVertices.
class SubsetCountTable {
 public:
  static constexpr int kMaxVertices = 18;

  SubsetCountTable(const Graph& g, VertexSet within);

  VertexSet domain() const { return domain_; }
  /// Number of connected subgraphs of G[within].
  Count total() const { return containing(0); }
  /// Number of connected subgraphs of G[within] whose vertex set contains `required`.
  Count containing(VertexSet required) const;
  /// Number of connected spanning subgraphs of G[s], for s inside the domain.
  Count spanning(VertexSet s) const;

 private:
  template <class Int>
  struct Tables {
    std::vector<Int> spanning;
    std::vector<Int> superset_sums;
  };

  std::uint32_t local(VertexSet s) const;

  VertexSet domain_;
  std::vector<Vertex> globals_;
  std::variant<Tables<std::uint64_t>, Tables<unsigned __int128>, Tables<Count>> tables_;
};

}  // namespace cutcount
