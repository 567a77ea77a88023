#pragma once

#include <span>
#include <string>
#include <vector>

#include "cutcount/graph.hpp"

namespace cutcount {

struct CanonicalForm {
  /// order[p] is the original vertex placed at canonical position p.
  std::vector<Vertex> order;
  /// Adjacency rows of the relabeled graph.
  std::vector<VertexSet> rows;

  Graph graph() const { return Graph::from_adjacency(rows); }
  /// Canonical position of each original vertex.
  std::vector<Vertex> positions() const;
};

/// Canonical labeling by partition refinement with individualization.
/// `colors`, when given, has one entry per vertex; vertices are only ever
/// mapped to vertices of the same color, and smaller colors come first.
CanonicalForm canonical_form(const Graph& g, std::span<const int> colors = {});

/// graph6 of the canonically relabeled graph.
std::string canonical_graph6(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

/// True when some automorphism of g maps u to v.
bool same_orbit(const Graph& g, Vertex u, Vertex v);

/// Orbit index of each vertex under Aut(g); orbits are numbered by their
/// smallest member, in increasing order.
std::vector<int> vertex_orbits(const Graph& g);

}  // namespace cutcount
