#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cutcount/count.hpp"
#include "cutcount/graph.hpp"

namespace cutcount {

class InvalidFamily : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Grammar names: P, C, S, L, CC, T, PS, Q.
enum class Family {
  Path,         // P:n        path on n vertices
  Cycle,        // C:n        cycle on n vertices
  Star,         // S:n        K_{1,n-1}
  Lollipop,     // L:n,g      cycle C_g with a pendant path, n vertices total
  Dumbbell,     // CC:n,m1,m2 cycles C_m1, C_m2 joined by a path (or sharing a vertex)
  PathStar,     // PS:k,m     path P_k whose end is the center of K_{1,m}
  DoubleBroom,  // T:l,m,d    path P_d with l leaves at one end and m at the other
  CycleBroom,   // Q:n,k      cycle C_{n-k-1} glued to the path end of PS(k,2)
};

/// Distinguished vertices a family instance can report.
enum class VertexTag {
  Pendant,   // path end of L, P; leaf of S
  Cut,       // the attachment vertex (cycle side) of L, CC, Q; center of S
  PathEnd,   // free path end of PS
  Cycle,     // any vertex of C
};

std::string_view family_name(Family f);
std::string_view tag_name(VertexTag t);
std::optional<VertexTag> parse_tag(std::string_view text);

struct FamilySpec {
  Family family = Family::Path;
  /// Parameters by key, as written in the grammar (n, g, m1, m2, k, l, m, d).
  std::map<std::string, int> params;

  int at(const std::string& key) const;

  static FamilySpec path(int n) { return {Family::Path, {{"n", n}}}; }
  static FamilySpec cycle(int n) { return {Family::Cycle, {{"n", n}}}; }
  static FamilySpec star(int n) { return {Family::Star, {{"n", n}}}; }
  static FamilySpec lollipop(int n, int g) { return {Family::Lollipop, {{"n", n}, {"g", g}}}; }
  static FamilySpec dumbbell(int n, int m1, int m2) {
    return {Family::Dumbbell, {{"n", n}, {"m1", m1}, {"m2", m2}}};
  }
  static FamilySpec path_star(int k, int m) { return {Family::PathStar, {{"k", k}, {"m", m}}}; }
  static FamilySpec double_broom(int l, int m, int d) {
    return {Family::DoubleBroom, {{"l", l}, {"m", m}, {"d", d}}};
  }
  static FamilySpec cycle_broom(int n, int k) { return {Family::CycleBroom, {{"n", n}, {"k", k}}}; }

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Parses `NAME:key=int[,key=int...]`, e.g. "L:n=12,g=11". Keys must be exactly
/// those of the family. Throws InvalidFamily.
FamilySpec parse_family(std::string_view text);
std::string to_string(const FamilySpec& spec);

/// Throws InvalidFamily when the parameters violate the family's constraints.
void validate(const FamilySpec& spec);

/// Vertex count of the instance.
int family_order(const FamilySpec& spec);

struct FamilyGraph {
  Graph graph;
  std::map<VertexTag, Vertex> special;
};

/// Deterministic labeling: cycle vertices first (the attachment vertex is 0),
/// then path vertices walking away from it, then leaves. For PS: path vertices
/// 0..k-1 with 0 the free end and k-1 the star center, then the leaves. For T:
/// path 0..d-1, then the l leaves of vertex 0, then the m leaves of vertex d-1.
FamilyGraph build(const FamilySpec& spec);

/// Closed-form F of the instance.
Count closed_form_F(const FamilySpec& spec);

/// Closed-form subgraph number of a tagged vertex. Throws InvalidFamily when
/// the tag is not defined for the family.
Count closed_form_f(const FamilySpec& spec, VertexTag tag);

/// Tags defined for the family, in enum order.
std::vector<VertexTag> tags_for(Family f);

/// Balanced double broom T(floor((n-k)/2), ceil((n-k)/2), k) value from the
/// parity-split formula; requires 2 <= k and n - k >= 2.
Count balanced_double_broom_F(int n, int k);

}  // namespace cutcount
