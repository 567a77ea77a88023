#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cutcount/count.hpp"
#include "cutcount/graph.hpp"

namespace cutcount {

/// Exhaustive generation is limited to this many vertices.
inline constexpr int kMaxSearchOrder = 10;

class SearchCapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

enum class TreeFilter { All, TreesOnly, NonTreesOnly };

std::string_view to_string(TreeFilter subset);
std::optional<TreeFilter> parse_tree_filter(std::string_view text);

/// Connected graphs on n vertices, optionally with exactly k cut vertices,
/// girth at least min_girth, and restricted to trees or non-trees.
struct ClassSpec {
  int n = 1;
  std::optional<int> k;
  std::optional<int> min_girth;
  TreeFilter subset = TreeFilter::All;

  friend bool operator==(const ClassSpec&, const ClassSpec&) = default;
};

std::string to_string(const ClassSpec& cls);
bool in_class(const Graph& g, const ClassSpec& cls);

/// Connected graphs on n vertices, one per isomorphism class, canonically
/// labeled and packed as upper-triangle bit codes (bit j(j-1)/2 + i for the
/// pair i < j). Built by canonical augmentation and cached per process; the
/// order is fixed and independent of `jobs`.
const std::vector<std::uint64_t>& connected_graph_codes(int n, int jobs = 1);

Graph decode_graph(int n, std::uint64_t code);
std::uint64_t encode_graph(const Graph& g);

/// Visits one canonically labeled representative of each isomorphism class in
/// the class, in a fixed order, and returns how many were visited. Throws
/// SearchCapExceeded for n > kMaxSearchOrder.
std::uint64_t generate(const ClassSpec& cls, const std::function<void(const Graph&)>& visit,
                       int jobs = 1);

/// Reference generator: every labeled graph on n vertices, deduplicated by
/// canonical form. Exponential in n(n-1)/2; limited to n <= 7.
std::vector<Graph> generate_naive(const ClassSpec& cls);

enum class Objective { F, MinVertexSubgraphNumber };

std::string_view to_string(Objective objective);

struct Minimizer {
  /// graph6 of the canonically labeled graph.
  std::string graph6;
  /// Vertices attaining the minimum (vertex objective only), in that labeling.
  std::vector<Vertex> argmin;
};

struct SearchReport {
  ClassSpec cls;
  Objective objective = Objective::F;
  /// Empty when the class is empty.
  std::optional<Count> minimum;
  /// Sorted by graph6; pairwise non-isomorphic.
  std::vector<Minimizer> minimizers;
  std::uint64_t class_size = 0;
  std::optional<double> wall_time_ms;

  bool contains(const Graph& g) const;
};

struct SearchOptions {
  int jobs = 1;
  /// Record wall time; off by default so reports are reproducible byte for byte.
  bool timing = false;
};

SearchReport search_min_F(const ClassSpec& cls, SearchOptions options = {});
SearchReport search_min_vertex_subgraph_number(const ClassSpec& cls, SearchOptions options = {});
SearchReport search(const ClassSpec& cls, Objective objective, SearchOptions options = {});

/// One line: "min=<val> minimizers=<g6,...> classes=<count>".
std::string summary_line(const SearchReport& report);
/// Multi-line text report.
std::string to_text(const SearchReport& report);
/// JSON document with class, objective, minimum (decimal string or null),
/// minimizers (graph6), argmin_vertices (vertex objective), class_size and
/// wall_time_ms (null unless timing was requested).
std::string to_json(const SearchReport& report);

}  // namespace cutcount
