#include "cutcount/decompose.hpp"

#include <bit>

namespace cutcount {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

void require_connected(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedGraph("graph is not connected");
}

}  // namespace

SplitAtCutVertex split_at(const Graph& g, Vertex w) {
  g.check_vertex(w);
  if (!contains(cut_vertices(g), w)) {
    throw NotACutVertex("vertex " + std::to_string(w) + " is not a cut vertex");
  }
  SplitAtCutVertex split;
  split.w = w;
  for (VertexSet comp : components(g, g.vertices() & ~singleton(w))) {
    SplitPart part;
    part.vertices = comp | singleton(w);
    part.graph = g.induced(part.vertices);
    part.to_parent = members(part.vertices);
    part.local_w = popcount(part.vertices & first_n(w));
    split.parts.push_back(std::move(part));
  }
  return split;
}

Count merge_count(const Count& total1, const Count& total2, const Count& at_w1,
                  const Count& at_w2) {
  return total1 + total2 - 1 + (at_w1 - 1) * (at_w2 - 1);
}

Decomposer::Decomposer(const Graph& g, DecomposeOptions options)
    : g_(g), options_(options), rng_state_(options.seed) {}

Vertex Decomposer::choose_cut_vertex(VertexSet cuts) {
  switch (options_.order) {
    case SplitOrder::Lowest:
      return lowest(cuts);
    case SplitOrder::Highest:
      return 63 - std::countl_zero(cuts);
    case SplitOrder::Shuffled: {
      const auto all = members(cuts);
      return all[splitmix64(rng_state_) % all.size()];
    }
  }
  return lowest(cuts);
}

std::vector<VertexSet> Decomposer::parts_at(VertexSet within, Vertex w) {
  std::vector<VertexSet> parts = components(g_, within & ~singleton(w));
  for (VertexSet& p : parts) p |= singleton(w);
  return parts;
}

Count Decomposer::block_containing(VertexSet block, VertexSet required) {
  if (popcount(block) <= SubsetCountTable::kMaxVertices) {
    auto& table = tables_[block];
    if (!table) table = std::make_unique<SubsetCountTable>(g_, block);
    return table->containing(required);
  }
  const std::vector<Vertex> ids = members(block);
  VertexSet local_required = 0;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (contains(required, ids[i])) local_required |= singleton(static_cast<Vertex>(i));
  }
  return count_containing(g_.induced(block), local_required);
}

Count Decomposer::total(VertexSet within) { return containing(within, 0); }

Count Decomposer::containing(VertexSet within, VertexSet required) {
  const auto key = std::make_pair(within, required);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  auto cut_it = cut_cache_.find(within);
  if (cut_it == cut_cache_.end()) {
    cut_it = cut_cache_.emplace(within, articulation_points(g_, within)).first;
  }
  const VertexSet cuts = cut_it->second;

  Count result;
  if (!cuts) {
    result = block_containing(within, required);
  } else {
    const Vertex w = choose_cut_vertex(cuts);
    const std::vector<VertexSet> parts = parts_at(within, w);
    const VertexSet wbit = singleton(w);
    if (!required) {
      // Fold the parts pairwise: the union of glued parts has f(w) equal to
      // the product of the parts' f(w).
      Count acc_total = total(parts[0]);
      Count acc_at_w = containing(parts[0], wbit);
      for (std::size_t i = 1; i < parts.size(); ++i) {
        const Count part_total = total(parts[i]);
        const Count part_at_w = containing(parts[i], wbit);
        acc_total = merge_count(acc_total, part_total, acc_at_w, part_at_w);
        acc_at_w *= part_at_w;
      }
      result = acc_total;
    } else {
      int touched = 0;
      std::size_t only = 0;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (required & parts[i] & ~wbit) {
          ++touched;
          only = i;
        }
      }
      if ((required & wbit) || touched >= 2) {
        // Every qualifying subgraph contains w and splits into one piece per part.
        result = 1;
        for (VertexSet p : parts) result *= containing(p, (required & p) | wbit);
      } else {
        // Stay inside the one touched part, or pass through w into the rest.
        Count rest_at_w = 1;
        for (std::size_t i = 0; i < parts.size(); ++i) {
          if (i != only) rest_at_w *= containing(parts[i], wbit);
        }
        const VertexSet p = parts[only];
        result = containing(p, required) + containing(p, required | wbit) * (rest_at_w - 1);
      }
    }
  }
  memo_.emplace(key, result);
  return result;
}

Count cut_vertex_subgraph_number(const Graph& g, Vertex w) {
  const SplitAtCutVertex split = split_at(g, w);
  Count product = 1;
  for (const SplitPart& part : split.parts) {
    product *= subgraph_number_via_decomposition(part.graph, part.local_w);
  }
  return product;
}

Count count_via_decomposition(const Graph& g, DecomposeOptions options) {
  require_connected(g);
  return Decomposer(g, options).total();
}

Count subgraph_number_via_decomposition(const Graph& g, Vertex v, DecomposeOptions options) {
  g.check_vertex(v);
  require_connected(g);
  return Decomposer(g, options).subgraph_number(v);
}

Count count_containing_via_decomposition(const Graph& g, VertexSet required,
                                         DecomposeOptions options) {
  if (required & ~g.vertices()) throw VertexOutOfRange("required vertex out of range");
  require_connected(g);
  return Decomposer(g, options).containing(g.vertices(), required);
}

namespace {

struct Expansion {
  std::vector<Vertex> cut_ids;      // w_1..w_s
  std::vector<Count> branch_less1;  // f_{G_i}(w_i) - 1
  Count branch_totals;              // sum_i (F(G_i) - 1)
};

Expansion expand_block(const Graph& g, VertexSet block, Decomposer& dec) {
  const BlockCutTree tree = block_cut_tree(g);
  const int b = tree.find(block);
  if (b < 0) throw InvalidGraph("vertex set is not a block of the graph");
  Expansion ex;
  ex.cut_ids = members(tree.cut_vertices_in(b));
  if (ex.cut_ids.size() > 24) {
    throw CountLimitExceeded("block expansion over more than 24 cut vertices");
  }
  const VertexSet outside = g.vertices() & ~block;
  for (Vertex w : ex.cut_ids) {
    VertexSet branch = singleton(w);
    for (VertexSet comp : components(g, outside)) {
      if (g.neighbors(w) & comp) branch |= comp;
    }
    ex.branch_totals += dec.total(branch) - 1;
    ex.branch_less1.push_back(dec.containing(branch, singleton(w)) - 1);
  }
  return ex;
}

}  // namespace

Count block_expansion_count(const Graph& g, VertexSet block) {
  Decomposer dec(g);
  const Expansion ex = expand_block(g, block, dec);
  const std::size_t s = ex.cut_ids.size();
  Count result = dec.total(block) + ex.branch_totals;
  for (std::uint32_t subset = 1; subset < (std::uint32_t{1} << s); ++subset) {
    VertexSet chosen = 0;
    Count product = 1;
    for (std::size_t i = 0; i < s; ++i) {
      if ((subset >> i) & 1U) {
        chosen |= singleton(ex.cut_ids[i]);
        product *= ex.branch_less1[i];
      }
    }
    Count inside = dec.containing(block, chosen);
    // A lone w_i is already counted inside F(G_i), so drop the trivial subgraph.
    if (std::popcount(subset) == 1) inside -= 1;
    result += inside * product;
  }
  return result;
}

Count block_expansion_subgraph_number(const Graph& g, VertexSet block, Vertex v0) {
  g.check_vertex(v0);
  if (!contains(block, v0)) throw InvalidGraph("vertex does not lie in the block");
  Decomposer dec(g);
  const Expansion ex = expand_block(g, block, dec);
  const std::size_t s = ex.cut_ids.size();
  Count result = 0;
  for (std::uint32_t subset = 0; subset < (std::uint32_t{1} << s); ++subset) {
    VertexSet chosen = singleton(v0);
    Count product = 1;
    for (std::size_t i = 0; i < s; ++i) {
      if ((subset >> i) & 1U) {
        chosen |= singleton(ex.cut_ids[i]);
        product *= ex.branch_less1[i];
      }
    }
    result += dec.containing(block, chosen) * product;
  }
  return result;
}

}  // namespace cutcount
