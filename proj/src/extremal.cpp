#include "cutcount/extremal.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_set>

#include <json.hpp>

#include "cutcount/canon.hpp"
#include "cutcount/decompose.hpp"
#include "cutcount/graph_io.hpp"

namespace cutcount {

namespace {

constexpr int pair_bit(Vertex i, Vertex j) { return j * (j - 1) / 2 + i; }

std::uint64_t encode_rows(std::span<const VertexSet> rows) {
  std::uint64_t code = 0;
  const int n = static_cast<int>(rows.size());
  for (Vertex j = 1; j < n; ++j) {
    for (VertexSet nb = rows[j] & first_n(j); nb; nb &= nb - 1) {
      code |= std::uint64_t{1} << pair_bit(lowest(nb), j);
    }
  }
  return code;
}

void decode_rows(int n, std::uint64_t code, std::array<VertexSet, kMaxVertices>& rows) {
  for (int v = 0; v < n; ++v) rows[v] = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      if ((code >> pair_bit(i, j)) & 1U) {
        rows[i] |= singleton(j);
        rows[j] |= singleton(i);
      }
    }
  }
}

bool connected_without(const std::array<VertexSet, kMaxVertices>& rows, int n, Vertex x) {
  const VertexSet all = first_n(n) & ~singleton(x);
  if (!all) return true;
  VertexSet seen = singleton(lowest(all));
  VertexSet frontier = seen;
  while (frontier) {
    VertexSet next = 0;
    for (VertexSet f = frontier; f; f &= f - 1) next |= rows[lowest(f)];
    next &= all & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == all;
}

// Children of one parent on n-1 vertices: the new vertex n-1 joined to each
// non-empty neighbor subset. A child is kept when the new vertex lies in the
// orbit of the canonical deletion vertex, which is the non-cut vertex of
// smallest (degree, neighbor degree sum), ties broken by canonical position.
void extend_parent(int n, std::uint64_t parent, std::vector<std::uint64_t>& out) {
  const Vertex x = n - 1;
  std::array<VertexSet, kMaxVertices> base{};
  decode_rows(n - 1, parent, base);
  std::unordered_set<std::uint64_t> seen;
  std::array<VertexSet, kMaxVertices> rows{};
  for (VertexSet s = 1; s < singleton(n - 1); ++s) {
    for (int v = 0; v < n - 1; ++v) rows[v] = base[v] | (contains(s, v) ? singleton(x) : 0);
    rows[x] = s;

    std::array<int, kMaxVertices> deg{};
    for (int v = 0; v < n; ++v) deg[v] = popcount(rows[v]);
    auto key = [&](Vertex v) {
      int sum = 0;
      for (VertexSet nb = rows[v]; nb; nb &= nb - 1) sum += deg[lowest(nb)];
      return std::pair{deg[v], sum};
    };
    const auto kx = key(x);
    bool reject = false;
    VertexSet ties = singleton(x);
    for (Vertex v = 0; v < n - 1 && !reject; ++v) {
      const auto kv = key(v);
      if (kv > kx) continue;
      if (!connected_without(rows, n, v)) continue;
      if (kv < kx) reject = true;
      else ties |= singleton(v);
    }
    if (reject) continue;

    const Graph child = Graph::from_adjacency(std::span<const VertexSet>(rows.data(), n));
    const CanonicalForm cf = canonical_form(child);
    if (popcount(ties) > 1) {
      const std::vector<Vertex> pos = cf.positions();
      Vertex d = x;
      for (VertexSet t = ties; t; t &= t - 1) {
        if (pos[lowest(t)] > pos[d]) d = lowest(t);
      }
      if (d != x && !same_orbit(child, x, d)) continue;
    }
    const std::uint64_t code = encode_rows(cf.rows);
    if (seen.insert(code).second) out.push_back(code);
  }
}

template <class Fn>
void run_chunks(std::size_t count, int jobs, Fn&& fn) {
  const std::size_t workers = std::clamp<std::size_t>(jobs < 1 ? 1 : jobs, 1, std::max<std::size_t>(count, 1));
  if (workers == 1) {
    fn(0, 0, count);
    return;
  }
  std::vector<std::thread> threads;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = count * w / workers;
    const std::size_t hi = count * (w + 1) / workers;
    threads.emplace_back([&fn, w, lo, hi] { fn(w, lo, hi); });
  }
  for (auto& t : threads) t.join();
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

std::map<int, std::vector<std::uint64_t>>& level_cache() {
  static std::map<int, std::vector<std::uint64_t>> cache;
  return cache;
}

void check_order(int n) {
  if (n < 1) throw InvalidGraph("vertex count must be positive");
  if (n > kMaxSearchOrder) {
    throw SearchCapExceeded("exhaustive search is limited to n <= " + std::to_string(kMaxSearchOrder));
  }
}

}  // namespace

std::string_view to_string(TreeFilter subset) {
  switch (subset) {
    case TreeFilter::All: return "all";
    case TreeFilter::TreesOnly: return "trees";
    case TreeFilter::NonTreesOnly: return "nontrees";
  }
  return "all";
}

std::optional<TreeFilter> parse_tree_filter(std::string_view text) {
  if (text == "all") return TreeFilter::All;
  if (text == "trees") return TreeFilter::TreesOnly;
  if (text == "nontrees") return TreeFilter::NonTreesOnly;
  return std::nullopt;
}

std::string to_string(const ClassSpec& cls) {
  std::string out = "n=" + std::to_string(cls.n);
  if (cls.k) out += " k=" + std::to_string(*cls.k);
  if (cls.min_girth) out += " girth>=" + std::to_string(*cls.min_girth);
  if (cls.subset != TreeFilter::All) out += " subset=" + std::string(to_string(cls.subset));
  return out;
}

bool in_class(const Graph& g, const ClassSpec& cls) {
  if (g.order() != cls.n || !is_connected(g)) return false;
  if (cls.k && popcount(articulation_points(g, g.vertices())) != *cls.k) return false;
  const bool tree = g.size() == g.order() - 1;
  if (cls.subset == TreeFilter::TreesOnly && !tree) return false;
  if (cls.subset == TreeFilter::NonTreesOnly && tree) return false;
  if (cls.min_girth && !girth(g).at_least(*cls.min_girth)) return false;
  return true;
}

std::uint64_t encode_graph(const Graph& g) {
  if (g.order() > 11) throw InvalidGraph("packed codes hold at most 11 vertices");
  return encode_rows(g.rows());
}

Graph decode_graph(int n, std::uint64_t code) {
  std::array<VertexSet, kMaxVertices> rows{};
  decode_rows(n, code, rows);
  return Graph::from_adjacency(std::span<const VertexSet>(rows.data(), n));
}

const std::vector<std::uint64_t>& connected_graph_codes(int n, int jobs) {
  check_order(n);
  std::unique_lock lock(cache_mutex());
  auto& cache = level_cache();
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  if (n == 1) return cache.emplace(1, std::vector<std::uint64_t>{0}).first->second;
  lock.unlock();
  const std::vector<std::uint64_t>& parents = connected_graph_codes(n - 1, jobs);
  std::vector<std::vector<std::uint64_t>> pieces(std::max(jobs, 1));
  run_chunks(parents.size(), jobs, [&](std::size_t w, std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) extend_parent(n, parents[i], pieces[w]);
  });
  std::vector<std::uint64_t> level;
  for (const auto& piece : pieces) level.insert(level.end(), piece.begin(), piece.end());
  lock.lock();
  return cache.emplace(n, std::move(level)).first->second;
}

std::uint64_t generate(const ClassSpec& cls, const std::function<void(const Graph&)>& visit, int jobs) {
  check_order(cls.n);
  if (cls.k && (*cls.k < 0 || *cls.k > cls.n - 2)) return 0;
  std::uint64_t count = 0;
  for (std::uint64_t code : connected_graph_codes(cls.n, jobs)) {
    const Graph g = decode_graph(cls.n, code);
    if (!in_class(g, cls)) continue;
    ++count;
    visit(g);
  }
  return count;
}

std::vector<Graph> generate_naive(const ClassSpec& cls) {
  if (cls.n > 7) throw SearchCapExceeded("naive generation is limited to n <= 7");
  check_order(cls.n);
  const int pairs = cls.n * (cls.n - 1) / 2;
  std::set<std::vector<VertexSet>> seen;
  std::vector<Graph> out;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
    const Graph g = decode_graph(cls.n, code);
    if (!in_class(g, cls)) continue;
    CanonicalForm cf = canonical_form(g);
    if (seen.insert(cf.rows).second) out.push_back(cf.graph());
  }
  return out;
}

std::string_view to_string(Objective objective) {
  return objective == Objective::F ? "F" : "minf";
}

bool SearchReport::contains(const Graph& g) const {
  const std::string code = canonical_graph6(g);
  return std::any_of(minimizers.begin(), minimizers.end(),
                     [&](const Minimizer& m) { return m.graph6 == code; });
}

SearchReport search(const ClassSpec& cls, Objective objective, SearchOptions options) {
  const auto start = std::chrono::steady_clock::now();
  check_order(cls.n);
  std::vector<Graph> members;
  generate(cls, [&](const Graph& g) { members.push_back(g); }, options.jobs);

  struct Partial {
    std::optional<Count> best;
    std::vector<Minimizer> found;
  };
  const std::size_t workers = std::max(options.jobs, 1);
  std::vector<Partial> partials(workers);
  run_chunks(members.size(), options.jobs, [&](std::size_t w, std::size_t lo, std::size_t hi) {
    Partial& part = partials[w];
    for (std::size_t i = lo; i < hi; ++i) {
      const Graph& g = members[i];
      Decomposer dec(g);
      Count value;
      std::vector<Vertex> argmin;
      if (objective == Objective::F) {
        value = dec.total();
      } else {
        for (Vertex v = 0; v < g.order(); ++v) {
          Count f = dec.subgraph_number(v);
          if (argmin.empty() || f < value) {
            value = std::move(f);
            argmin.assign(1, v);
          } else if (f == value) {
            argmin.push_back(v);
          }
        }
      }
      if (!part.best || value < *part.best) {
        part.best = value;
        part.found.clear();
      }
      if (value == *part.best) part.found.push_back({serialize_graph6(g), std::move(argmin)});
    }
  });

  SearchReport report;
  report.cls = cls;
  report.objective = objective;
  report.class_size = members.size();
  for (Partial& part : partials) {
    if (!part.best) continue;
    if (!report.minimum || *part.best < *report.minimum) {
      report.minimum = part.best;
      report.minimizers.clear();
    }
    if (*part.best == *report.minimum) {
      for (Minimizer& m : part.found) report.minimizers.push_back(std::move(m));
    }
  }
  std::sort(report.minimizers.begin(), report.minimizers.end(),
            [](const Minimizer& a, const Minimizer& b) { return a.graph6 < b.graph6; });
  if (options.timing) {
    report.wall_time_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return report;
}

SearchReport search_min_F(const ClassSpec& cls, SearchOptions options) {
  return search(cls, Objective::F, options);
}

SearchReport search_min_vertex_subgraph_number(const ClassSpec& cls, SearchOptions options) {
  return search(cls, Objective::MinVertexSubgraphNumber, options);
}

std::string summary_line(const SearchReport& report) {
  std::string out = "min=" + (report.minimum ? to_decimal(*report.minimum) : std::string("none"));
  out += " minimizers=";
  for (std::size_t i = 0; i < report.minimizers.size(); ++i) {
    if (i) out += ',';
    out += report.minimizers[i].graph6;
  }
  out += " classes=" + std::to_string(report.class_size);
  return out;
}

std::string to_text(const SearchReport& report) {
  std::ostringstream out;
  out << "class: " << to_string(report.cls) << "\n";
  out << "objective: " << to_string(report.objective) << "\n";
  out << "class_size: " << report.class_size << "\n";
  if (!report.minimum) {
    out << "minimum: none (empty class)\n";
    return out.str();
  }
  out << "minimum: " << to_decimal(*report.minimum) << "\n";
  out << "minimizers: " << report.minimizers.size() << "\n";
  for (const Minimizer& m : report.minimizers) {
    out << "  " << m.graph6;
    if (report.objective == Objective::MinVertexSubgraphNumber) {
      out << " at";
      for (Vertex v : m.argmin) out << ' ' << v;
    }
    out << "\n";
  }
  if (report.wall_time_ms) out << "wall_time_ms: " << *report.wall_time_ms << "\n";
  return out.str();
}

std::string to_json(const SearchReport& report) {
  nlohmann::ordered_json cls;
  cls["n"] = report.cls.n;
  cls["k"] = report.cls.k ? nlohmann::ordered_json(*report.cls.k) : nlohmann::ordered_json();
  cls["min_girth"] =
      report.cls.min_girth ? nlohmann::ordered_json(*report.cls.min_girth) : nlohmann::ordered_json();
  cls["subset"] = std::string(to_string(report.cls.subset));

  nlohmann::ordered_json doc;
  doc["class"] = cls;
  doc["objective"] = std::string(to_string(report.objective));
  doc["minimum"] = report.minimum ? nlohmann::ordered_json(to_decimal(*report.minimum)) : nlohmann::ordered_json();
  auto minimizers = nlohmann::ordered_json::array();
  for (const Minimizer& m : report.minimizers) minimizers.push_back(m.graph6);
  doc["minimizers"] = minimizers;
  if (report.objective == Objective::MinVertexSubgraphNumber) {
    auto argmin = nlohmann::ordered_json::array();
    for (const Minimizer& m : report.minimizers) argmin.push_back(m.argmin);
    doc["argmin_vertices"] = argmin;
  }
  doc["class_size"] = report.class_size;
  doc["wall_time_ms"] = report.wall_time_ms ? nlohmann::ordered_json(*report.wall_time_ms) : nlohmann::ordered_json();
  return doc.dump(2) + "\n";
}

}  // namespace cutcount
