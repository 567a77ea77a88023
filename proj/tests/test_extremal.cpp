#include <doctest.h>

#include <json.hpp>
#include <map>
#include <set>

#include "cutcount/canon.hpp"
#include "cutcount/census.hpp"
#include "cutcount/extremal.hpp"
#include "cutcount/families.hpp"
#include "cutcount/graph_io.hpp"
#include "oracles.hpp"

using namespace cutcount;

namespace {

std::string g6(const FamilySpec& spec) { return canonical_graph6(build(spec).graph); }

std::vector<std::string> minimizer_codes(const SearchReport& r) {
  std::vector<std::string> out;
  for (const Minimizer& m : r.minimizers) out.push_back(m.graph6);
  return out;
}

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

const std::vector<Graph>& naive_connected(int n) {
  static std::map<int, std::vector<Graph>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, generate_naive({.n = n})).first;
  return it->second;
}

}  // namespace

TEST_CASE("connected graph counts") {
  const std::vector<std::size_t> known{1, 1, 2, 6, 21, 112, 853, 11117, 261080};
  for (int n = 1; n <= 9; ++n) CHECK(connected_graph_codes(n).size() == known[n - 1]);
  CHECK(generate({.n = 4}, [](const Graph&) {}) == 6);
}

TEST_CASE("generation matches brute force, n <= 6") {
  for (int n = 1; n <= 6; ++n) {
    std::set<std::vector<bool>> expected;
    for (const Graph& g : oracle::connected_graphs(n)) expected.insert(oracle::canonical_bits(g));
    std::set<std::vector<bool>> got;
    generate({.n = n}, [&](const Graph& g) { got.insert(oracle::canonical_bits(g)); });
    CHECK(got == expected);
    CHECK(generate_naive({.n = n}).size() == expected.size());
  }
}

TEST_CASE("filtered class sizes match the naive generator, n <= 7") {
  for (int n = 2; n <= 7; ++n) {
    const std::vector<Graph>& everything = naive_connected(n);
    for (int k = 0; k <= n - 2; ++k) {
      for (int girth_bound : {0, 3, 4, 5}) {
        for (TreeFilter subset : {TreeFilter::All, TreeFilter::TreesOnly, TreeFilter::NonTreesOnly}) {
          ClassSpec cls{n, k, girth_bound ? std::optional<int>(girth_bound) : std::nullopt, subset};
          CAPTURE(to_string(cls));
          std::uint64_t expected = 0;
          for (const Graph& g : everything) {
            const bool tree = g.size() == n - 1;
            const int gi = oracle::girth(g);
            if (std::popcount(oracle::cut_vertices(g)) != k) continue;
            if (girth_bound && gi != 0 && gi < girth_bound) continue;
            if ((subset == TreeFilter::TreesOnly && !tree) || (subset == TreeFilter::NonTreesOnly && tree)) continue;
            ++expected;
          }
          CHECK(generate(cls, [](const Graph&) {}) == expected);
        }
      }
    }
  }
  CHECK(generate_naive({.n = 5, .k = 1}).size() == generate({.n = 5, .k = 1}, [](const Graph&) {}));
}

TEST_CASE("generated graphs satisfy the filters and are pairwise distinct") {
  for (int n = 3; n <= 7; ++n) {
    for (int k = 0; k <= n - 2; ++k) {
      const ClassSpec cls{n, k, 4, TreeFilter::All};
      std::set<std::vector<bool>> seen;
      generate(cls, [&](const Graph& g) {
        CHECK(oracle::connected(g));
        CHECK(std::popcount(oracle::cut_vertices(g)) == k);
        const int gi = oracle::girth(g);
        CHECK((gi == 0 || gi >= 4));
        CHECK(in_class(g, cls));
        CHECK(seen.insert(oracle::canonical_bits(g)).second);
      });
    }
  }
}

TEST_CASE("class examples") {
  CHECK(generate({.n = 5, .k = 5}, [](const Graph&) {}) == 0);
  CHECK(generate({.n = 5, .k = 4}, [](const Graph&) {}) == 0);
  bool star = false;
  bool lollipop = false;
  const std::string star6 = g6(FamilySpec::star(6));
  const std::string l65 = g6(FamilySpec::lollipop(6, 5));
  generate({.n = 6, .k = 1}, [&](const Graph& g) {
    const std::string code = serialize_graph6(g);
    star = star || code == star6;
    lollipop = lollipop || code == l65;
  });
  CHECK(star);
  CHECK(lollipop);
  CHECK_THROWS_AS(generate({.n = 11}, [](const Graph&) {}), SearchCapExceeded);
}

TEST_CASE("code packing") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 10)(rng);
    const Graph g = oracle::random_connected(rng, n, n);
    CHECK(decode_graph(n, encode_graph(g)) == g);
  }
  CHECK(encode_graph(path_graph(3)) == 0b101);
}

TEST_CASE("minimum F searches") {
  const SearchReport s61 = search_min_F({.n = 6, .k = 1});
  REQUIRE(s61.minimum);
  CHECK(*s61.minimum == 37);
  CHECK(minimizer_codes(s61) == std::vector<std::string>{g6(FamilySpec::star(6))});

  const SearchReport s83 = search_min_F({.n = 8, .k = 3, .min_girth = 3});
  REQUIRE(s83.minimum);
  CHECK(*s83.minimum == 62);
  CHECK(s83.contains(build(FamilySpec::double_broom(2, 3, 3)).graph));

  const SearchReport s94 = search_min_F({.n = 9, .k = 4, .min_girth = 4});
  REQUIRE(s94.minimum);
  CHECK(*s94.minimum == 76);
  CHECK(s94.contains(build(FamilySpec::double_broom(2, 3, 4)).graph));

  const SearchReport empty = search_min_F({.n = 7, .k = 6, .min_girth = 6});
  CHECK_FALSE(empty.minimum);
  CHECK(empty.minimizers.empty());
  CHECK(empty.class_size == 0);
}

TEST_CASE("minimum F equals a brute-force scan") {
  for (int n = 3; n <= 7; ++n) {
    const std::vector<Graph>& everything = naive_connected(n);
    for (int k = 0; k <= n - 2; ++k) {
      const ClassSpec cls{.n = n, .k = k};
      std::optional<Count> best;
      std::vector<std::string> arg;
      for (const Graph& g : everything) {
        if (std::popcount(oracle::cut_vertices(g)) != k) continue;
        const Count f = oracle::count(g);
        if (!best || f < *best) {
          best = f;
          arg.clear();
        }
        if (f == *best) arg.push_back(canonical_graph6(g));
      }
      const SearchReport r = search_min_F(cls);
      CHECK(r.minimum == best);
      CHECK(minimizer_codes(r) == sorted(arg));
    }
  }
}

TEST_CASE("minimum vertex subgraph number searches") {
  const SearchReport a = search_min_vertex_subgraph_number({.n = 8, .k = 2, .subset = TreeFilter::NonTreesOnly});
  REQUIRE(a.minimum);
  CHECK(*a.minimum == 24);
  const FamilyGraph l86 = build(FamilySpec::lollipop(8, 6));
  REQUIRE(a.minimizers.size() == 1);
  CHECK(a.minimizers[0].graph6 == canonical_graph6(l86.graph));
  const std::vector<Vertex> pos = canonical_form(l86.graph).positions();
  CHECK(a.minimizers[0].argmin == std::vector<Vertex>{pos[l86.special.at(VertexTag::Pendant)]});

  const SearchReport b = search_min_vertex_subgraph_number({.n = 8, .k = 3});
  REQUIRE(b.minimum);
  CHECK(*b.minimum == 19);
  CHECK(minimizer_codes(b) == sorted({g6(FamilySpec::path_star(4, 4)), g6(FamilySpec::lollipop(8, 5))}));

  const SearchReport c = search_min_vertex_subgraph_number({.n = 7, .k = 4});
  REQUIRE(c.minimum);
  CHECK(*c.minimum == 8);
  CHECK(minimizer_codes(c) == std::vector<std::string>{g6(FamilySpec::path_star(5, 2))});
}

TEST_CASE("trees and non-trees combine to the whole class") {
  for (int n = 4; n <= 8; ++n) {
    for (int k = 1; k <= n - 2; ++k) {
      for (Objective obj : {Objective::F, Objective::MinVertexSubgraphNumber}) {
        const SearchReport all = search({.n = n, .k = k}, obj);
        const SearchReport trees = search({.n = n, .k = k, .subset = TreeFilter::TreesOnly}, obj);
        const SearchReport rest = search({.n = n, .k = k, .subset = TreeFilter::NonTreesOnly}, obj);
        CHECK(all.class_size == trees.class_size + rest.class_size);
        std::optional<Count> combined = trees.minimum;
        if (rest.minimum && (!combined || *rest.minimum < *combined)) combined = rest.minimum;
        CHECK(all.minimum == combined);
      }
    }
  }
}

TEST_CASE("minimum over non-trees with girth at least k is the lollipop") {
  for (int n = 4; n <= 9; ++n) {
    for (int k = 1; k <= n - 3; ++k) {
      const SearchReport r = search_min_F({n, k, k, TreeFilter::NonTreesOnly});
      if (n < 2 * k) {
        CHECK(r.class_size == 0);
        continue;
      }
      REQUIRE(r.minimum);
      CHECK(*r.minimum == closed_form_F(FamilySpec::lollipop(n, n - k)));
      std::vector<std::string> expected{g6(FamilySpec::lollipop(n, n - k))};
      if (n == 2 * k + 1 && k >= 3) expected.push_back(g6(FamilySpec::cycle_broom(n, k)));
      CHECK(minimizer_codes(r) == sorted(expected));
    }
  }
}

TEST_CASE("report formats") {
  const SearchReport r = search_min_F({.n = 6, .k = 1});
  CHECK(summary_line(r) == "min=37 minimizers=E?Bw classes=33");
  const auto doc = nlohmann::json::parse(to_json(r));
  CHECK(doc["class"]["n"] == 6);
  CHECK(doc["class"]["k"] == 1);
  CHECK(doc["class"]["min_girth"].is_null());
  CHECK(doc["class"]["subset"] == "all");
  CHECK(doc["objective"] == "F");
  CHECK(doc["minimum"] == "37");
  CHECK(doc["minimizers"] == nlohmann::json::array({"E?Bw"}));
  CHECK(doc["class_size"] == 33);
  CHECK(doc["wall_time_ms"].is_null());
  CHECK_FALSE(doc.contains("argmin_vertices"));

  const auto minf = nlohmann::json::parse(to_json(search_min_vertex_subgraph_number({.n = 5, .k = 1})));
  CHECK(minf["objective"] == "minf");
  CHECK(minf["argmin_vertices"].is_array());
  CHECK(minf["argmin_vertices"].size() == minf["minimizers"].size());

  const auto empty = nlohmann::json::parse(to_json(search_min_F({.n = 5, .k = 4})));
  CHECK(empty["minimum"].is_null());
  CHECK(empty["minimizers"].empty());
  CHECK(summary_line(search_min_F({.n = 5, .k = 4})) == "min=none minimizers= classes=0");

  const SearchReport timed = search_min_F({.n = 5}, {.jobs = 1, .timing = true});
  CHECK(timed.wall_time_ms.has_value());
  CHECK(nlohmann::json::parse(to_json(timed))["wall_time_ms"].is_number());
}

TEST_CASE("reports do not depend on the worker count") {
  for (Objective obj : {Objective::F, Objective::MinVertexSubgraphNumber}) {
    const ClassSpec cls{.n = 8, .k = 2};
    const std::string one = to_json(search(cls, obj, {.jobs = 1}));
    CHECK(to_json(search(cls, obj, {.jobs = 4})) == one);
    CHECK(to_json(search(cls, obj, {.jobs = 13})) == one);
  }
}
