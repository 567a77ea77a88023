#include <doctest.h>

#include <random>

#include "cutcount/extremal.hpp"
#include "cutcount/families.hpp"
#include "cutcount/graph_io.hpp"
#include "oracles.hpp"

using namespace cutcount;

namespace {

int count_of(const std::string& text, const std::string& needle) {
  int n = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("graph6 parse") {
  CHECK(parse_graph6("@") == Graph(1, {}));
  CHECK(parse_graph6("A_") == complete_graph(2));
  CHECK(parse_graph6("Bw") == cycle_graph(3));
  CHECK(parse_graph6("Bw\n") == cycle_graph(3));
  CHECK(parse_graph6("Cl") == cycle_graph(4));
}

TEST_CASE("graph6 serialize") {
  CHECK(serialize_graph6(Graph(1, {})) == "@");
  CHECK(serialize_graph6(complete_graph(2)) == "A_");
  CHECK(serialize_graph6(cycle_graph(3)) == "Bw");
}

TEST_CASE("graph6 errors") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("?"), ParseError);
  CHECK_THROWS_AS(parse_graph6("B"), ParseError);
  CHECK_THROWS_AS(parse_graph6("Bww"), ParseError);
  CHECK_THROWS_AS(parse_graph6("B "), ParseError);
  CHECK_THROWS_AS(parse_graph6("A`"), ParseError);  // padding bit set
  CHECK_THROWS_AS(serialize_graph6(path_graph(63)), InvalidGraph);
}

TEST_CASE("graph6 long form parses") {
  const Graph p = path_graph(63);
  std::string text = "~";
  for (int shift : {12, 6, 0}) text += static_cast<char>(63 + ((63 >> shift) & 63));
  std::vector<int> bits;
  for (int j = 1; j < 63; ++j) {
    for (int i = 0; i < j; ++i) bits.push_back(p.adjacent(i, j) ? 1 : 0);
  }
  while (bits.size() % 6) bits.push_back(0);
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int value = 0;
    for (int b = 0; b < 6; ++b) value = value * 2 + bits[i + b];
    text += static_cast<char>(63 + value);
  }
  CHECK(parse_graph6(text) == p);
}

TEST_CASE("graph6 round trip over all connected graphs, n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    generate({.n = n}, [&](const Graph& g) { CHECK(parse_graph6(serialize_graph6(g)) == g); });
  }
}

TEST_CASE("graph6 round trip over all labeled graphs, n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * (n - 1) / 2)); ++mask) {
      const Graph g = oracle::from_mask(n, mask);
      CHECK(parse_graph6(serialize_graph6(g)) == g);
    }
  }
}

TEST_CASE("graph6 round trip on random graphs, n <= 20") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 20)(rng);
    std::vector<Edge> edges;
    std::bernoulli_distribution coin(std::uniform_real_distribution<double>(0, 1)(rng));
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i) {
        if (coin(rng)) edges.push_back({i, j});
      }
    }
    const Graph g(n, edges);
    CHECK(parse_graph6(serialize_graph6(g)) == g);
  }
}

TEST_CASE("edge list") {
  CHECK(parse_edge_list("n=2\n0 1\n") == complete_graph(2));
  CHECK(parse_edge_list("n=3\n0 1\n1 2\n") == path_graph(3));
  CHECK(parse_edge_list("n=1\n") == Graph(1, {}));
  CHECK(parse_edge_list("n=3\n2 1\n1 0") == path_graph(3));
  CHECK(serialize_edge_list(path_graph(3)) == "n=3\n0 1\n1 2\n");

  CHECK_THROWS_AS(parse_edge_list(""), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("n=3\n0 1\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("n=3\n1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("n=3\n0 3\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("n=3\n0 x\n"), ParseError);
}

TEST_CASE("edge list text is stable") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 12)(rng);
    const Graph g = oracle::random_connected(rng, n, n);
    const std::string text = serialize_edge_list(g);
    CHECK(parse_edge_list(text) == g);
    CHECK(serialize_edge_list(parse_edge_list(text)) == text);
  }
}

TEST_CASE("dot export") {
  const std::string k2 = export_dot(complete_graph(2));
  CHECK(k2.rfind("graph", 0) == 0);
  CHECK(count_of(k2, "--") == 1);
  CHECK(count_of(k2, "filled") == 0);

  const FamilyGraph l = build(FamilySpec::lollipop(6, 5));
  const std::string lol = export_dot(l.graph, singleton(l.special.at(VertexTag::Cut)));
  CHECK(count_of(lol, "filled") == 1);
  CHECK(count_of(lol, "--") == 6);

  CHECK(count_of(export_dot(cycle_graph(3), first_n(3)), "filled") == 3);
}
