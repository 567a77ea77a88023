// cutcount: connected-subgraph counts, family closed forms, extremal search
// and verification suites from the command line.
//
// Exit codes: 0 success or PASS, 1 FAIL or mismatch, 2 usage or input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "cutcount/census.hpp"
#include "cutcount/decompose.hpp"
#include "cutcount/extremal.hpp"
#include "cutcount/families.hpp"
#include "cutcount/graph_io.hpp"
#include "cutcount/verify.hpp"

namespace {

using namespace cutcount;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// graph6 input holds one graph per non-empty line; an edge list is one graph.
std::vector<Graph> read_graphs(const std::string& path, const std::string& format) {
  const std::string text = read_input(path);
  if (format == "edgelist") return {parse_edge_list(text)};
  std::vector<Graph> graphs;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    graphs.push_back(parse_graph6(line));
  }
  if (graphs.empty()) throw ParseError("no graph in input");
  return graphs;
}

VertexSet parse_vertex_list(const std::string& text, const Graph& g) {
  VertexSet set = 0;
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || token.empty()) throw UsageError("bad vertex '" + token + "'");
    g.check_vertex(v);
    set |= singleton(v);
  }
  if (!set) throw UsageError("empty vertex list");
  return set;
}

struct CountArgs {
  std::string in = "-";
  std::string format = "graph6";
  std::optional<int> vertex;
  std::string containing;
  std::string method = "decompose";
};

int run_count(const CountArgs& args) {
  int status = 0;
  for (const Graph& g : read_graphs(args.in, args.format)) {
    VertexSet required = 0;
    if (args.vertex) {
      g.check_vertex(*args.vertex);
      required = singleton(*args.vertex);
    } else if (!args.containing.empty()) {
      required = parse_vertex_list(args.containing, g);
    }
    auto brute = [&] { return count_containing(g, required); };
    auto decompose = [&] {
      if (!is_connected(g)) throw UsageError("decomposition needs a connected graph; use --method brute");
      return count_containing_via_decomposition(g, required);
    };
    if (args.method == "brute") {
      std::cout << to_decimal(brute()) << "\n";
    } else if (args.method == "decompose") {
      std::cout << to_decimal(decompose()) << "\n";
    } else {
      const Count a = brute(), b = decompose();
      std::cout << "brute=" << to_decimal(a) << " decompose=" << to_decimal(b);
      if (a != b) {
        std::cout << " MISMATCH";
        status = kExitFail;
      }
      std::cout << "\n";
    }
  }
  return status;
}

struct FamilyArgs {
  std::string spec;
  std::string emit;
  bool check = false;
};

int run_family(const FamilyArgs& args) {
  const FamilySpec spec = parse_family(args.spec);
  const FamilyGraph fg = build(spec);
  bool ok = true;
  std::cout << "family " << to_string(spec) << " n=" << fg.graph.order() << " m=" << fg.graph.size() << "\n";

  const Count predicted = closed_form_F(spec);
  std::cout << "F predicted=" << to_decimal(predicted);
  if (args.check) {
    const Count computed = count_via_decomposition(fg.graph);
    const bool match = computed == predicted;
    ok = ok && match;
    std::cout << " computed=" << to_decimal(computed) << (match ? " PASS" : " FAIL");
  }
  std::cout << "\n";

  for (VertexTag tag : tags_for(spec.family)) {
    const Vertex v = fg.special.at(tag);
    const Count f = closed_form_f(spec, tag);
    std::cout << "f(" << tag_name(tag) << "=" << v << ") predicted=" << to_decimal(f);
    if (args.check) {
      const Count computed = subgraph_number_via_decomposition(fg.graph, v);
      const bool match = computed == f;
      ok = ok && match;
      std::cout << " computed=" << to_decimal(computed) << (match ? " PASS" : " FAIL");
    }
    std::cout << "\n";
  }

  if (args.emit == "graph6") {
    std::cout << serialize_graph6(fg.graph) << "\n";
  } else if (args.emit == "dot") {
    VertexSet highlight = 0;
    for (const auto& [tag, v] : fg.special) highlight |= singleton(v);
    std::cout << export_dot(fg.graph, highlight);
  }
  return ok ? 0 : kExitFail;
}

struct SearchArgs {
  int n = 0;
  int k = 0;
  std::optional<int> girth;
  std::string subset = "all";
  std::string objective = "F";
  int jobs = 1;
  std::string out;
  bool timing = false;
};

int run_search(const SearchArgs& args) {
  ClassSpec cls{args.n, args.k, args.girth, *parse_tree_filter(args.subset)};
  const Objective objective = args.objective == "F" ? Objective::F : Objective::MinVertexSubgraphNumber;
  const SearchReport report = search(cls, objective, {args.jobs, args.timing});
  std::cout << summary_line(report) << "\n";
  if (!args.out.empty()) {
    std::ofstream out(args.out);
    if (!out) throw UsageError("cannot write '" + args.out + "'");
    out << to_json(report);
  }
  return 0;
}

struct VerifyArgs {
  std::string suite;
  std::optional<int> n_max;
  std::string theorem;
  int jobs = 1;
};

int run_verify(const VerifyArgs& args) {
  const SearchOptions options{args.jobs, false};
  VerifyReport report;
  if (args.suite == "table1") {
    report = verify_table1(args.n_max.value_or(9), options);
  } else if (args.suite == "theorems") {
    report = args.theorem.empty() ? verify_theorems(args.n_max.value_or(9), options)
                                  : verify_theorem(args.theorem, args.n_max.value_or(9), options);
  } else {
    report = verify_formulas(args.n_max.value_or(12));
  }
  std::cout << report.to_text();
  std::cout << "suite " << args.suite << ": " << (report.passed() ? "PASS" : "FAIL") << "\n";
  return report.passed() ? 0 : kExitFail;
}

struct OracleArgs {
  std::string in = "-";
  std::string format = "graph6";
};

// Naive edge-subset oracle, edge-set enumerator and decomposition, for F and
// every f(v).
int run_oracle_diff(const OracleArgs& args) {
  int status = 0;
  for (const Graph& g : read_graphs(args.in, args.format)) {
    const bool naive_ok = g.size() <= 30;
    const bool connected = is_connected(g);
    std::vector<std::string> mismatches;
    auto compare = [&](const std::string& what, VertexSet required) {
      const Count census = count_containing(g, required);
      if (naive_ok) {
        const Count naive = count_containing_naive(g, required);
        if (naive != census) mismatches.push_back(what + " naive=" + to_decimal(naive) + " census=" + to_decimal(census));
      }
      if (connected) {
        const Count dec = count_containing_via_decomposition(g, required);
        if (dec != census) mismatches.push_back(what + " decompose=" + to_decimal(dec) + " census=" + to_decimal(census));
      }
    };
    compare("F", 0);
    for (Vertex v = 0; v < g.order(); ++v) compare("f(" + std::to_string(v) + ")", singleton(v));
    std::cout << serialize_graph6(g) << ": ";
    if (mismatches.empty()) {
      std::cout << "agree F=" << to_decimal(count_connected_subgraphs(g));
      if (!naive_ok) std::cout << " (naive skipped, m > 30)";
      if (!connected) std::cout << " (decomposition skipped, disconnected)";
      std::cout << "\n";
    } else {
      status = kExitFail;
      std::cout << "MISMATCH";
      for (const auto& m : mismatches) std::cout << " " << m;
      std::cout << "\n";
    }
  }
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact connected-subgraph counting and extremal search"};
  app.require_subcommand(1);

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Count connected subgraphs of input graphs");
  count->add_option("--in", count_args.in, "Input file, or - for stdin")->required();
  count->add_option("--format", count_args.format)->check(CLI::IsMember({"graph6", "edgelist"}));
  auto* vertex_opt = count->add_option("--vertex", count_args.vertex, "Count subgraphs containing this vertex");
  count->add_option("--containing", count_args.containing, "Comma-separated vertices that must be contained")
      ->excludes(vertex_opt);
  count->add_option("--method", count_args.method)->check(CLI::IsMember({"brute", "decompose", "both"}));

  FamilyArgs family_args;
  auto* family = app.add_subcommand("family", "Closed forms for a named family instance");
  family->add_option("--spec", family_args.spec, "NAME:key=int[,key=int...]")->required();
  family->add_option("--emit", family_args.emit)->check(CLI::IsMember({"graph6", "dot"}));
  family->add_flag("--check", family_args.check, "Recompute via decomposition");

  SearchArgs search_args;
  auto* search_cmd = app.add_subcommand("search", "Exhaustive minimizer search over a graph class");
  search_cmd->add_option("--n", search_args.n)->required()->check(CLI::Range(1, 1000));
  search_cmd->add_option("--k", search_args.k)->required()->check(CLI::NonNegativeNumber);
  search_cmd->add_option("--girth", search_args.girth)->check(CLI::NonNegativeNumber);
  search_cmd->add_option("--subset", search_args.subset)->check(CLI::IsMember({"all", "trees", "nontrees"}));
  search_cmd->add_option("--objective", search_args.objective, "F (default) or minf")->check(CLI::IsMember({"F", "minf"}));
  search_cmd->add_option("--jobs", search_args.jobs)->check(CLI::Range(1, 256));
  search_cmd->add_option("--out", search_args.out, "Write the JSON report here");
  search_cmd->add_flag("--timing", search_args.timing, "Record wall time in the report");

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", verify_args.suite)->required()->check(CLI::IsMember({"table1", "theorems", "formulas"}));
  verify->add_option("--n-max", verify_args.n_max)->check(CLI::Range(1, 64));
  verify->add_option("--theorem", verify_args.theorem, "Run a single theorem (theorems suite)");
  verify->add_option("--jobs", verify_args.jobs)->check(CLI::Range(1, 256));

  OracleArgs oracle_args;
  auto* oracle = app.add_subcommand("oracle-diff", "Compare naive, enumerating and decomposing counters");
  oracle->add_option("--in", oracle_args.in, "Input file, or - for stdin")->required();
  oracle->add_option("--format", oracle_args.format)->check(CLI::IsMember({"graph6", "edgelist"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*count) return run_count(count_args);
    if (*family) return run_family(family_args);
    if (*search_cmd) return run_search(search_args);
    if (*verify) return run_verify(verify_args);
    if (*oracle) return run_oracle_diff(oracle_args);
  } catch (const CountLimitExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SearchCapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
