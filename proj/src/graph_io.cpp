#include "cutcount/graph_io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace cutcount {

namespace {

constexpr int kBias = 63;

int sextet(char c) {
  const int value = static_cast<unsigned char>(c) - kBias;
  if (value < 0 || value > 63) {
    throw ParseError("graph6 character out of range: code " +
                     std::to_string(static_cast<unsigned char>(c)));
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view token, std::string_view what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("expected integer " + std::string(what) + ", got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty graph6 string");
  int n = 0;
  std::size_t pos = 0;
  if (text[0] == '~') {
    if (text.size() < 4 || text[1] == '~') throw ParseError("unsupported graph6 size form");
    n = (sextet(text[1]) << 12) | (sextet(text[2]) << 6) | sextet(text[3]);
    pos = 4;
  } else {
    n = sextet(text[0]);
    pos = 1;
  }
  if (n < 1 || n > kMaxVertices) throw ParseError("graph6 vertex count must be 1..64");
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t chars = (bits + 5) / 6;
  if (text.size() - pos != chars) {
    throw ParseError("graph6 length mismatch: expected " + std::to_string(chars) +
                     " data characters, got " + std::to_string(text.size() - pos));
  }
  std::vector<VertexSet> rows(n, 0);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int value = sextet(text[pos + k / 6]);
      if ((value >> (5 - k % 6)) & 1) {
        rows[i] |= singleton(j);
        rows[j] |= singleton(i);
      }
    }
  }
  for (; k < chars * 6; ++k) {
    if ((sextet(text[pos + k / 6]) >> (5 - k % 6)) & 1) {
      throw ParseError("graph6 padding bits are not zero");
    }
  }
  return Graph::from_adjacency(rows);
}

std::string serialize_graph6(const Graph& g) {
  const int n = g.order();
  if (n > 62) throw InvalidGraph("graph6 short form supports n <= 62");
  std::string out(1, static_cast<char>(kBias + n));
  int acc = 0, filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(kBias + acc));
        acc = filled = 0;
      }
    }
  }
  if (filled) out.push_back(static_cast<char>(kBias + (acc << (6 - filled))));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    lines.push_back(trim(text.substr(0, nl)));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
  }
  std::size_t i = 0;
  while (i < lines.size() && lines[i].empty()) ++i;
  if (i == lines.size() || lines[i].substr(0, 2) != "n=") {
    throw ParseError("edge list must start with 'n=<int>'");
  }
  const int n = parse_int(lines[i].substr(2), "vertex count");
  if (n < 1 || n > kMaxVertices) throw ParseError("vertex count must be 1..64");
  std::vector<Edge> edges;
  for (++i; i < lines.size(); ++i) {
    const std::string_view line = lines[i];
    if (line.empty()) continue;
    const auto space = line.find_first_of(" \t");
    if (space == std::string_view::npos) throw ParseError("expected 'u v', got '" + std::string(line) + "'");
    const int u = parse_int(line.substr(0, space), "endpoint");
    const int v = parse_int(trim(line.substr(space + 1)), "endpoint");
    edges.push_back({u, v});
  }
  try {
    return Graph(n, edges);
  } catch (const std::logic_error& e) {
    throw ParseError(e.what());
  }
}

std::string serialize_edge_list(const Graph& g) {
  std::string out = "n=" + std::to_string(g.order()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

std::string export_dot(const Graph& g, VertexSet highlight) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out << "  " << v;
    if (contains(highlight, v)) out << " [style=filled, fillcolor=\"#f4a261\"]";
    out << ";\n";
  }
  for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace cutcount
