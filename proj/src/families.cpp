#include "cutcount/families.hpp"

#include <array>
#include <charconv>
#include <set>

#include "cutcount/decompose.hpp"

namespace cutcount {

namespace {

struct FamilyInfo {
  Family family;
  std::string_view name;
  std::vector<std::string> keys;
};

const std::array<FamilyInfo, 8>& family_table() {
  static const std::array<FamilyInfo, 8> table = {{
      {Family::Path, "P", {"n"}},
      {Family::Cycle, "C", {"n"}},
      {Family::Star, "S", {"n"}},
      {Family::Lollipop, "L", {"n", "g"}},
      {Family::Dumbbell, "CC", {"n", "m1", "m2"}},
      {Family::PathStar, "PS", {"k", "m"}},
      {Family::DoubleBroom, "T", {"l", "m", "d"}},
      {Family::CycleBroom, "Q", {"n", "k"}},
  }};
  return table;
}

const FamilyInfo& info(Family f) {
  for (const auto& entry : family_table()) {
    if (entry.family == f) return entry;
  }
  throw InvalidFamily("unknown family");
}

void require(bool ok, const FamilySpec& spec, std::string_view what) {
  if (!ok) throw InvalidFamily(to_string(spec) + ": " + std::string(what));
}

// Exact halving/quartering of an expression known to be divisible.
Count exact_div(const Count& numerator, int divisor) {
  if (numerator % divisor != 0) throw std::logic_error("closed form is not integral");
  return numerator / divisor;
}

Count cycle_vertex_f(long long c) { return exact_div(Count(c * c + c + 2), 2); }

}  // namespace

std::string_view family_name(Family f) { return info(f).name; }

std::string_view tag_name(VertexTag t) {
  switch (t) {
    case VertexTag::Pendant:
      return "pendant";
    case VertexTag::Cut:
      return "cut";
    case VertexTag::PathEnd:
      return "path-end";
    case VertexTag::Cycle:
      return "cycle";
  }
  return "?";
}

std::optional<VertexTag> parse_tag(std::string_view text) {
  for (VertexTag t : {VertexTag::Pendant, VertexTag::Cut, VertexTag::PathEnd, VertexTag::Cycle}) {
    if (tag_name(t) == text) return t;
  }
  return std::nullopt;
}

int FamilySpec::at(const std::string& key) const {
  auto it = params.find(key);
  if (it == params.end()) throw InvalidFamily("missing parameter '" + key + "'");
  return it->second;
}

FamilySpec parse_family(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw InvalidFamily("expected NAME:key=value[,key=value...], got '" + std::string(text) + "'");
  }
  const std::string_view name = text.substr(0, colon);
  const FamilyInfo* found = nullptr;
  for (const auto& entry : family_table()) {
    if (entry.name == name) found = &entry;
  }
  if (!found) throw InvalidFamily("unknown family name '" + std::string(name) + "'");

  FamilySpec spec;
  spec.family = found->family;
  std::string_view rest = text.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0) {
      throw InvalidFamily("malformed parameter '" + std::string(item) + "'");
    }
    const std::string key(item.substr(0, eq));
    const std::string_view digits = item.substr(eq + 1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
      throw InvalidFamily("parameter '" + key + "' is not an integer");
    }
    if (!spec.params.emplace(key, value).second) {
      throw InvalidFamily("parameter '" + key + "' given twice");
    }
  }
  const std::set<std::string> expected(found->keys.begin(), found->keys.end());
  std::set<std::string> given;
  for (const auto& [key, value] : spec.params) given.insert(key);
  if (given != expected) {
    std::string want;
    for (const auto& k : found->keys) want += (want.empty() ? "" : ",") + k;
    throw InvalidFamily(std::string(name) + " takes parameters " + want);
  }
  validate(spec);
  return spec;
}

std::string to_string(const FamilySpec& spec) {
  const FamilyInfo& fi = info(spec.family);
  std::string out(fi.name);
  out += ':';
  bool first = true;
  for (const auto& key : fi.keys) {
    auto it = spec.params.find(key);
    if (it == spec.params.end()) continue;
    if (!first) out += ',';
    out += key + "=" + std::to_string(it->second);
    first = false;
  }
  return out;
}

void validate(const FamilySpec& spec) {
  for (const auto& key : info(spec.family).keys) {
    if (!spec.params.count(key)) throw InvalidFamily(to_string(spec) + ": missing " + key);
  }
  switch (spec.family) {
    case Family::Path:
      require(spec.at("n") >= 1, spec, "need n >= 1");
      break;
    case Family::Cycle:
      require(spec.at("n") >= 3, spec, "need n >= 3");
      break;
    case Family::Star:
      require(spec.at("n") >= 2, spec, "need n >= 2");
      break;
    case Family::Lollipop:
      require(spec.at("g") >= 3 && spec.at("g") <= spec.at("n") - 1, spec,
              "need 3 <= g <= n-1 (use C for g = n)");
      break;
    case Family::Dumbbell:
      require(spec.at("m1") >= 3 && spec.at("m2") >= 3, spec, "need m1, m2 >= 3");
      require(spec.at("n") >= spec.at("m1") + spec.at("m2") - 1, spec, "need n >= m1+m2-1");
      break;
    case Family::PathStar:
      require(spec.at("k") >= 1 && spec.at("m") >= 1, spec, "need k, m >= 1");
      break;
    case Family::DoubleBroom:
      require(spec.at("l") >= 1 && spec.at("m") >= 1, spec, "need l, m >= 1");
      require(spec.at("d") >= 2, spec, "need d >= 2");
      break;
    case Family::CycleBroom:
      require(spec.at("k") >= 2, spec, "need k >= 2");
      require(spec.at("n") - spec.at("k") - 1 >= 3, spec, "need n-k-1 >= 3");
      break;
  }
  require(family_order(spec) <= kMaxVertices, spec, "more than 64 vertices");
}

int family_order(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::PathStar:
      return spec.at("k") + spec.at("m");
    case Family::DoubleBroom:
      return spec.at("l") + spec.at("m") + spec.at("d");
    default:
      return spec.at("n");
  }
}

FamilyGraph build(const FamilySpec& spec) {
  validate(spec);
  const int n = family_order(spec);
  std::vector<Edge> edges;
  std::map<VertexTag, Vertex> special;
  auto ring = [&](std::vector<Vertex> cyc) {
    for (std::size_t i = 0; i < cyc.size(); ++i) edges.push_back({cyc[i], cyc[(i + 1) % cyc.size()]});
  };
  auto ring_range = [&](Vertex first, int length) {
    std::vector<Vertex> cyc;
    for (int i = 0; i < length; ++i) cyc.push_back(first + i);
    ring(cyc);
  };
  auto chain = [&](const std::vector<Vertex>& walk) {
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) edges.push_back({walk[i], walk[i + 1]});
  };

  switch (spec.family) {
    case Family::Path: {
      std::vector<Vertex> walk;
      for (Vertex v = 0; v < n; ++v) walk.push_back(v);
      chain(walk);
      special[VertexTag::Pendant] = 0;
      break;
    }
    case Family::Cycle:
      ring_range(0, n);
      special[VertexTag::Cycle] = 0;
      break;
    case Family::Star:
      for (Vertex v = 1; v < n; ++v) edges.push_back({0, v});
      special[VertexTag::Cut] = 0;
      special[VertexTag::Pendant] = 1;
      break;
    case Family::Lollipop: {
      const int g = spec.at("g");
      ring_range(0, g);
      std::vector<Vertex> walk{0};
      for (Vertex v = g; v < n; ++v) walk.push_back(v);
      chain(walk);
      special[VertexTag::Cut] = 0;
      special[VertexTag::Pendant] = n - 1;
      break;
    }
    case Family::Dumbbell: {
      const int m1 = spec.at("m1"), m2 = spec.at("m2");
      const int path_vertices = n - m1 - m2 + 2;
      ring_range(0, m1);
      if (path_vertices == 1) {
        std::vector<Vertex> second{0};
        for (int i = 0; i < m2 - 1; ++i) second.push_back(m1 + i);
        ring(second);
      } else {
        ring_range(m1, m2);
        std::vector<Vertex> walk{0};
        for (Vertex v = m1 + m2; v < n; ++v) walk.push_back(v);
        walk.push_back(m1);
        chain(walk);
      }
      special[VertexTag::Cut] = 0;
      break;
    }
    case Family::PathStar: {
      const int k = spec.at("k"), m = spec.at("m");
      std::vector<Vertex> walk;
      for (Vertex v = 0; v < k; ++v) walk.push_back(v);
      chain(walk);
      for (int i = 0; i < m; ++i) edges.push_back({k - 1, k + i});
      special[VertexTag::PathEnd] = 0;
      break;
    }
    case Family::DoubleBroom: {
      const int l = spec.at("l"), m = spec.at("m"), d = spec.at("d");
      std::vector<Vertex> walk;
      for (Vertex v = 0; v < d; ++v) walk.push_back(v);
      chain(walk);
      for (int i = 0; i < l; ++i) edges.push_back({0, d + i});
      for (int i = 0; i < m; ++i) edges.push_back({d - 1, d + l + i});
      break;
    }
    case Family::CycleBroom: {
      const int k = spec.at("k");
      const int c = n - k - 1;
      ring_range(0, c);
      std::vector<Vertex> walk{0};
      for (int i = 0; i < k - 1; ++i) walk.push_back(c + i);
      chain(walk);
      const Vertex center = walk.back();
      edges.push_back({center, c + k - 1});
      edges.push_back({center, c + k});
      special[VertexTag::Cut] = 0;
      break;
    }
  }
  return {Graph(n, edges), special};
}

Count balanced_double_broom_F(int n, int k) {
  if (k < 2 || n - k < 2) throw InvalidFamily("balanced double broom needs k >= 2, n-k >= 2");
  const int leaves = n - k;
  const Count tail = pow2(leaves) + leaves + binomial2(k - 1);
  if (leaves % 2 == 0) return Count(k - 1) * pow2((leaves + 2) / 2) + tail;
  return Count(3) * (k - 1) * pow2((leaves - 1) / 2) + tail;
}

Count closed_form_F(const FamilySpec& spec) {
  validate(spec);
  switch (spec.family) {
    case Family::Path: {
      const long long n = spec.at("n");
      return binomial2(n + 1);
    }
    case Family::Cycle: {
      const long long n = spec.at("n");
      return Count(n * n + 1);
    }
    case Family::Star: {
      const int n = spec.at("n");
      return pow2(n - 1) + (n - 1);
    }
    case Family::Lollipop: {
      const long long n = spec.at("n");
      const long long k = n - spec.at("g");
      return exact_div(Count(k) * (n * n + k * k - 2 * n * k + n + 3), 2) + (n - k) * (n - k) + 1;
    }
    case Family::Dumbbell: {
      const long long m1 = spec.at("m1"), m2 = spec.at("m2");
      const long long k = spec.at("n") - m1 - m2 + 2;
      const long long sum = m1 * m1 * m2 * m2 + m1 * m1 * m2 + 2 * m1 * m1 * k + m1 * m2 * m2 +
                            m1 * m2 + 2 * m1 * k + 2 * m1 * m1 + 2 * m2 * m2 +
                            2 * m2 * m2 * k + 2 * m2 * k + 2 * k * k + 2 * k - 2 * m1 - 2 * m2;
      return exact_div(Count(sum), 4);
    }
    case Family::PathStar: {
      const long long k = spec.at("k");
      const int m = spec.at("m");
      return binomial2(k) + Count(k) * pow2(m) + m;
    }
    case Family::DoubleBroom: {
      const int l = spec.at("l"), m = spec.at("m"), d = spec.at("d");
      const int n = l + m + d;
      if (std::min(l, m) == (n - d) / 2) return balanced_double_broom_F(n, d);
      // Unbalanced: glue star K_{1,l}, path P_d and star K_{1,m} at the path ends.
      const Count star_l_total = pow2(l) + l, star_l_center = pow2(l);
      const Count star_m_total = pow2(m) + m, star_m_center = pow2(m);
      const Count path_total = binomial2(d + 1);
      const Count left = merge_count(star_l_total, path_total, star_l_center, Count(d));
      // f at the far path end: d subpaths in P_d, plus those through vertex 0
      // into the l-star.
      const Count left_far_end = Count(d) + (star_l_center - 1);
      return merge_count(left, star_m_total, left_far_end, star_m_center);
    }
    case Family::CycleBroom: {
      const long long k = spec.at("k");
      const long long c = spec.at("n") - k - 1;
      return exact_div(Count((4 + k) * c * c + (k + 2) * c + k * k + 7 * k + 4), 2);
    }
  }
  throw InvalidFamily("unknown family");
}

std::vector<VertexTag> tags_for(Family f) {
  switch (f) {
    case Family::Path:
      return {VertexTag::Pendant};
    case Family::Cycle:
      return {VertexTag::Cycle};
    case Family::Star:
      return {VertexTag::Pendant, VertexTag::Cut};
    case Family::Lollipop:
      return {VertexTag::Pendant, VertexTag::Cut};
    case Family::Dumbbell:
      return {VertexTag::Cut};
    case Family::PathStar:
      return {VertexTag::PathEnd};
    case Family::DoubleBroom:
      return {};
    case Family::CycleBroom:
      return {VertexTag::Cut};
  }
  return {};
}

Count closed_form_f(const FamilySpec& spec, VertexTag tag) {
  validate(spec);
  const auto allowed = tags_for(spec.family);
  if (std::find(allowed.begin(), allowed.end(), tag) == allowed.end()) {
    throw InvalidFamily(std::string("tag '") + std::string(tag_name(tag)) +
                        "' is not defined for " + to_string(spec));
  }
  switch (spec.family) {
    case Family::Path:
      return Count(spec.at("n"));
    case Family::Cycle:
      return cycle_vertex_f(spec.at("n"));
    case Family::Star: {
      const int n = spec.at("n");
      return tag == VertexTag::Cut ? pow2(n - 1) : pow2(n - 2) + 1;
    }
    case Family::Lollipop: {
      const long long n = spec.at("n"), g = spec.at("g");
      const long long k = n - g;
      if (tag == VertexTag::Pendant) return exact_div(Count((n - k) * (n - k) + n + k + 2), 2);
      return cycle_vertex_f(g) * (k + 1);
    }
    case Family::Dumbbell: {
      const long long m1 = spec.at("m1"), m2 = spec.at("m2");
      const long long k = spec.at("n") - m1 - m2 + 2;
      return cycle_vertex_f(m1) * exact_div(Count(m2 * m2 + m2 + 2 * k), 2);
    }
    case Family::PathStar:
      return pow2(spec.at("m")) + (spec.at("k") - 1);
    case Family::CycleBroom: {
      const long long k = spec.at("k");
      return cycle_vertex_f(spec.at("n") - k - 1) * (k + 3);
    }
    case Family::DoubleBroom:
      break;
  }
  throw InvalidFamily("no closed form for this tag");
}

}  // namespace cutcount
