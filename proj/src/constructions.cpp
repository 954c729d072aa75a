#include "mcgc/constructions.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <string_view>

#include "mcgc/bounds.hpp"

namespace mcgc {

Multigraph Multigraph::complete(std::size_t n, bool with_loops) {
  Multigraph g(n);
  for (Color u = 1; u <= n; ++u) {
    if (with_loops) g.add_edge(u, u);
    for (Color v = u + 1; v <= n; ++v) g.add_edge(u, v);
  }
  return g;
}

std::size_t Multigraph::add_edge(Color u, Color v) {
  if (u < 1 || v < 1 || u > vertices_ || v > vertices_) {
    throw Error("edge endpoint outside vertex range");
  }
  edges_.emplace_back(std::min(u, v), std::max(u, v));
  return edges_.size() - 1;
}

void Multigraph::remove_edge(Color u, Color v) {
  const std::pair<Color, Color> e{std::min(u, v), std::max(u, v)};
  auto it = std::find(edges_.begin(), edges_.end(), e);
  if (it == edges_.end()) {
    throw Error("edge {" + std::to_string(u) + "," + std::to_string(v) +
                "} not present");
  }
  edges_.erase(it);
}

std::size_t Multigraph::degree(Color v) const {
  std::size_t d = 0;
  for (const auto& [a, b] : edges_) d += (a == v) + (b == v);
  return d;
}

std::vector<Color> eulerian_circuit(const Multigraph& g, Color start) {
  const std::size_t n = g.vertex_count();
  if (start < 1 || start > n) throw Error("start vertex outside graph");
  if (g.edge_count() == 0) throw Error("graph has no edges");

  struct Arc {
    bool loop;
    Color to;
    std::size_t edge;
  };
  std::vector<std::vector<Arc>> adj(n + 1);
  std::vector<std::size_t> degree(n + 1, 0);
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const auto [u, v] = g.edges()[e];
    degree[u] += 1;
    degree[v] += 1;
    if (u == v) {
      adj[u].push_back({true, u, e});
    } else {
      adj[u].push_back({false, v, e});
      adj[v].push_back({false, u, e});
    }
  }
  for (Color v = 1; v <= n; ++v) {
    if (degree[v] % 2) {
      throw Error("graph not Eulerian: vertex " + std::to_string(v) +
                  " has odd degree " + std::to_string(degree[v]));
    }
    // Loops first, then ascending neighbor id.
    std::sort(adj[v].begin(), adj[v].end(), [](const Arc& a, const Arc& b) {
      if (a.loop != b.loop) return a.loop;
      if (a.to != b.to) return a.to < b.to;
      return a.edge < b.edge;
    });
  }
  if (degree[start] == 0) {
    throw Error("start vertex " + std::to_string(start) + " has no edges");
  }

  std::vector<bool> used(g.edge_count(), false);
  std::vector<std::size_t> cursor(n + 1, 0);
  std::vector<Color> stack{start};
  std::vector<Color> circuit;
  circuit.reserve(g.edge_count() + 1);
  while (!stack.empty()) {
    const Color v = stack.back();
    auto& arcs = adj[v];
    while (cursor[v] < arcs.size() && used[arcs[cursor[v]].edge]) ++cursor[v];
    if (cursor[v] == arcs.size()) {
      circuit.push_back(v);
      stack.pop_back();
      continue;
    }
    const Arc& arc = arcs[cursor[v]];
    used[arc.edge] = true;
    stack.push_back(arc.to);
  }
  if (circuit.size() != g.edge_count() + 1) {
    throw Error("graph not Eulerian: edge set is disconnected");
  }
  std::reverse(circuit.begin(), circuit.end());
  circuit.pop_back();
  return circuit;
}

std::vector<Color> repeat_first_occurrences(std::span<const Color> walk) {
  std::vector<Color> out;
  out.reserve(walk.size() * 2);
  std::vector<bool> seen;
  for (Color v : walk) {
    if (v >= seen.size()) seen.resize(v + 1, false);
    out.push_back(v);
    if (!seen[v]) {
      seen[v] = true;
      out.push_back(v);
    }
  }
  return out;
}

namespace {

void require_cyclic_distinguishable(const ColorSequence& seq, std::size_t m,
                                    std::size_t expected_length,
                                    const std::string& what) {
  if (seq.size() != expected_length) {
    throw Error("internal validation failure: " + what + " has length " +
                std::to_string(seq.size()) + ", expected " +
                std::to_string(expected_length));
  }
  if (!check_distinguishable(seq, m).ok) {
    throw Error("internal validation failure: " + what +
                " is not distinguishable");
  }
}

std::size_t small_multichoose(std::size_t k, std::size_t m) {
  return static_cast<std::size_t>(multichoose(k, m));
}

}  // namespace

ColorSequence build_m1(std::size_t k) {
  if (k < 1) throw Error("build_m1 requires k >= 1");
  std::vector<Color> colors(k);
  for (std::size_t i = 0; i < k; ++i) colors[i] = static_cast<Color>(i + 1);
  return ColorSequence(std::move(colors), k, Mode::cyclic);
}

ColorSequence build_m2(std::size_t k) {
  if (k < 3) {
    throw Error("build_m2 requires k >= 3 (k=" + std::to_string(k) +
                " is degenerate)");
  }
  std::vector<Color> colors;
  std::size_t expected = 0;
  if (k % 2) {
    const auto g = Multigraph::complete(k, /*with_loops=*/true);
    colors = eulerian_circuit(g, 1);
    expected = small_multichoose(k, 2);
  } else {
    auto g = Multigraph::complete(k);
    for (Color v = 1; v < k; v += 2) g.remove_edge(v, v + 1);
    colors = repeat_first_occurrences(eulerian_circuit(g, 1));
    expected = small_multichoose(k, 2) - k / 2;
  }
  ColorSequence seq(std::move(colors), k, Mode::cyclic);
  require_cyclic_distinguishable(seq, 2, expected, "build_m2");
  return seq;
}

ColorSequence RecursionPair::joined() const {
  std::vector<Color> colors(s_part.colors().begin(), s_part.colors().end());
  colors.insert(colors.end(), t_part.colors().begin(), t_part.colors().end());
  return ColorSequence(std::move(colors), t_part.palette_size(), Mode::cyclic);
}

namespace {

// Base cases of the m=3 recursion.
constexpr std::string_view kM3Base3 = "111222333";
constexpr std::string_view kM3Base6 =
    "111222333116631552245353244336214146262514365554446665";

// Y words over a..f (= k-5..k), digits are literal colors.
constexpr std::string_view kYEven = "aaffcaeebbdececbddccfbadadfbf";
constexpr std::string_view kYOdd = "beb1fabd1cffaaecbfbfdada1eccfaeecdcdbd";

// Each Z line is lead (k-6) alt (k-7) lead (k-8) ... down to the floor
// color, then the tail word.
struct ZLine {
  std::string_view lead, alt, tail;
};
constexpr std::array<ZLine, 3> kZLines{{
    {"be", "af", "be"},
    {"ad", "ce", "ad"},
    {"cf", "bd", "cfe"},
}};

void append_template(std::vector<Color>& out, std::string_view word,
                     std::size_t k) {
  for (char ch : word) {
    if (ch >= 'a' && ch <= 'f') {
      out.push_back(static_cast<Color>(k - 5 + (ch - 'a')));
    } else {
      out.push_back(static_cast<Color>(ch - '0'));
    }
  }
}

ColorSequence from_literal(std::string_view digits, std::size_t k) {
  return ColorSequence(parse_digits(std::string(digits)), k, Mode::cyclic);
}

}  // namespace

M3Step build_m3_step(std::size_t k) {
  if (k < 9 || k % 3) throw Error("m=3 recursive step requires 3 | k, k >= 9");
  M3Step step{build_m3_pair(k - 3), build_m1(1), build_m1(1), build_m1(1)};

  std::vector<Color> x;
  x.reserve(step.previous.t_part.size());
  for (Color c : step.previous.t_part.colors()) {
    x.push_back(c + 3 > k - 3 ? c + 3 : c);
  }
  step.x = ColorSequence(std::move(x), k, Mode::cyclic);

  std::vector<Color> y;
  append_template(y, k % 2 ? kYOdd : kYEven, k);
  step.y = ColorSequence(std::move(y), k, Mode::cyclic);

  const std::size_t floor_color = k % 2 ? 2 : 1;
  std::vector<Color> z;
  for (const auto& line : kZLines) {
    for (std::size_t j = k - 6; j >= floor_color; --j) {
      append_template(z, (k - 6 - j) % 2 ? line.alt : line.lead, k);
      z.push_back(static_cast<Color>(j));
    }
    append_template(z, line.tail, k);
  }
  step.z = ColorSequence(std::move(z), k, Mode::cyclic);
  return step;
}

RecursionPair build_m3_pair(std::size_t k) {
  if (k < 6 || k % 3) throw Error("m=3 split requires 3 | k, k >= 6");
  if (k == 6) {
    return {from_literal(kM3Base6.substr(0, 9), 3),
            from_literal(kM3Base6.substr(9), 6)};
  }
  auto step = build_m3_step(k);
  std::vector<Color> tail;
  for (const auto* part : {&step.x, &step.y, &step.z}) {
    tail.insert(tail.end(), part->colors().begin(), part->colors().end());
  }
  return {step.previous.joined(),
          ColorSequence(std::move(tail), k, Mode::cyclic)};
}

ColorSequence build_m3(std::size_t k) {
  if (k == 0 || k % 3) {
    throw Error("build_m3 requires k to be a positive multiple of 3 (k=" +
                std::to_string(k) + ")");
  }
  ColorSequence seq =
      k == 3 ? from_literal(kM3Base3, 3) : build_m3_pair(k).joined();
  require_cyclic_distinguishable(seq, 3, small_multichoose(k, 3) - k / 3,
                                 "build_m3");
  return seq;
}

ColorSequence pad_with_new_colors(const ColorSequence& seq, std::size_t m,
                                  std::size_t new_colors, std::size_t cut) {
  if (!seq.cyclic()) throw Error("padding requires a cyclic sequence");
  if (!check_distinguishable(seq, m).ok) {
    throw Error("padding requires a cyclic m-distinguishable sequence");
  }
  const auto head = t_cut(seq, cut, m);
  const std::size_t k = seq.palette_size() + new_colors;
  std::vector<Color> colors(head.colors().begin(), head.colors().end());
  for (std::size_t c = seq.palette_size() + 1; c <= k; ++c) {
    colors.insert(colors.end(), m, static_cast<Color>(c));
  }
  ColorSequence out(std::move(colors), k, Mode::linear);
  if (!check_distinguishable(out, m).ok) {
    throw Error("internal validation failure: padded sequence");
  }
  return out;
}

ColorSequence block_sequence(std::size_t k, std::size_t m) {
  if (k < 1 || m < 1) throw Error("block sequence requires k, m >= 1");
  std::vector<Color> colors;
  colors.reserve(k * m);
  for (Color c = 1; c <= k; ++c) colors.insert(colors.end(), m, c);
  return ColorSequence(std::move(colors), k, Mode::linear);
}

namespace {

constexpr std::uint64_t kMaxKeySpace = 1ull << 26;

// Window keys are count vectors in base m+1; `weight[c]` = (m+1)^(c-1).
std::optional<std::vector<std::uint64_t>> key_weights(std::size_t m,
                                                      std::size_t k) {
  std::vector<std::uint64_t> weight(k + 1, 0);
  std::uint64_t w = 1;
  for (std::size_t c = 1; c <= k; ++c) {
    weight[c] = w;
    if (w > kMaxKeySpace / (m + 1)) return std::nullopt;
    w *= (m + 1);
  }
  return weight;
}

// Iterative lexicographic DFS over restricted-growth sequences of length L
// whose linear windows are pairwise distinct. `leaf` decides acceptance of a
// full sequence and may inspect the shared `seen` table.
template <typename Leaf>
bool dfs_distinct_windows(std::size_t m, std::size_t k, std::size_t L,
                          const std::vector<std::uint64_t>& weight,
                          std::vector<char>& seen, std::vector<Color>& s,
                          std::size_t& nodes, std::size_t node_budget,
                          bool& exhausted_budget, Leaf&& leaf) {
  s.assign(L, 0);
  std::vector<Color> prefix_max(L + 1, 0);
  std::vector<std::uint64_t> prefix(L + 1, 0);
  std::vector<std::int64_t> mark(L, -1);
  std::size_t i = 0;
  while (true) {
    if (mark[i] >= 0) {
      seen[static_cast<std::size_t>(mark[i])] = 0;
      mark[i] = -1;
    }
    const Color limit =
        static_cast<Color>(std::min<std::size_t>(k, prefix_max[i] + 1));
    Color c = s[i] + 1;
    bool placed = false;
    for (; c <= limit; ++c) {
      if (++nodes > node_budget) {
        exhausted_budget = true;
        return false;
      }
      prefix[i + 1] = prefix[i] + weight[c];
      if (i + 1 >= m) {
        const auto key = prefix[i + 1] - prefix[i + 1 - m];
        if (seen[key]) continue;
        seen[key] = 1;
        mark[i] = static_cast<std::int64_t>(key);
      }
      placed = true;
      break;
    }
    if (!placed) {
      s[i] = 0;
      if (i == 0) return false;
      --i;
      continue;
    }
    s[i] = c;
    prefix_max[i + 1] = std::max(prefix_max[i], c);
    if (i + 1 == L) {
      if (leaf(prefix)) return true;
      continue;
    }
    ++i;
    s[i] = 0;
  }
}

}  // namespace

SearchResult brute_force_max_cyclic(std::size_t m, std::size_t k,
                                    std::size_t length_cap) {
  if (m < 1 || k < 1 || length_cap < 1) {
    throw Error("search requires m, k, cap >= 1");
  }
  const auto weight = key_weights(m, k);
  if (!weight) throw Error("instance too large for exhaustive search");
  const std::size_t bound = small_multichoose(k, m);

  SearchResult result;
  result.searched_up_to = std::min(length_cap, bound);
  result.proven = length_cap >= bound;

  std::vector<char> seen((m + 1) * (*weight)[k], 0);
  std::vector<Color> s;
  for (std::size_t L = result.searched_up_to; L >= 1; --L) {
    auto leaf = [&](const std::vector<std::uint64_t>& prefix) {
      // Wrap-around windows: each must be new and unlike the others.
      std::vector<std::uint64_t> keys;
      if (L >= m) {
        for (std::size_t t = L - m + 1; t < L; ++t) {
          keys.push_back(prefix[L] - prefix[t] + prefix[t + m - L]);
        }
        for (std::size_t a = 0; a < keys.size(); ++a) {
          if (seen[keys[a]]) return false;
          for (std::size_t b = 0; b < a; ++b) {
            if (keys[a] == keys[b]) return false;
          }
        }
        return true;
      }
      for (std::size_t t = 0; t < L; ++t) {
        std::uint64_t key = 0;
        for (std::size_t j = 0; j < m; ++j) key += (*weight)[s[(t + j) % L]];
        if (std::find(keys.begin(), keys.end(), key) != keys.end()) {
          return false;
        }
        keys.push_back(key);
      }
      return true;
    };
    bool out_of_budget = false;
    std::fill(seen.begin(), seen.end(), 0);
    if (dfs_distinct_windows(m, k, L, *weight, seen, s, result.nodes,
                             std::numeric_limits<std::size_t>::max(),
                             out_of_budget, leaf)) {
      result.max_length = L;
      result.witness = ColorSequence(s, k, Mode::cyclic);
      return result;
    }
  }
  return result;
}

std::optional<ColorSequence> search_linear(std::size_t m, std::size_t k,
                                           std::size_t length,
                                           std::size_t node_budget) {
  if (m < 1 || k < 1 || length < m) return std::nullopt;
  const auto weight = key_weights(m, k);
  if (!weight) return std::nullopt;
  std::vector<char> seen((m + 1) * (*weight)[k], 0);
  std::vector<Color> s;
  std::size_t nodes = 0;
  bool out_of_budget = false;
  auto accept = [](const std::vector<std::uint64_t>&) { return true; };
  if (!dfs_distinct_windows(m, k, length, *weight, seen, s, nodes, node_budget,
                            out_of_budget, accept)) {
    return std::nullopt;
  }
  ColorSequence out(std::move(s), k, Mode::linear);
  if (!check_distinguishable(out, m).ok) {
    throw Error("internal validation failure: linear search result");
  }
  return out;
}

}  // namespace mcgc
