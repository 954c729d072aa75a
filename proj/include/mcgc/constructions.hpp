#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcgc/sequence.hpp"

namespace mcgc {

/// Undirected multigraph on vertices 1..n; loops allowed and add 2 to the
/// degree of their vertex.
class Multigraph {
 public:
  explicit Multigraph(std::size_t vertices) : vertices_(vertices) {}

  /// Complete graph K_n, optionally with one loop per vertex.
  static Multigraph complete(std::size_t n, bool with_loops = false);

  std::size_t add_edge(Color u, Color v);
  /// Removes one copy of edge {u,v}; throws if absent.
  void remove_edge(Color u, Color v);

  std::size_t vertex_count() const noexcept { return vertices_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<std::pair<Color, Color>>& edges() const noexcept {
    return edges_;
  }
  std::size_t degree(Color v) const;

 private:
  std::size_t vertices_;
  std::vector<std::pair<Color, Color>> edges_;
};

/// Hierholzer's algorithm. At every vertex an unused loop is taken first,
/// then the lowest-numbered neighbor over an unused edge. Returns the visit
/// order with the final return to `start` omitted, so the result has one
/// entry per edge.
std::vector<Color> eulerian_circuit(const Multigraph& g, Color start);

/// Doubles the first occurrence of every vertex in a cyclic walk.
std::vector<Color> repeat_first_occurrences(std::span<const Color> walk);

/// 1, 2, ..., k (cyclic 1-distinguishable).
ColorSequence build_m1(std::size_t k);

/// Cyclic 2-distinguishable sequence on [k]: an Mcycle of length C(k+1,2)
/// for odd k >= 3, and C(k+1,2) - k/2 for even k >= 4 (Eulerian circuit of
/// K_k minus the 1-factor {1,2},{3,4},...).
ColorSequence build_m2(std::size_t k);

/// Split of the m=3 construction on [k] into a head on [k-3] and a tail
/// that covers every triple touching {k-2,k-1,k} except that triple itself.
struct RecursionPair {
  ColorSequence s_part;
  ColorSequence t_part;

  ColorSequence joined() const;
};

/// Pieces of one recursive step for k >= 9: the previous level's pair, the
/// relabeled tail X and the two template words Y and Z.
struct M3Step {
  RecursionPair previous;
  ColorSequence x;
  ColorSequence y;
  ColorSequence z;
};

RecursionPair build_m3_pair(std::size_t k);
M3Step build_m3_step(std::size_t k);

/// Cyclic 3-distinguishable sequence on [k], 3 | k, of length
/// C(k+2,3) - k/3.
ColorSequence build_m3(std::size_t k);

/// A cut of the cyclic m-distinguishable `seq` followed by m copies of each
/// new color k'+1..k'+t. Linear m-distinguishable on [k'+t].
ColorSequence pad_with_new_colors(const ColorSequence& seq, std::size_t m,
                                  std::size_t new_colors,
                                  std::size_t cut = 0);

/// 1^m 2^m ... k^m, a linear m-distinguishable sequence of length k*m.
ColorSequence block_sequence(std::size_t k, std::size_t m);

struct SearchResult {
  std::size_t max_length = 0;
  std::optional<ColorSequence> witness;
  /// True when every length up to C(k+m-1,m) was exhausted; false when the
  /// cap cut the search short and `max_length` is only the best within it.
  bool proven = false;
  std::size_t searched_up_to = 0;
  std::size_t nodes = 0;
};

/// Exhaustive search for the longest cyclic m-distinguishable sequence on
/// [k] of length <= cap. Sequences are canonical (s_0 = 1, first
/// occurrences ascending); the witness is the lexicographically smallest.
SearchResult brute_force_max_cyclic(std::size_t m, std::size_t k,
                                    std::size_t length_cap);

/// Lexicographic depth-first search for a linear m-distinguishable sequence
/// of exactly `length` on [k]. Gives up after `node_budget` nodes.
std::optional<ColorSequence> search_linear(std::size_t m, std::size_t k,
                                           std::size_t length,
                                           std::size_t node_budget);

}  // namespace mcgc
