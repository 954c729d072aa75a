#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcgc/sequence.hpp"

namespace mcgc {

/// Word counts, their gcd d and lcm L for interleaving a cyclic
/// m1-distinguishable sequence of length M1 with a cyclic m2-distinguishable
/// one of length M2.
struct CrossPlan {
  std::size_t M1 = 0, m1 = 0, M2 = 0, m2 = 0;
  std::size_t words1 = 0;  // M1 / m1
  std::size_t words2 = 0;  // M2 / m2
  std::size_t d = 0;
  std::size_t L = 0;
  std::size_t length() const noexcept { return (m1 + m2) * L; }
};

/// Throws Error naming the first violated condition.
CrossPlan plan_cross(std::size_t M1, std::size_t m1, std::size_t M2,
                     std::size_t m2);

/// Same checks without throwing; `reason` receives the failed condition.
std::optional<CrossPlan> try_plan_cross(std::size_t M1, std::size_t m1,
                                        std::size_t M2, std::size_t m2,
                                        std::string* reason = nullptr);

/// (alpha index, beta index) of each adjacent word pair, x = 0..L-1.
std::vector<std::pair<std::size_t, std::size_t>> word_pairs(
    const CrossPlan& plan);

/// Same colors shifted up by `offset`, palette grown by `offset`.
ColorSequence shift_palette(const ColorSequence& seq, std::size_t offset);

/// alpha_0 beta_0 alpha_1 beta_1 ... alpha_{L-1} beta_{L-1}. `s` uses
/// [k1] and `t` must use only colors above k1; the result is cyclic
/// (m1+m2)-distinguishable on t's palette and is checked before return.
ColorSequence cross(const ColorSequence& s, std::size_t m1,
                    const ColorSequence& t, std::size_t m2,
                    const CrossPlan& plan);

/// Convenience overload that plans from the operand lengths.
ColorSequence cross(const ColorSequence& s, std::size_t m1,
                    const ColorSequence& t, std::size_t m2);

/// Greedy split into 3s then 2s (5 -> 3+2, 7 -> 3+2+2).
std::vector<std::size_t> split_window(std::size_t m);

/// A base sequence available to the composer.
struct BaseSequence {
  ColorSequence sequence;
  std::size_t m;
  std::string origin;
};

struct Composition {
  ColorSequence sequence;
  std::size_t m = 0;
  std::vector<std::size_t> split;
  std::vector<std::string> bases;  // origin of each factor
  std::vector<CrossPlan> plans;    // one per fold, left to right
};

struct ComposeOptions {
  std::size_t max_colors = 24;
  bool use_builders = true;
  /// Extra cyclic bases, e.g. hand-made sequences.
  std::vector<BaseSequence> pool;
};

/// Folds base sequences left to right with `cross`. Among all admissible
/// base tuples within the color budget, picks the first in ascending
/// (total colors, output length, tuple order).
Composition compose_for_m(std::size_t m, const ComposeOptions& options = {});

}  // namespace mcgc
