#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mcgc {

/// Library-wide domain error: violated preconditions, non-distinguishable
/// inputs where distinguishable ones are required, failed self-validation.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Colors are 1-based ids in [1, k].
using Color = std::uint32_t;

enum class Mode { linear, cyclic };

std::string to_string(Mode mode);
Mode parse_mode(const std::string& text);

/// A finite color sequence over the palette [k] read either linearly or
/// cyclically. Immutable after construction.
class ColorSequence {
 public:
  ColorSequence(std::vector<Color> colors, std::size_t palette_size,
                Mode mode = Mode::cyclic);

  std::size_t size() const noexcept { return colors_.size(); }
  std::size_t palette_size() const noexcept { return palette_; }
  Mode mode() const noexcept { return mode_; }
  bool cyclic() const noexcept { return mode_ == Mode::cyclic; }

  Color operator[](std::size_t i) const { return colors_[i]; }
  std::span<const Color> colors() const noexcept { return colors_; }

  ColorSequence with_mode(Mode mode) const;
  ColorSequence with_palette(std::size_t palette_size) const;
  ColorSequence rotated(std::size_t r) const;

  /// Compact rendering: digits concatenated when k <= 9, else space separated.
  std::string str() const;

  friend bool operator==(const ColorSequence& a, const ColorSequence& b) {
    return a.palette_ == b.palette_ && a.mode_ == b.mode_ &&
           a.colors_ == b.colors_;
  }

 private:
  std::vector<Color> colors_;
  std::size_t palette_;
  Mode mode_;
};

/// Parses a compact digit string ("111222333") into colors.
std::vector<Color> parse_digits(const std::string& digits);

/// Count vector over a palette; index i holds the multiplicity of color i+1.
class Multiset {
 public:
  Multiset() = default;
  explicit Multiset(std::vector<std::uint32_t> counts);

  static Multiset of(std::span<const Color> colors, std::size_t palette_size);

  std::size_t palette_size() const noexcept { return counts_.size(); }
  std::size_t cardinality() const noexcept { return cardinality_; }
  std::uint32_t count(Color c) const { return counts_.at(c - 1); }
  const std::vector<std::uint32_t>& counts() const noexcept { return counts_; }

  void add(Color c);
  void remove(Color c);

  /// Canonical key: counts in palette order joined by '-'.
  std::string key() const;
  static Multiset from_key(const std::string& key);

  /// Elements in ascending order, each repeated by multiplicity.
  std::vector<Color> elements() const;

  friend bool operator==(const Multiset& a, const Multiset& b) {
    return a.counts_ == b.counts_;
  }

 private:
  std::vector<std::uint32_t> counts_;
  std::size_t cardinality_ = 0;
};

struct MultisetHash {
  std::size_t operator()(const Multiset& s) const noexcept;
};

struct DistinguishabilityReport {
  bool ok = true;
  std::size_t windows = 0;
  /// Lexicographically smallest pair of window starts with equal multisets.
  std::optional<std::pair<std::size_t, std::size_t>> collision;
};

/// The multiset of the m colors starting at t (indices mod len in cyclic
/// mode).
Multiset window_multiset(const ColorSequence& seq, std::size_t t,
                         std::size_t m);

/// All window multisets over the mode's index range, in order.
std::vector<Multiset> window_multisets(const ColorSequence& seq,
                                       std::size_t m);

DistinguishabilityReport check_distinguishable(const ColorSequence& seq,
                                               std::size_t m);

/// Linearization of a cyclic sequence: s_{t+1}..s_{len-1} s_0..s_t followed
/// by s_{t+1}..s_{t+m-1}.
ColorSequence t_cut(const ColorSequence& seq, std::size_t t, std::size_t m);

}  // namespace mcgc
