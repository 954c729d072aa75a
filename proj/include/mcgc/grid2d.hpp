#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mcgc/sequence.hpp"

namespace mcgc {

/// Plain grids index blocks inside the grid only; cyclic grids wrap both axes.
enum class GridMode { plain, cyclic };

std::string to_string(GridMode mode);
GridMode parse_grid_mode(const std::string& text);

struct Point {
  std::size_t x = 0;
  std::size_t y = 0;
  friend auto operator<=>(const Point&, const Point&) = default;
};

/// M x N array of flat color ids in [1, k], indexed (x, y).
class ColorGrid2D {
 public:
  ColorGrid2D(std::size_t rows, std::size_t cols, std::vector<Color> cells,
              std::size_t palette_size, GridMode mode = GridMode::plain);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t palette_size() const noexcept { return palette_; }
  GridMode mode() const noexcept { return mode_; }
  bool cyclic() const noexcept { return mode_ == GridMode::cyclic; }

  Color at(std::size_t x, std::size_t y) const {
    return cells_[x * cols_ + y];
  }
  const std::vector<Color>& cells() const noexcept { return cells_; }

  friend bool operator==(const ColorGrid2D&, const ColorGrid2D&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Color> cells_;
  std::size_t palette_;
  GridMode mode_;
};

/// Flat id of the pair (a, b) on a k2-color second axis: (a-1)*k2 + b.
inline Color pair_color(Color a, Color b, std::size_t k2) {
  return static_cast<Color>((a - 1) * k2 + b);
}

/// Cell (x, y) holds pair_color(s1[x], s2[y]). Without an explicit mode the
/// grid is cyclic exactly when both factors are.
ColorGrid2D product_grid(const ColorSequence& s1, const ColorSequence& s2,
                         std::optional<GridMode> mode = std::nullopt);

Multiset block_multiset(const ColorGrid2D& g, std::size_t x0, std::size_t y0,
                        std::size_t m, std::size_t n);

/// Tag points in row-major order: the (m, n) coding area for plain grids,
/// every cell for cyclic ones.
std::vector<Point> coding_area(const ColorGrid2D& g, std::size_t m,
                               std::size_t n);

struct GridReport {
  bool ok = true;
  std::size_t blocks = 0;
  /// Smallest colliding pair in row-major order.
  std::optional<std::pair<Point, Point>> collision;
};

GridReport check_grid_distinguishable(const ColorGrid2D& g, std::size_t m,
                                      std::size_t n);

/// A block as its colors in ascending order (the multiset's elements).
using BlockKey = std::vector<Color>;

struct BlockKeyHash {
  std::size_t operator()(const BlockKey& key) const noexcept;
};

BlockKey block_key(const ColorGrid2D& g, std::size_t x0, std::size_t y0,
                   std::size_t m, std::size_t n);

struct CodebookEntry {
  BlockKey elements;
  Point point;

  /// Count-vector key over a k-color palette, as in Multiset::key().
  std::string key(std::size_t palette_size) const;
};

class Codebook {
 public:
  std::size_t m() const noexcept { return m_; }
  std::size_t n() const noexcept { return n_; }
  std::size_t palette_size() const noexcept { return palette_; }
  GridMode mode() const noexcept { return mode_; }
  std::size_t size() const noexcept { return entries_.size(); }
  /// Row-major by tag point.
  const std::vector<CodebookEntry>& entries() const noexcept {
    return entries_;
  }

  std::optional<Point> find(const BlockKey& elements) const;

  /// Throws on a duplicate key, naming both points.
  static Codebook from_entries(std::size_t m, std::size_t n,
                               std::size_t palette_size, GridMode mode,
                               std::vector<CodebookEntry> entries);

 private:
  std::size_t m_ = 0, n_ = 0, palette_ = 0;
  GridMode mode_ = GridMode::plain;
  std::vector<CodebookEntry> entries_;
  std::unordered_map<BlockKey, std::size_t, BlockKeyHash> index_;
};

Codebook build_codebook(const ColorGrid2D& g, std::size_t m, std::size_t n);

class DecodeError : public Error {
 public:
  enum class Kind { malformed, unknown };
  DecodeError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Tag point of the block whose multiset is `s`.
Point decode(const Codebook& cb, const Multiset& s);
/// Same, from the reported colors in any order.
Point decode(const Codebook& cb, std::span<const Color> reported);

/// "# M=.. N=.. k=.. mode=.." then one comma-separated line per x.
void write_grid_csv(std::ostream& os, const ColorGrid2D& g);
ColorGrid2D read_grid_csv(std::istream& is);

/// Header line, then "key,x0,y0" and one row per entry.
void write_codebook_csv(std::ostream& os, const Codebook& cb);
Codebook read_codebook_csv(std::istream& is);

}  // namespace mcgc
