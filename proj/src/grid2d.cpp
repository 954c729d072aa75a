#include "mcgc/grid2d.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

#include "mcgc/io.hpp"

namespace mcgc {

std::string to_string(GridMode mode) {
  return mode == GridMode::cyclic ? "cyclic" : "plain";
}

GridMode parse_grid_mode(const std::string& text) {
  if (text == "plain") return GridMode::plain;
  if (text == "cyclic") return GridMode::cyclic;
  throw Error("unknown grid mode '" + text + "' (expected plain or cyclic)");
}

ColorGrid2D::ColorGrid2D(std::size_t rows, std::size_t cols,
                         std::vector<Color> cells, std::size_t palette_size,
                         GridMode mode)
    : rows_(rows),
      cols_(cols),
      cells_(std::move(cells)),
      palette_(palette_size),
      mode_(mode) {
  if (rows_ == 0 || cols_ == 0) throw Error("grid dimensions must be >= 1");
  if (cells_.size() != rows_ * cols_) {
    throw Error("grid has " + std::to_string(cells_.size()) +
                " cells, expected " + std::to_string(rows_ * cols_));
  }
  for (Color c : cells_) {
    if (c < 1 || c > palette_) {
      throw Error("grid color " + std::to_string(c) + " outside palette [1," +
                  std::to_string(palette_) + "]");
    }
  }
}

ColorGrid2D product_grid(const ColorSequence& s1, const ColorSequence& s2,
                         std::optional<GridMode> mode) {
  const auto k2 = s2.palette_size();
  std::vector<Color> cells;
  cells.reserve(s1.size() * s2.size());
  for (std::size_t x = 0; x < s1.size(); ++x) {
    for (std::size_t y = 0; y < s2.size(); ++y) {
      cells.push_back(pair_color(s1[x], s2[y], k2));
    }
  }
  const auto chosen = mode.value_or(s1.cyclic() && s2.cyclic()
                                        ? GridMode::cyclic
                                        : GridMode::plain);
  return ColorGrid2D(s1.size(), s2.size(), std::move(cells),
                     s1.palette_size() * k2, chosen);
}

namespace {

void check_block(const ColorGrid2D& g, std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw Error("block dimensions must be >= 1");
  if (m > g.rows() || n > g.cols()) {
    throw Error("block " + std::to_string(m) + "x" + std::to_string(n) +
                " larger than grid " + std::to_string(g.rows()) + "x" +
                std::to_string(g.cols()));
  }
}

std::string point_str(const Point& p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

}  // namespace

Multiset block_multiset(const ColorGrid2D& g, std::size_t x0, std::size_t y0,
                        std::size_t m, std::size_t n) {
  return Multiset::of(block_key(g, x0, y0, m, n), g.palette_size());
}

std::vector<Point> coding_area(const ColorGrid2D& g, std::size_t m,
                               std::size_t n) {
  check_block(g, m, n);
  const auto xs = g.cyclic() ? g.rows() : g.rows() - m + 1;
  const auto ys = g.cyclic() ? g.cols() : g.cols() - n + 1;
  std::vector<Point> out;
  out.reserve(xs * ys);
  for (std::size_t x = 0; x < xs; ++x) {
    for (std::size_t y = 0; y < ys; ++y) out.push_back({x, y});
  }
  return out;
}

std::size_t BlockKeyHash::operator()(const BlockKey& key) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (Color c : key) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

BlockKey block_key(const ColorGrid2D& g, std::size_t x0, std::size_t y0,
                   std::size_t m, std::size_t n) {
  check_block(g, m, n);
  if (!g.cyclic() && (x0 + m > g.rows() || y0 + n > g.cols())) {
    throw Error("point " + point_str({x0, y0}) + " outside the coding area");
  }
  if (g.cyclic() && (x0 >= g.rows() || y0 >= g.cols())) {
    throw Error("point " + point_str({x0, y0}) + " outside the grid");
  }
  BlockKey out;
  out.reserve(m * n);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out.push_back(g.at((x0 + i) % g.rows(), (y0 + j) % g.cols()));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string CodebookEntry::key(std::size_t palette_size) const {
  return Multiset::of(elements, palette_size).key();
}

GridReport check_grid_distinguishable(const ColorGrid2D& g, std::size_t m,
                                      std::size_t n) {
  const auto points = coding_area(g, m, n);
  GridReport report;
  report.blocks = points.size();
  std::unordered_map<BlockKey, std::size_t, BlockKeyHash> first;
  std::optional<std::pair<std::size_t, std::size_t>> best;
  for (std::size_t i = 0; i < points.size(); ++i) {
    auto key = block_key(g, points[i].x, points[i].y, m, n);
    const auto [it, inserted] = first.emplace(std::move(key), i);
    if (!inserted) {
      const std::pair<std::size_t, std::size_t> pair{it->second, i};
      if (!best || pair < *best) best = pair;
    }
  }
  if (best) {
    report.ok = false;
    report.collision = {points[best->first], points[best->second]};
  }
  return report;
}

std::optional<Point> Codebook::find(const BlockKey& key) const {
  const auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return entries_[it->second].point;
}

Codebook Codebook::from_entries(std::size_t m, std::size_t n,
                                std::size_t palette_size, GridMode mode,
                                std::vector<CodebookEntry> entries) {
  Codebook cb;
  cb.m_ = m;
  cb.n_ = n;
  cb.palette_ = palette_size;
  cb.mode_ = mode;
  std::sort(entries.begin(), entries.end(),
            [](const CodebookEntry& a, const CodebookEntry& b) {
              return a.point < b.point;
            });
  cb.entries_ = std::move(entries);
  for (std::size_t i = 0; i < cb.entries_.size(); ++i) {
    const auto [it, inserted] = cb.index_.emplace(cb.entries_[i].elements, i);
    if (!inserted) {
      throw Error("codebook collision: blocks at " +
                  point_str(cb.entries_[it->second].point) + " and " +
                  point_str(cb.entries_[i].point) + " share one multiset");
    }
  }
  return cb;
}

Codebook build_codebook(const ColorGrid2D& g, std::size_t m, std::size_t n) {
  std::vector<CodebookEntry> entries;
  for (const auto& p : coding_area(g, m, n)) {
    entries.push_back({block_key(g, p.x, p.y, m, n), p});
  }
  return Codebook::from_entries(m, n, g.palette_size(), g.mode(),
                                std::move(entries));
}

Point decode(const Codebook& cb, const Multiset& s) {
  if (s.palette_size() != cb.palette_size()) {
    throw DecodeError(DecodeError::Kind::malformed,
                      "multiset palette " + std::to_string(s.palette_size()) +
                          " does not match codebook palette " +
                          std::to_string(cb.palette_size()));
  }
  if (s.cardinality() != cb.m() * cb.n()) {
    throw DecodeError(DecodeError::Kind::malformed,
                      "multiset has " + std::to_string(s.cardinality()) +
                          " elements, expected " +
                          std::to_string(cb.m() * cb.n()));
  }
  const auto p = cb.find(s.elements());
  if (!p) {
    throw DecodeError(DecodeError::Kind::unknown,
                      "multiset " + s.key() + " is not a code symbol");
  }
  return *p;
}

Point decode(const Codebook& cb, std::span<const Color> reported) {
  for (Color c : reported) {
    if (c < 1 || c > cb.palette_size()) {
      throw DecodeError(DecodeError::Kind::malformed,
                        "reported color " + std::to_string(c) +
                            " outside the codebook palette");
    }
  }
  if (reported.size() != cb.m() * cb.n()) {
    return decode(cb, Multiset::of(reported, cb.palette_size()));
  }
  BlockKey key(reported.begin(), reported.end());
  std::sort(key.begin(), key.end());
  const auto p = cb.find(key);
  if (!p) return decode(cb, Multiset::of(reported, cb.palette_size()));
  return *p;
}

namespace {

std::size_t header_number(const Header& h, const std::string& key) {
  const auto it = h.find(key);
  if (it == h.end()) throw Error("missing header field '" + key + "'");
  const auto& v = it->second;
  if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos) {
    throw Error("header field '" + key + "' is not a number: " + v);
  }
  return std::stoul(v);
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string field;
  while (std::getline(in, field, ',')) {
    const auto b = field.find_first_not_of(" \t");
    const auto e = field.find_last_not_of(" \t\r");
    out.push_back(b == std::string::npos ? "" : field.substr(b, e - b + 1));
  }
  return out;
}

std::size_t parse_index(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    throw Error("invalid integer '" + text + "'");
  }
  return std::stoul(text);
}

}  // namespace

void write_grid_csv(std::ostream& os, const ColorGrid2D& g) {
  os << "# M=" << g.rows() << " N=" << g.cols() << " k=" << g.palette_size()
     << " mode=" << to_string(g.mode()) << '\n';
  for (std::size_t x = 0; x < g.rows(); ++x) {
    for (std::size_t y = 0; y < g.cols(); ++y) {
      if (y) os << ',';
      os << g.at(x, y);
    }
    os << '\n';
  }
}

ColorGrid2D read_grid_csv(std::istream& is) {
  Header header;
  std::vector<Color> cells;
  std::size_t rows = 0;
  std::string line;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (line.front() == '#') {
      parse_header_line(line, header);
      continue;
    }
    for (const auto& f : split_csv(line)) {
      cells.push_back(static_cast<Color>(parse_index(f)));
    }
    ++rows;
  }
  const auto M = header_number(header, "M");
  const auto N = header_number(header, "N");
  if (rows != M) {
    throw Error("grid file has " + std::to_string(rows) + " rows, header says " +
                std::to_string(M));
  }
  const auto mode = header.count("mode") ? parse_grid_mode(header.at("mode"))
                                         : GridMode::plain;
  return ColorGrid2D(M, N, std::move(cells), header_number(header, "k"), mode);
}

void write_codebook_csv(std::ostream& os, const Codebook& cb) {
  os << "# m=" << cb.m() << " n=" << cb.n() << " k=" << cb.palette_size()
     << " mode=" << to_string(cb.mode()) << " entries=" << cb.size() << '\n';
  os << "key,x0,y0\n";
  for (const auto& e : cb.entries()) {
    os << e.key(cb.palette_size()) << ',' << e.point.x << ',' << e.point.y << '\n';
  }
}

Codebook read_codebook_csv(std::istream& is) {
  Header header;
  std::vector<std::string> keys;
  std::vector<Point> points;
  std::string line;
  bool columns_seen = false;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (line.front() == '#') {
      parse_header_line(line, header);
      continue;
    }
    const auto fields = split_csv(line);
    if (!columns_seen && !fields.empty() && fields[0] == "key") {
      columns_seen = true;
      continue;
    }
    if (fields.size() != 3) throw Error("codebook row needs 3 fields: " + line);
    keys.push_back(fields[0]);
    points.push_back({parse_index(fields[1]), parse_index(fields[2])});
  }
  const auto k = header_number(header, "k");
  std::vector<CodebookEntry> entries;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    const auto s = Multiset::from_key(keys[i]);
    if (s.palette_size() != k) {
      throw Error("codebook key " + keys[i] + " does not match palette " +
                  std::to_string(k));
    }
    entries.push_back({s.elements(), points[i]});
  }
  const auto mode = header.count("mode") ? parse_grid_mode(header.at("mode"))
                                         : GridMode::plain;
  return Codebook::from_entries(header_number(header, "m"),
                                header_number(header, "n"), k, mode,
                                std::move(entries));
}

}  // namespace mcgc
