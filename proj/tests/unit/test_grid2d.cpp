#include <random>
#include <sstream>

#include "doctest.h"
#include "mcgc/bounds.hpp"
#include "mcgc/constructions.hpp"
#include "mcgc/grid2d.hpp"
#include "support.hpp"

using namespace mcgc;

namespace {

// Grid blocks compared pairwise without hashing.
bool grid_oracle(const ColorGrid2D& g, std::size_t m, std::size_t n) {
  std::vector<oracle::Seq> blocks;
  const auto xs = g.cyclic() ? g.rows() : g.rows() - m + 1;
  const auto ys = g.cyclic() ? g.cols() : g.cols() - n + 1;
  for (std::size_t x = 0; x < xs; ++x) {
    for (std::size_t y = 0; y < ys; ++y) {
      oracle::Seq b;
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) b.push_back(g.at((x + i) % g.rows(), (y + j) % g.cols()));
      }
      std::sort(b.begin(), b.end());
      blocks.push_back(b);
    }
  }
  std::sort(blocks.begin(), blocks.end());
  return std::adjacent_find(blocks.begin(), blocks.end()) == blocks.end();
}

ColorSequence base8() { return from_digits("11332244", Mode::linear); }

}  // namespace

TEST_CASE("product grid layout") {
  const auto g = product_grid(build_m1(2), build_m1(2));
  CHECK(g.rows() == 2);
  CHECK(g.cols() == 2);
  CHECK(g.palette_size() == 4);
  std::set<Color> colors(g.cells().begin(), g.cells().end());
  CHECK(colors.size() == 4);
  CHECK(g.cyclic());

  const auto s1 = from_digits("113352412345");
  const auto s2 = ColorSequence(std::vector<Color>(30, 1), 1);
  const auto h = product_grid(s1, s2);
  CHECK(h.rows() == 12);
  CHECK(h.cols() == 30);

  const auto p = product_grid(base8(), base8());
  CHECK(p.palette_size() == 16);
  CHECK_FALSE(p.cyclic());
  CHECK(p.at(2, 5) == pair_color(3, 2, 4));
  CHECK(pair_color(3, 2, 4) == 10);
}

TEST_CASE("block multisets") {
  const auto g = product_grid(base8(), base8());
  const auto one = block_multiset(g, 3, 4, 1, 1);
  CHECK(one.cardinality() == 1);
  CHECK(one.count(g.at(3, 4)) == 1);

  const ColorGrid2D uniform(3, 3, std::vector<Color>(9, 2), 2);
  CHECK(block_multiset(uniform, 0, 1, 2, 2).count(2) == 4);

  // Projection onto the first axis gives n copies of the 1D window.
  const std::size_t m = 2, n = 3;
  for (std::size_t x = 0; x + m <= 8; ++x) {
    for (std::size_t y = 0; y + n <= 8; ++y) {
      const auto b = block_multiset(g, x, y, m, n);
      std::vector<std::uint32_t> first(4, 0);
      for (Color c : b.elements()) ++first[(c - 1) / 4];
      const auto w = window_multiset(base8(), x, m);
      for (Color a = 1; a <= 4; ++a) CHECK(first[a - 1] == n * w.count(a));
    }
  }
  CHECK_THROWS_AS(block_multiset(g, 7, 0, 2, 2), Error);
  CHECK_THROWS_AS(block_multiset(g, 0, 0, 9, 1), Error);
}

TEST_CASE("grid distinguishability") {
  const auto g = product_grid(base8(), base8());
  const auto r = check_grid_distinguishable(g, 2, 2);
  CHECK(r.ok);
  CHECK(r.blocks == 49);

  const ColorGrid2D uniform(3, 3, std::vector<Color>(9, 1), 1);
  const auto u = check_grid_distinguishable(uniform, 2, 2);
  CHECK_FALSE(u.ok);
  CHECK(u.collision->first == Point{0, 0});
  CHECK(u.collision->second == Point{0, 1});

  const auto bad = product_grid(from_digits("1212", Mode::linear), base8());
  CHECK_FALSE(check_grid_distinguishable(bad, 2, 2).ok);
  CHECK_THROWS_AS(check_grid_distinguishable(g, 9, 2), Error);

  const auto cyc = product_grid(build_m2(3), build_m2(5));
  CHECK(cyc.cyclic());
  CHECK(check_grid_distinguishable(cyc, 2, 2).blocks == 90);
  CHECK(check_grid_distinguishable(cyc, 2, 2).ok);
}

TEST_CASE("product of sequences is distinguishable iff both factors are") {
  std::mt19937 rng(2024);
  int positive = 0, negative = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const bool cyclic = trial % 3 == 0;
    const auto m = 1 + rng() % 3, n = 1 + rng() % 3;
    const auto k1 = 1 + rng() % 4, k2 = 1 + rng() % 4;
    const auto len1 = m + rng() % 9, len2 = n + rng() % 9;
    const auto a = oracle::random_seq(rng, len1, static_cast<unsigned>(k1));
    const auto b = oracle::random_seq(rng, len2, static_cast<unsigned>(k2));
    const auto mode = cyclic ? Mode::cyclic : Mode::linear;
    const auto g = product_grid(make_seq(a, k1, mode), make_seq(b, k2, mode));
    const bool factors = oracle::distinguishable(a, m, cyclic) && oracle::distinguishable(b, n, cyclic);
    const bool grid = check_grid_distinguishable(g, m, n).ok;
    CHECK(grid == grid_oracle(g, m, n));
    CHECK(grid == factors);
    (factors ? positive : negative)++;
  }
  CHECK(positive >= 10);
  CHECK(negative >= 10);
}

TEST_CASE("codebooks") {
  const auto g = product_grid(base8(), base8());
  const auto cb = build_codebook(g, 2, 2);
  CHECK(cb.size() == 49);
  CHECK(BigInt(cb.size()) <= multichoose(16, 4));
  for (const auto& e : cb.entries()) {
    CHECK(decode(cb, block_multiset(g, e.point.x, e.point.y, 2, 2)) == e.point);
  }

  const auto cyc = product_grid(build_m2(3), build_m2(4));
  CHECK(build_codebook(cyc, 2, 2).size() == 6 * 8);

  const ColorGrid2D uniform(3, 3, std::vector<Color>(9, 1), 1);
  CHECK_THROWS_WITH_AS(build_codebook(uniform, 2, 2), doctest::Contains("(0,0) and (0,1)"), Error);
}

TEST_CASE("decoding") {
  const auto g = product_grid(base8(), base8());
  const auto cb = build_codebook(g, 2, 2);
  std::mt19937 rng(5);
  for (const auto& p : coding_area(g, 2, 2)) {
    std::vector<Color> reported;
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 2; ++j) reported.push_back(g.at(p.x + i, p.y + j));
    }
    for (int r = 0; r < 4; ++r) {
      std::shuffle(reported.begin(), reported.end(), rng);
      CHECK(decode(cb, std::span<const Color>(reported)) == p);
    }
  }
  try {
    decode(cb, Multiset::of(std::vector<Color>{16, 16, 16, 1}, 16));
    FAIL("expected an unknown multiset");
  } catch (const DecodeError& e) {
    CHECK(e.kind() == DecodeError::Kind::unknown);
  }
  try {
    decode(cb, Multiset::of(std::vector<Color>{1, 2, 3}, 16));
    FAIL("expected a malformed multiset");
  } catch (const DecodeError& e) {
    CHECK(e.kind() == DecodeError::Kind::malformed);
  }
  try {
    const std::vector<Color> wrong{1, 2, 3, 40};
    decode(cb, std::span<const Color>(wrong));
    FAIL("expected a malformed report");
  } catch (const DecodeError& e) {
    CHECK(e.kind() == DecodeError::Kind::malformed);
  }
}

TEST_CASE("grid and codebook files") {
  const auto g = product_grid(base8(), from_digits("1122", Mode::linear));
  std::stringstream io;
  write_grid_csv(io, g);
  CHECK(io.str().rfind("# M=8 N=4 k=8 mode=plain\n1,1,2,2\n", 0) == 0);
  CHECK(read_grid_csv(io) == g);

  const auto cb = build_codebook(g, 2, 2);
  std::stringstream cio;
  write_codebook_csv(cio, cb);
  const auto text = cio.str();
  CHECK(text.rfind("# m=2 n=2 k=8 mode=plain entries=21\nkey,x0,y0\n4-0-0-0-0-0-0-0,0,0\n", 0) == 0);
  const auto back = read_codebook_csv(cio);
  CHECK(back.size() == cb.size());
  for (const auto& e : cb.entries()) CHECK(back.find(e.elements) == e.point);

  std::stringstream bad("# M=2 N=2 k=3 mode=plain\n1,2\n");
  CHECK_THROWS_AS(read_grid_csv(bad), Error);
}
