#include <sstream>

#include "doctest.h"
#include "mcgc/io.hpp"
#include "mcgc/sequence.hpp"
#include "support.hpp"

using namespace mcgc;

TEST_CASE("color sequences validate their palette") {
  CHECK_THROWS_AS(ColorSequence({}, 3), Error);
  CHECK_THROWS_AS(ColorSequence({1, 4}, 3), Error);
  CHECK_THROWS_AS(ColorSequence({0, 1}, 3), Error);
  const ColorSequence s({1, 2, 3}, 3);
  CHECK(s.size() == 3);
  CHECK(s.cyclic());
  CHECK(s.str() == "123");
  CHECK(ColorSequence({10, 2}, 10).str() == "10 2");
  CHECK(s.rotated(1).str() == "231");
}

TEST_CASE("window counts follow the mode") {
  const auto s = from_digits("1122");
  CHECK(window_multisets(s, 2).size() == 4);
  CHECK(window_multisets(s.with_mode(Mode::linear), 2).size() == 3);
  CHECK_THROWS_AS(window_multisets(s, 5), Error);
  CHECK_THROWS_AS(window_multisets(s, 0), Error);
}

TEST_CASE("first example sequence") {
  const auto cyc = from_digits("122344511335524");
  const auto lin = cyc.with_mode(Mode::linear);
  CHECK(check_distinguishable(cyc, 2).ok);
  CHECK(check_distinguishable(lin, 2).ok);
  CHECK(check_distinguishable(lin, 3).ok);
  const auto r = check_distinguishable(cyc, 3);
  REQUIRE_FALSE(r.ok);
  CHECK(r.windows == 15);
  CHECK(r.collision == std::make_pair<std::size_t, std::size_t>(13, 14));
}

TEST_CASE("checker agrees with the pairwise oracle on random sequences") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    const auto len = 1 + rng() % 14;
    const auto k = 1 + rng() % 4;
    const auto m = 1 + rng() % len;
    const auto raw = oracle::random_seq(rng, len, static_cast<unsigned>(k));
    for (bool cyc : {false, true}) {
      const auto s = make_seq(raw, k, cyc ? Mode::cyclic : Mode::linear);
      const auto r = check_distinguishable(s, m);
      const auto expect = oracle::first_collision(raw, m, cyc);
      CHECK(r.ok == !expect.has_value());
      if (expect) CHECK(*r.collision == *expect);
    }
  }
}

TEST_CASE("t-cut") {
  const auto s = from_digits("123");
  CHECK(t_cut(s, 0, 2).str() == "2312");
  CHECK(t_cut(s, 2, 2).str() == "1231");
  CHECK(t_cut(s, 1, 3).str() == "31231");
  CHECK_FALSE(t_cut(s, 0, 2).cyclic());
  CHECK_THROWS_AS(t_cut(s, 3, 2), Error);

  // Every cut of a cyclic distinguishable sequence is linear distinguishable.
  const auto eq9 = from_digits("111222333116631552245353244336214146262514365554446665");
  for (std::size_t t = 0; t < eq9.size(); ++t) {
    const auto lin = t_cut(eq9, t, 3);
    CHECK(lin.size() == 56);
    CHECK(oracle::distinguishable(to_seq(lin), 3, false));
  }
}

TEST_CASE("multiset keys") {
  const auto s = Multiset::of(std::vector<Color>{3, 1, 3}, 4);
  CHECK(s.key() == "1-0-2-0");
  CHECK(s.cardinality() == 3);
  CHECK(Multiset::from_key("1-0-2-0") == s);
  CHECK(s.elements() == std::vector<Color>{1, 3, 3});
  CHECK_THROWS_AS(Multiset::from_key("1--2"), Error);
  CHECK_THROWS_AS(Multiset::from_key("a"), Error);
}

TEST_CASE("sequence file round trip") {
  const ColorSequence s({1, 10, 2, 2}, 12, Mode::linear);
  std::stringstream io;
  write_sequence(io, s, {{"m", "2"}});
  CHECK(io.str() == "# k=12 mode=linear m=2\n1 10 2 2\n");
  const auto f = read_sequences(io);
  CHECK(f.sequences.at(0) == s);
  CHECK(f.header.at("m") == "2");

  std::stringstream bare("3 1 2\n");
  const auto g = read_sequences(bare);
  CHECK(g.sequences.at(0).palette_size() == 3);
  CHECK(g.sequences.at(0).cyclic());

  std::stringstream bad("1 x 2\n");
  CHECK_THROWS_AS(read_sequences(bad), Error);
}
