#include <set>

#include "doctest.h"
#include "mcgc/constructions.hpp"
#include "mcgc/cross_product.hpp"
#include "support.hpp"

using namespace mcgc;

namespace {

ColorSequence example_s() { return from_digits("113352412345"); }

ColorSequence example_t() {
  return ColorSequence({6, 6, 6, 7, 7, 7, 8, 8, 8, 9, 9, 9, 10, 10, 10,
                        6, 6, 8, 8, 10, 10, 7, 9, 6, 8, 10, 7, 7, 9, 9},
                       10);
}

}  // namespace

TEST_CASE("planning") {
  auto p = plan_cross(12, 2, 30, 3);
  CHECK(p.d == 2);
  CHECK(p.L == 30);
  CHECK(p.length() == 150);

  p = plan_cross(12, 2, 18, 3);
  CHECK(p.d == 6);
  CHECK(p.L == 6);
  CHECK(p.length() == 30);

  p = plan_cross(10, 2, 10, 2);
  CHECK(p.d == 5);
  CHECK(p.L == 5);

  std::string why;
  CHECK_FALSE(try_plan_cross(10, 3, 12, 2, &why));
  CHECK(why == "m1 does not divide M1");
  CHECK_FALSE(try_plan_cross(12, 2, 10, 3, &why));
  CHECK(why == "m2 does not divide M2");
  CHECK_FALSE(try_plan_cross(6, 2, 10, 2, &why));
  CHECK(why == "d = gcd(M1/m1, M2/m2) is less than 2");
  CHECK_FALSE(try_plan_cross(8, 2, 4, 2, &why));  // d = 2, M1/(m1 d) = 2
  CHECK(why == "gcd(d, M1/(m1*d)) != 1");
  CHECK_FALSE(try_plan_cross(4, 2, 8, 2, &why));
  CHECK(why == "gcd(d, M2/(m2*d)) != 1");
  CHECK_THROWS_WITH_AS(plan_cross(8, 2, 4, 2), doctest::Contains("gcd(d, M1/(m1*d))"), Error);
  CHECK(plan_cross(10, 5, 30, 15).L == 2);

  // Length identity against an independent gcd.
  for (std::size_t w1 = 2; w1 <= 30; ++w1) {
    for (std::size_t w2 = 2; w2 <= 30; ++w2) {
      const auto plan = try_plan_cross(2 * w1, 2, 3 * w2, 3);
      const auto d = oracle::gcd(w1, w2);
      const bool valid = d >= 2 && oracle::gcd(d, w1 / d) == 1 && oracle::gcd(d, w2 / d) == 1;
      CHECK(plan.has_value() == valid);
      if (plan) CHECK(plan->length() * d == (2 * w1 * 3 * w2) * 5 / 6);
    }
  }
}

TEST_CASE("word pairs are the residue-matched pairs") {
  const auto p = plan_cross(12, 2, 30, 3);
  const auto pairs = word_pairs(p);
  const std::set<std::pair<std::size_t, std::size_t>> got(pairs.begin(), pairs.end());
  std::set<std::pair<std::size_t, std::size_t>> expect;
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 10; ++j) {
      if (i % 2 == j % 2) expect.insert({i, j});
    }
  }
  CHECK(pairs.size() == 30);
  CHECK(got == expect);
}

TEST_CASE("cross product of the worked example") {
  const auto s = example_s();
  const auto t = example_t();
  CHECK(check_distinguishable(s, 2).ok);
  CHECK(check_distinguishable(t, 3).ok);
  const auto c = cross(s, 2, t, 3);
  CHECK(c.size() == 150);
  CHECK(c.palette_size() == 10);
  CHECK(to_seq(c) == oracle::interleave(to_seq(s), 2, to_seq(t), 3));
  CHECK(oracle::distinguishable(to_seq(c), 5, true));
  // Every window holds two colors from [5] and three from 6..10.
  for (const auto& w : oracle::windows(to_seq(c), 5, true)) {
    CHECK(std::count_if(w.begin(), w.end(), [](unsigned x) { return x <= 5; }) == 2);
  }
}

TEST_CASE("cross product errors") {
  const auto s = example_s();
  CHECK_THROWS_WITH_AS(cross(s, 2, s, 2), doctest::Contains("palette overlap"), Error);
  const auto t = example_t();
  CHECK_THROWS_AS(cross(s, 2, t, 3, plan_cross(12, 2, 18, 3)), Error);
  // A valid plan over a non-distinguishable operand fails validation.
  const ColorSequence flat(std::vector<Color>(30, 6), 10);
  CHECK_THROWS_WITH_AS(cross(s, 2, flat, 3), doctest::Contains("not distinguishable"), Error);
  CHECK(shift_palette(from_digits("112233"), 5).str() == "667788");
  CHECK(shift_palette(from_digits("112233"), 5).palette_size() == 8);
}

TEST_CASE("cross products of constructed bases") {
  const auto a = build_m3(3);
  const auto b = shift_palette(build_m2(3), 3);
  const auto c = cross(a, 3, b, 2);
  CHECK(c.size() == 15);
  CHECK(oracle::distinguishable(to_seq(c), 5, true));

  const auto d = shift_palette(build_m2(5), 3);  // 2 does not divide 15
  CHECK_THROWS_AS(cross(build_m2(3), 2, d, 2), Error);
}

TEST_CASE("window splits") {
  CHECK(split_window(2) == std::vector<std::size_t>{2});
  CHECK(split_window(4) == std::vector<std::size_t>{2, 2});
  CHECK(split_window(5) == std::vector<std::size_t>{3, 2});
  CHECK(split_window(6) == std::vector<std::size_t>{3, 3});
  CHECK(split_window(7) == std::vector<std::size_t>{3, 2, 2});
  CHECK_THROWS_AS(split_window(1), Error);
}

TEST_CASE("composition") {
  ComposeOptions pool;
  pool.use_builders = false;
  pool.pool = {{example_s(), 2, "S"}, {example_t(), 3, "T"}};
  const auto ex = compose_for_m(5, pool);
  CHECK(ex.sequence.size() == 150);
  CHECK(ex.sequence.palette_size() == 10);
  CHECK(oracle::distinguishable(to_seq(ex.sequence), 5, true));

  for (std::size_t m = 2; m <= 7; ++m) {
    CAPTURE(m);
    const auto c = compose_for_m(m);
    CHECK(c.m == m);
    CHECK(c.split == split_window(m));
    CHECK(c.plans.size() == c.split.size() - 1);
    CHECK(oracle::distinguishable(to_seq(c.sequence), m, true));
    for (const auto& p : c.plans) CHECK(p.d >= 2);
  }
  const auto five = compose_for_m(5);
  CHECK(five.sequence.palette_size() == 6);
  CHECK(five.sequence.size() == 15);

  ComposeOptions tiny;
  tiny.max_colors = 5;
  CHECK_THROWS_WITH_AS(compose_for_m(5, tiny), doctest::Contains("tried split 3+2"), Error);
}
