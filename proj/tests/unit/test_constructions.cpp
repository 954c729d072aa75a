#include <map>

#include "doctest.h"
#include "mcgc/bounds.hpp"
#include "mcgc/constructions.hpp"
#include "support.hpp"

using namespace mcgc;

namespace {

const char* kEq8 = "111222333";
const char* kEq9 = "111222333116631552245353244336214146262514365554446665";

// Edge multiset of a closed walk, as sorted vertex pairs.
std::map<std::pair<Color, Color>, int> walk_edges(const std::vector<Color>& walk) {
  std::map<std::pair<Color, Color>, int> out;
  for (std::size_t i = 0; i < walk.size(); ++i) {
    auto a = walk[i], b = walk[(i + 1) % walk.size()];
    if (a > b) std::swap(a, b);
    ++out[{a, b}];
  }
  return out;
}

std::map<std::pair<Color, Color>, int> graph_edges(const Multigraph& g) {
  std::map<std::pair<Color, Color>, int> out;
  for (auto [a, b] : g.edges()) {
    if (a > b) std::swap(a, b);
    ++out[{a, b}];
  }
  return out;
}

Multigraph k6_minus_factor() {
  auto g = Multigraph::complete(6);
  g.remove_edge(1, 2);
  g.remove_edge(3, 4);
  g.remove_edge(5, 6);
  return g;
}

std::string digits_of(const std::vector<Color>& v) {
  std::string s;
  for (auto c : v) s += static_cast<char>('0' + c);
  return s;
}

}  // namespace

TEST_CASE("eulerian circuit of the complete graph on five vertices") {
  const auto g = Multigraph::complete(5);
  const auto walk = eulerian_circuit(g, 1);
  CHECK(digits_of(walk) == "1231425345");
  CHECK(walk_edges(walk) == graph_edges(g));
  // The figure's circuit is another valid choice.
  const std::vector<Color> figure{1, 2, 3, 4, 5, 1, 3, 5, 2, 4};
  CHECK(walk_edges(figure) == graph_edges(g));
}

TEST_CASE("eulerian circuit of K6 minus a 1-factor covers every edge once") {
  const auto g = k6_minus_factor();
  const auto walk = eulerian_circuit(g, 1);
  CHECK(walk.size() == 12);
  CHECK(walk.front() == 1);
  CHECK(walk_edges(walk) == graph_edges(g));
  // The figure's circuit is also a valid Eulerian circuit of this graph.
  const std::vector<Color> figure{1, 3, 2, 4, 5, 1, 6, 2, 5, 3, 6, 4};
  CHECK(walk_edges(figure) == graph_edges(g));
}

TEST_CASE("eulerian circuit edge cases") {
  Multigraph loop(1);
  loop.add_edge(1, 1);
  CHECK(eulerian_circuit(loop, 1) == std::vector<Color>{1});

  CHECK_THROWS_AS(eulerian_circuit(Multigraph::complete(4), 1), Error);  // odd degrees
  Multigraph split(6);
  for (auto [a, b] : {std::pair{1, 2}, {2, 3}, {3, 1}, {4, 5}, {5, 6}, {6, 4}}) {
    split.add_edge(a, b);
  }
  CHECK_THROWS_AS(eulerian_circuit(split, 1), Error);  // disconnected
  CHECK_THROWS_AS(eulerian_circuit(Multigraph(3), 1), Error);  // no edges
}

TEST_CASE("repeating first occurrences") {
  const std::vector<Color> walk{1, 3, 2, 4, 5, 1, 6, 2, 5, 3, 6, 4};
  CHECK(digits_of(repeat_first_occurrences(walk)) == "113322445516625364");
}

TEST_CASE("build_m1") {
  CHECK(build_m1(3).str() == "123");
  CHECK(build_m1(1).str() == "1");
  const auto s = build_m1(9);
  CHECK(s.str() == "123456789");
  CHECK(check_distinguishable(s, 1).ok);
  CHECK_THROWS_AS(build_m1(0), Error);
}

TEST_CASE("build_m2 lengths and coverage") {
  CHECK(build_m2(4).str() == "11332244");
  CHECK(build_m2(6).size() == 18);
  for (unsigned k = 3; k <= 21; ++k) {
    const auto s = build_m2(k);
    const auto raw = to_seq(s);
    CAPTURE(k);
    CHECK(s.cyclic());
    CHECK(oracle::distinguishable(raw, 2, true));
    const auto all = oracle::all_multisets(k, 2);
    auto seen = oracle::windows(raw, 2, true);
    std::sort(seen.begin(), seen.end());
    if (k % 2) {
      CHECK(s.size() == oracle::binom(k + 1, 2));
      CHECK(seen == all);
    } else {
      CHECK(s.size() == oracle::binom(k + 1, 2) - k / 2);
      // Exactly the pairs of the removed 1-factor are missing.
      std::vector<oracle::Seq> expect;
      for (const auto& w : all) {
        if (!(w[0] % 2 == 1 && w[1] == w[0] + 1)) expect.push_back(w);
      }
      CHECK(seen == expect);
    }
  }
  CHECK_THROWS_AS(build_m2(2), Error);
  CHECK_THROWS_AS(build_m2(1), Error);
}

TEST_CASE("build_m3 base cases") {
  CHECK(build_m3(3).str() == kEq8);
  CHECK(build_m3(6).str() == kEq9);
  const auto pair = build_m3_pair(6);
  CHECK(pair.s_part.str() == kEq8);
  CHECK(pair.t_part.size() == 45);
  CHECK(pair.joined().str() == kEq9);
  CHECK_THROWS_AS(build_m3(4), Error);
  CHECK_THROWS_AS(build_m3(0), Error);
}

TEST_CASE("build_m3 recursion for k = 9") {
  const auto step = build_m3_step(9);
  CHECK(step.previous.s_part.size() == 9);
  CHECK(step.previous.t_part.size() == 45);
  CHECK(step.x.size() == 45);
  CHECK(step.y.size() == 38);
  CHECK(step.z.size() == 25);
  const auto s = build_m3(9);
  CHECK(s.size() == 162);
  CHECK(s.size() == oracle::binom(11, 3) - 3);
  CHECK(oracle::distinguishable(to_seq(s), 3, true));
  const auto pair = build_m3_pair(9);
  CHECK(pair.s_part.size() == 54);
  CHECK(pair.s_part[0] == 1);
  CHECK(pair.s_part[1] == 1);
  CHECK(pair.t_part[0] == 1);
  CHECK(pair.t_part[1] == 1);
  CHECK(pair.t_part[pair.t_part.size() - 2] == 9);
  CHECK(pair.t_part[pair.t_part.size() - 1] == 8);
}

TEST_CASE("build_m3 misses exactly the consecutive triples") {
  for (unsigned k = 3; k <= 15; k += 3) {
    CAPTURE(k);
    const auto s = build_m3(k);
    const auto raw = to_seq(s);
    CHECK(s.size() == oracle::binom(k + 2, 3) - k / 3);
    CHECK(oracle::distinguishable(raw, 3, true));
    if (k > 12) continue;
    auto seen = oracle::windows(raw, 3, true);
    std::sort(seen.begin(), seen.end());
    std::vector<oracle::Seq> expect;
    for (const auto& w : oracle::all_multisets(k, 3)) {
      if (!(w[0] % 3 == 1 && w[1] == w[0] + 1 && w[2] == w[0] + 2)) expect.push_back(w);
    }
    CHECK(seen == expect);
  }
}

TEST_CASE("padding with new colors") {
  const auto a = pad_with_new_colors(build_m2(5), 2, 1);
  CHECK(a.size() == 18);
  CHECK(a.palette_size() == 6);
  CHECK_FALSE(a.cyclic());
  CHECK(oracle::distinguishable(to_seq(a), 2, false));

  const auto b = pad_with_new_colors(from_digits(kEq8), 3, 2);
  CHECK(b.size() == 17);
  CHECK(b.palette_size() == 5);
  CHECK(oracle::distinguishable(to_seq(b), 3, false));

  const auto eq8 = from_digits(kEq8);
  CHECK(pad_with_new_colors(eq8, 3, 0, 4) == t_cut(eq8, 4, 3));
  CHECK_THROWS_AS(pad_with_new_colors(from_digits("1122"), 2, 1), Error);
}

TEST_CASE("block sequence") {
  const auto b = block_sequence(3, 2);
  CHECK(b.str() == "112233");
  CHECK_FALSE(b.cyclic());
  CHECK(check_distinguishable(b, 2).ok);
}

TEST_CASE("exhaustive search on small instances") {
  auto r = brute_force_max_cyclic(2, 2, 10);
  CHECK(r.max_length == 1);
  CHECK(r.proven);

  r = brute_force_max_cyclic(2, 4, 20);
  CHECK(r.max_length == 8);
  CHECK(r.proven);
  REQUIRE(r.witness);
  CHECK(oracle::distinguishable(to_seq(*r.witness), 2, true));

  r = brute_force_max_cyclic(3, 3, 20);
  CHECK(r.max_length == 9);
  REQUIRE(r.witness);
  CHECK(oracle::canonical(to_seq(*r.witness)) == oracle::canonical(oracle::digits(kEq8)));

  r = brute_force_max_cyclic(2, 3, 20);
  CHECK(r.max_length == 6);
  CHECK(r.proven);
}

TEST_CASE("exhaustive search respects the cap and the upper bounds") {
  const auto capped = brute_force_max_cyclic(2, 4, 5);
  CHECK(capped.max_length == 5);
  CHECK_FALSE(capped.proven);
  CHECK(capped.searched_up_to == 5);

  for (std::size_t m = 1; m <= 3; ++m) {
    for (std::size_t k = 1; k <= (m == 3 ? 3u : 5u); ++k) {
      CAPTURE(m);
      CAPTURE(k);
      const auto r = brute_force_max_cyclic(m, k, 100);
      CHECK(r.proven);
      CHECK(r.max_length <= oracle::binom(k + m - 1, m));
      if ((m == 2 || m == 3) && k % m == 0) {
        CHECK(r.max_length <= oracle::binom(k + m - 1, m) - k / m);
      }
      CHECK(BigInt(r.max_length) <= upper_bound(m, k, true));
    }
  }
}

TEST_CASE("linear search finds validated sequences") {
  const auto a = search_linear(3, 4, 22, 1'000'000);
  REQUIRE(a);
  CHECK(a->size() == 22);
  CHECK(oracle::distinguishable(to_seq(*a), 3, false));
  const auto b = search_linear(2, 3, 7, 100000);
  REQUIRE(b);
  CHECK(oracle::distinguishable(to_seq(*b), 2, false));
  // Longer than the multiset count allows.
  CHECK_FALSE(search_linear(2, 2, 5, 100000));
}
