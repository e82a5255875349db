#include <doctest.h>

#include <map>
#include <random>

#include "bnscope/constructions.hpp"
#include "bnscope/dynamics.hpp"
#include "bnscope/expr.hpp"
#include "bnscope/interaction.hpp"
#include "oracles.hpp"

using namespace bnscope;

TEST_CASE("local graphs follow the definition") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 1 + static_cast<int>(seed % 5);
    const auto f = random_network(n, seed);
    for (Word x = 0; x < state_count(n); ++x) {
      const auto g = local_graph(f, x);
      CHECK(g.is_simple());
      CHECK(oracle::edges_of(g) == oracle::local_edges(f, x));
      const auto jac = jacobian(f, x);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) CHECK(jac.entry(i, j) == g.has_edge(j, i));
      }
    }
  }
}

TEST_CASE("global graph is the union of local graphs") {
  const auto f = parse_network("f0 = x0 ^ x1\nf1 = x0\n");
  const auto g = global_graph(f);
  CHECK(g.has_edge(1, 0, Sign::Positive));
  CHECK(g.has_edge(1, 0, Sign::Negative));
  CHECK(g.has_edge(0, 0, Sign::Positive));
  CHECK(g.has_edge(0, 0, Sign::Negative));
  CHECK(g.has_edge(0, 1, Sign::Positive));
  CHECK_FALSE(g.has_edge(0, 1, Sign::Negative));
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto h = random_network(3, seed);
    std::set<std::tuple<int, int, int>> all;
    for (Word x = 0; x < 8; ++x) {
      const auto e = oracle::local_edges(h, x);
      all.insert(e.begin(), e.end());
    }
    CHECK(oracle::edges_of(global_graph(h)) == all);
  }
}

TEST_CASE("local cycles match exhaustive search over states") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 1 + static_cast<int>(seed % 4);
    const auto f = random_network(n, seed * 13 + 1);
    // Oracle: cycles of each local graph, first witness wins.
    std::map<std::pair<std::vector<int>, std::vector<int>>, Word> expected;
    for (Word x = 0; x < state_count(n); ++x) {
      for (const auto& c : oracle::signed_cycles(oracle::local_edges(f, x), n)) expected.emplace(c, x);
    }
    const auto found = local_cycles(f);
    CHECK(found.size() == expected.size());
    for (const auto& lc : found) {
      std::vector<int> signs;
      for (Sign s : lc.cycle.signs) signs.push_back(to_int(s));
      const auto it = expected.find({lc.cycle.vertices, signs});
      REQUIRE(it != expected.end());
      CHECK(it->second == lc.witness);
      CHECK(is_local_cycle(f, lc.cycle) == lc.witness);
      CHECK(cycle_in_local_graph(f, lc.witness, lc.cycle));
    }
    for (const auto& lc : local_cycles(f, SignFilter::Negative)) CHECK(lc.cycle.sign == Sign::Negative);
    for (const auto& lc : local_cycles(f, SignFilter::Positive)) CHECK(lc.cycle.sign == Sign::Positive);
  }
}

TEST_CASE("is_local_cycle rejects cycles outside the global graph") {
  const auto f = BooleanNetwork::identity(2);
  const SignedCycle c({0, 1}, {Sign::Positive, Sign::Positive});
  CHECK_THROWS_AS(is_local_cycle(f, c), std::invalid_argument);
}

TEST_CASE("a cycle that is global but not local") {
  // x2 feeds 0 positively and 1 negatively, so 0 -> 1 -> 0 needs x2 = 1 and x2 = 0.
  const auto f = parse_network("f0 = x1 & x2\nf1 = x0 & !x2\nf2 = 1\n");
  const SignedCycle c({0, 1}, {Sign::Positive, Sign::Positive});
  CHECK(global_graph(f).has_edge(0, 1, Sign::Positive));
  CHECK(global_graph(f).has_edge(1, 0, Sign::Positive));
  CHECK_FALSE(is_local_cycle(f, c).has_value());
  CHECK(local_cycles(f).empty());
}

TEST_CASE("parity law for local cycle signs") {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const int n = 1 + static_cast<int>(seed % 4);
    const auto f = random_network(n, seed + 500);
    for (Word x = 0; x < state_count(n); ++x) {
      for (const auto& c : enumerate_cycles(local_graph(f, x))) {
        int parity = 0;
        for (int v : c.vertices) parity += ((f(x) ^ x) >> v) & 1U;
        const Sign expected = parity % 2 == 0 ? Sign::Positive : Sign::Negative;
        CHECK(c.sign == expected);
        CHECK(cycle_sign_by_parity(f, x, c) == expected);
      }
    }
  }
  const auto f = BooleanNetwork::identity(2);
  CHECK_THROWS_AS(cycle_sign_by_parity(f, 0, SignedCycle({0, 1}, {Sign::Positive, Sign::Positive})),
                  std::invalid_argument);
}

TEST_CASE("invertibility over the two-element field") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    std::vector<Word> rows(static_cast<std::size_t>(n));
    for (auto& r : rows) r = static_cast<Word>(rng()) & full_mask(n);
    CHECK(gf2_invertible(rows, n) == oracle::det_gf2(rows, n));
  }
  CHECK(gf2_invertible({}, 0));
}

TEST_CASE("hooping parity equals Jacobian invertibility") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 1 + static_cast<int>(seed % 4);
    const auto f = random_network(n, seed + 77);
    for (Word x = 0; x < state_count(n); ++x) {
      const auto g = local_graph(f, x);
      const auto hs = hoopings(g);
      CHECK(hs.size() == hooping_count(g));
      CHECK((hooping_count(g) % 2 == 1) == jacobian_invertible(f, x));
      for (const auto& h : hs) {
        VertexSet covered = 0;
        Sign sign = Sign::Positive;
        for (const auto& c : h.cycles) {
          CHECK((covered & c.vertex_set()) == 0);
          covered |= c.vertex_set();
          sign = sign * c.sign;
        }
        CHECK(covered == full_mask(n));
        CHECK(h.sign == sign);
      }
    }
  }
}

TEST_CASE("hoopings of small graphs") {
  SignedDigraph g(2);
  g.add_edge(0, 0, Sign::Positive);
  g.add_edge(1, 1, Sign::Negative);
  g.add_edge(0, 1, Sign::Positive);
  g.add_edge(1, 0, Sign::Positive);
  g.add_edge(1, 0, Sign::Negative);
  // Two loops, or the 2-cycle with either sign on (1, 0).
  CHECK(hooping_count(g) == 3);
  CHECK(hoopings(g).size() == 3);
  CHECK(hooping_count(SignedDigraph(0)) == 0);
}
