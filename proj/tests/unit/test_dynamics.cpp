#include <doctest.h>

#include <random>

#include "bnscope/constructions.hpp"
#include "bnscope/dynamics.hpp"
#include "bnscope/expr.hpp"
#include "oracles.hpp"

using namespace bnscope;

TEST_CASE("three-dimensional cyclic example") {
  const BooleanNetwork f = cyclic_example_network();
  CHECK(fixed_points(f).empty());
  const auto attrs = attractors(f);
  REQUIRE(attrs.size() == 1);
  CHECK(attrs[0].states == std::vector<Word>{0, 1, 2, 3, 4, 5, 6});
  CHECK(attrs[0].is_cyclic);
  CHECK_FALSE(attrs[0].is_attractive_cycle);
  CHECK_FALSE(attrs[0].is_fixed_point);

  // The twelve drawn transitions, as bitstrings.
  const std::set<std::pair<std::string, std::string>> drawn = {
      {"100", "000"}, {"000", "010"}, {"001", "000"}, {"111", "011"}, {"111", "101"},
      {"111", "110"}, {"100", "110"}, {"110", "010"}, {"010", "011"}, {"011", "001"},
      {"001", "101"}, {"101", "100"}};
  std::set<std::pair<std::string, std::string>> edges;
  for (const auto& [x, y] : async_edges(f)) edges.insert({to_bitstring(x, 3), to_bitstring(y, 3)});
  CHECK(async_edge_count(f) == 12);
  CHECK(edges == drawn);
}

TEST_CASE("asynchronous edges flip exactly the free coordinates") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto f = random_network(4, seed);
    std::size_t total = 0;
    for (Word x = 0; x < 16; ++x) {
      const auto succ = async_successors(f, x);
      CHECK(succ.size() == static_cast<std::size_t>(popcount(freedom(f, x))));
      for (Word y : succ) CHECK(popcount((x ^ y) & freedom(f, x)) == 1);
      total += succ.size();
    }
    CHECK(async_edge_count(f) == total);
    CHECK(from_async_graph(4, async_edges(f)) == f);
  }
  CHECK_THROWS(from_async_graph(2, {{0, 3}}));
  CHECK_THROWS(from_async_graph(2, {{0, 1}, {0, 1}}));
}

TEST_CASE("attractors match the reachability oracle") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const int n = 1 + static_cast<int>(seed % 4);
    const auto f = random_network(n, seed * 7 + 3);
    std::set<std::vector<Word>> found;
    std::size_t singletons = 0;
    for (const auto& a : attractors(f)) {
      found.insert(a.states);
      CHECK(a.is_fixed_point == (a.states.size() == 1));
      CHECK(a.is_cyclic == !a.is_fixed_point);
      if (a.is_fixed_point) ++singletons;
    }
    CHECK(found == oracle::attractor_sets(f));
    CHECK(fixed_points(f).size() == singletons);
  }
}

TEST_CASE("attractive cycles") {
  const auto f = pure_antipodal_network(3);
  const auto cycles = attractive_cycles(f);
  REQUIRE(cycles.size() == 1);
  CHECK(cycles[0].length() == 6);
  CHECK(cycles[0].states.front() == 0);
  CHECK(is_antipodal(cycles[0]));
  for (std::size_t t = 0; t < 6; ++t) {
    CHECK(hamming(cycles[0].states[t], cycles[0].states[(t + 1) % 6]) == 1);
    CHECK(popcount(freedom(f, cycles[0].states[t])) == 1);
  }
  CHECK(attractive_cycles(BooleanNetwork::identity(3)).empty());
  // A 2-cycle flipping x0 back and forth is attractive: f(x) = (!x0).
  CHECK(attractive_cycles(BooleanNetwork::negation(1)).size() == 1);
  CHECK_FALSE(is_antipodal(StateCycle{2, {0, 1}}));
}

TEST_CASE("non-expansive networks") {
  CHECK(is_nonexpansive(BooleanNetwork::identity(3)));
  CHECK(is_nonexpansive(BooleanNetwork::negation(3)));
  CHECK(is_nonexpansive(BooleanNetwork::constant(3, 5)));
  CHECK_FALSE(is_nonexpansive(parse_network("f0 = x0 ^ x1\nf1 = x0 ^ x1\n")));
  // Against the pairwise definition.
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const auto f = random_network(3, seed);
    bool pairwise = true;
    for (Word x = 0; x < 8; ++x) {
      for (Word y = 0; y < 8; ++y) pairwise = pairwise && hamming(f(x), f(y)) <= hamming(x, y);
    }
    CHECK(is_nonexpansive(f) == pairwise);
  }
}

TEST_CASE("subcube restriction induces the subgraph of the asynchronous graph") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 3);
    const auto f = random_network(n, rng());
    const Subcube cube{n, static_cast<Word>(rng()) & full_mask(n), static_cast<Word>(rng()) & full_mask(n)};
    const auto h = restrict_subcube(f, cube);
    CHECK(h.dimension() == cube.dimension());
    std::set<std::pair<Word, Word>> induced;
    for (const auto& [x, y] : async_edges(f)) {
      if (cube.contains(x) && cube.contains(y)) induced.insert({cube.project(x), cube.project(y)});
    }
    const auto edges = async_edges(h);
    CHECK(std::set<std::pair<Word, Word>>(edges.begin(), edges.end()) == induced);
    for (Word y = 0; y < state_count(cube.dimension()); ++y) {
      CHECK(cube.contains(cube.embed(y)));
      CHECK(cube.project(cube.embed(y)) == y);
    }
  }
  const auto point = restrict_subcube(BooleanNetwork::negation(2), Subcube{2, 1, 0});
  CHECK(point.dimension() == 0);
  CHECK(point.size() == 1);
}
