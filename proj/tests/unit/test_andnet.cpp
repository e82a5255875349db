#include <doctest.h>

#include <random>

#include "bnscope/andnet.hpp"
#include "bnscope/andnet_analysis.hpp"
#include "bnscope/constructions.hpp"
#include "bnscope/dynamics.hpp"
#include "bnscope/expr.hpp"
#include "bnscope/interaction.hpp"
#include "oracles.hpp"

using namespace bnscope;

TEST_CASE("and-net evaluation") {
  AndNet a(3);
  a.add_input(0, 1, Sign::Negative);
  a.add_input(0, 2, Sign::Positive);
  a.add_input(1, 2, Sign::Negative);
  a.add_input(2, 0, Sign::Negative);
  a.add_input(2, 1, Sign::Positive);
  CHECK(andnet_to_network(a) == cyclic_example_network());
  CHECK(a == cyclic_example_andnet());
  CHECK_FALSE(a.is_negative());
  // No inputs: constantly 1.
  CHECK(andnet_to_network(AndNet(2)) == BooleanNetwork::constant(2, 3));
}

TEST_CASE("and-nets are determined by their global graph") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int n = 1 + static_cast<int>(seed % 6);
    const AndNet a = random_andnet(n, seed, 0.4);
    const BooleanNetwork f = andnet_to_network(a);
    CHECK(global_graph(f) == a.graph());
    CHECK(network_to_andnet(f) == a);
    CHECK(andnet_from_signed_digraph(a.graph()) == a);
    CHECK(parse_andnet(render_andnet(a)) == a);
  }
}

TEST_CASE("non-products are rejected") {
  CHECK_THROWS_AS(network_to_andnet(parse_network("f0 = x0 ^ x1\nf1 = x0\n")), NotAnAndNet);
  CHECK_THROWS_AS(network_to_andnet(parse_network("f0 = 0\n")), NotAnAndNet);
  CHECK_THROWS_AS(network_to_andnet(parse_network("f0 = x0 | x1\nf1 = 1\n")), NotAnAndNet);
  SignedDigraph g(2);
  g.add_edge(0, 1, Sign::Positive);
  g.add_edge(0, 1, Sign::Negative);
  CHECK_THROWS_AS(andnet_from_signed_digraph(g), std::invalid_argument);
}

TEST_CASE(".anet format") {
  const AndNet a = parse_andnet("# seed\nn = 3\n0: -1 +2\n1: -2\n2: -0 +1\n");
  CHECK(a == cyclic_example_andnet());
  CHECK(render_andnet(a) == "n = 3\n0: -1 +2\n1: -2\n2: -0 +1\n");
  CHECK(parse_andnet("n = 2\n0:\n1:\n") == AndNet(2));
  CHECK_THROWS_AS(parse_andnet("n = 2\n0: +1\n"), ParseError);
  CHECK_THROWS_AS(parse_andnet("n = 2\n0: +5\n1:\n"), ParseError);
  CHECK_THROWS_AS(parse_andnet("n = 2\n0: +1 -1\n1:\n"), ParseError);
  CHECK_THROWS_AS(parse_andnet("n = 2\n0: *1\n1:\n"), ParseError);
}

TEST_CASE("random and-nets are reproducible") {
  CHECK(random_andnet(5, 3, 0.5) == random_andnet(5, 3, 0.5));
  CHECK(random_andnet(5, 3, 0.0) == AndNet(5));
  const AndNet full = random_andnet(4, 3, 1.0);
  for (int i = 0; i < 4; ++i) CHECK((full.positive[i] | full.negative[i]) == 0xFU);
}

TEST_CASE("delocalizing triples") {
  // 0 -> 1 -> 2 -> 0 all negative, plus 3 -> 0 positive and 3 -> 1 negative.
  AndNet a(4);
  a.add_input(1, 0, Sign::Negative);
  a.add_input(2, 1, Sign::Negative);
  a.add_input(0, 2, Sign::Negative);
  a.add_input(0, 3, Sign::Positive);
  a.add_input(1, 3, Sign::Negative);
  const auto g = a.graph();
  const SignedCycle c({0, 1, 2}, {Sign::Negative, Sign::Negative, Sign::Negative});
  const auto triples = delocalizing_triples(g, c);
  REQUIRE(triples.size() == 1);
  CHECK(triples[0] == DelocalizingTriple{3, 0, 1, TripleKind::External});
  CHECK_FALSE(is_local_andnet_cycle(g, c));

  // An internal one: 0 has a chord 0 -> 2 that is positive while 0 -> 1 is negative.
  AndNet b(3);
  b.add_input(1, 0, Sign::Negative);
  b.add_input(2, 1, Sign::Negative);
  b.add_input(0, 2, Sign::Negative);
  b.add_input(2, 0, Sign::Positive);
  const auto h = b.graph();
  CHECK_THROWS_AS(delocalizing_triples(h, SignedCycle({0, 2}, {Sign::Negative, Sign::Negative})),
                  std::invalid_argument);
  // The cycle's own edge out of 0 does not count, so no triple exists.
  CHECK(delocalizing_triples(h, c).empty());
}

TEST_CASE("and-net locality agrees with witness search") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const AndNet a = random_andnet(n, rng(), 0.45);
    const BooleanNetwork f = andnet_to_network(a);
    for (const auto& c : enumerate_cycles(a.graph())) {
      CHECK(is_local_andnet_cycle(a.graph(), c) == is_local_cycle(f, c).has_value());
    }
  }
}

TEST_CASE("kernels match the subset oracle") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    Digraph d(n);
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (rng() % 3 == 0) d.add_edge(u, v);
      }
    }
    const auto ks = kernels(d);
    CHECK(std::vector<std::uint64_t>(ks.begin(), ks.end()) == oracle::kernels(d));
  }
  // Odd directed cycles have no kernel, even ones have two.
  Digraph odd(3);
  odd.add_edge(0, 1);
  odd.add_edge(1, 2);
  odd.add_edge(2, 0);
  CHECK(kernels(odd).empty());
  Digraph even(4);
  for (int v = 0; v < 4; ++v) even.add_edge(v, (v + 1) % 4);
  CHECK(kernels(even) == std::vector<VertexSet>{0b0101, 0b1010});
  CHECK(kernels(Digraph(0)) == std::vector<VertexSet>{0});
}

TEST_CASE("kernels of the transpose are the fixed points of a negative and-net") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const int n = 1 + static_cast<int>(seed % 7);
    AndNet a = random_andnet(n, seed, 0.35);
    for (int i = 0; i < n; ++i) {
      a.negative[i] |= a.positive[i];
      a.positive[i] = 0;
    }
    CHECK(fixed_points_via_kernels(a) == fixed_points(andnet_to_network(a)));
  }
  CHECK_THROWS_AS(fixed_points_via_kernels(cyclic_example_andnet()), std::invalid_argument);
}

TEST_CASE("subdivisions") {
  // 0 -> 2 -> 1: 2 subdivides (0, 1). Adding 0 -> 1 removes it.
  Digraph d(3);
  d.add_edge(0, 2);
  d.add_edge(2, 1);
  CHECK(subdivisions(d) == std::vector<Subdivision>{{2, 0, 1}});
  d.add_edge(0, 1);
  CHECK(subdivisions(d).empty());
  Digraph e(3);
  e.add_edge(0, 2);
  e.add_edge(2, 1);
  e.add_edge(1, 2);
  // 2 now has in-degree 2, but 1 subdivides the non-arc (2, 2).
  CHECK(subdivisions(e) == std::vector<Subdivision>{{1, 2, 2}});
}

TEST_CASE("killing triples") {
  // Cycle 0 -> 1 -> 2 -> 3 -> 4 -> 0; 5 subdivides (2, 0) and 3 -> 0 is a chord.
  Digraph d(6);
  for (int v = 0; v < 5; ++v) d.add_edge(v, (v + 1) % 5);
  d.add_edge(2, 5);
  d.add_edge(5, 0);
  d.add_edge(3, 0);
  const std::vector<int> cycle{0, 1, 2, 3, 4};
  CHECK(killing_triples(d, cycle) == std::vector<KillingTriple>{{0, 2, 3, 5, true}});
  // Making (2, 0) an arc destroys the subdivision.
  d.add_edge(2, 0);
  CHECK(killing_triples(d, cycle).empty());
}

TEST_CASE("subdividing positive edges") {
  const AndNet a = cyclic_example_andnet();
  const AndNet s = subdivide_positive_edges(a);
  CHECK(s.is_negative());
  CHECK(s.n == 5);  // two positive edges: 2 -> 0 and 1 -> 2
  const auto fs = fixed_points(andnet_to_network(s));
  CHECK(fs.empty());
  // Fixed points extend uniquely.
  AndNet b(2);
  b.add_input(0, 1, Sign::Positive);
  b.add_input(1, 0, Sign::Positive);
  const auto fb = fixed_points(andnet_to_network(b));
  const auto fsb = fixed_points(andnet_to_network(subdivide_positive_edges(b)));
  std::set<Word> projected;
  for (Word x : fsb) projected.insert(x & 3U);
  CHECK(fsb.size() == fb.size());
  CHECK(projected == std::set<Word>(fb.begin(), fb.end()));
}
