#include <doctest.h>

#include "bnscope/andnet_analysis.hpp"
#include "bnscope/constructions.hpp"
#include "bnscope/dynamics.hpp"
#include "bnscope/interaction.hpp"
#include "oracles.hpp"

using namespace bnscope;

TEST_CASE("the four-dimensional seed") {
  const AndNet a = negative_seed_andnet();
  CHECK(a.is_negative());
  for (int i = 0; i < 4; ++i) CHECK(a.negative[i] == (unit((i + 3) % 4) | unit((i + 2) % 4)));
  const auto f = andnet_to_network(a);
  CHECK(fixed_points(f).empty());
  const auto cycles = attractive_cycles(f);
  REQUIRE(cycles.size() == 1);
  CHECK(cycles[0].length() == 8);
  CHECK(kernels(kernel_digraph(a)).empty());
}

TEST_CASE("the twelve-dimensional and-net") {
  const AndNet g = fixed_point_free_andnet();
  CHECK(g.n == 12);
  CHECK(g.graph().edge_count() == 24);
  const auto f = andnet_to_network(g);
  CHECK(fixed_points(f).empty());
  CHECK(local_cycles(f, SignFilter::Negative).empty());
  const auto attrs = attractors(f);
  REQUIRE(attrs.size() == 1);
  CHECK(attrs[0].is_cyclic);
  CHECK_FALSE(attrs[0].is_attractive_cycle);
}

TEST_CASE("kernel-free digraph") {
  const Digraph d = kernel_free_digraph();
  CHECK(d.vertex_count() == 24);
  CHECK(kernels(d).empty());
  for (const auto& c : enumerate_cycles(d)) {
    if (c.size() % 2 == 1) CHECK_FALSE(killing_triples(d, c).empty());
  }
}

TEST_CASE("canonical antipodal cycle") {
  for (int n = 1; n <= 6; ++n) {
    const StateCycle c = canonical_antipodal_cycle(n);
    CHECK(c.length() == static_cast<std::size_t>(2 * n));
    CHECK(c.states[0] == 0);
    if (n > 1) CHECK(c.states[1] == unit(0));
    CHECK(is_antipodal(c));
  }
}

TEST_CASE("pure antipodal network") {
  for (int n = 2; n <= 6; ++n) {
    const auto f = pure_antipodal_network(n);
    const auto cycles = attractive_cycles(f);
    REQUIRE(cycles.size() == 1);
    CHECK(cycles[0] == canonical_antipodal_cycle(n));
    // Off the cycle every state is fixed.
    CHECK(fixed_points(f).size() == state_count(n) - static_cast<std::uint64_t>(2 * n));
    const bool singular_on_cycle = std::all_of(cycles[0].states.begin(), cycles[0].states.end(),
                                               [&](Word x) { return !jacobian_invertible(f, x); });
    if (n >= 3) {
      CHECK(singular_on_cycle);
      for (Word x : cycles[0].states) CHECK(hooping_count(local_graph(f, x)) % 2 == 0);
    }
    CHECK_FALSE(local_cycles(f, SignFilter::Negative).empty());
  }
}

TEST_CASE("padded antipodal network keeps its local negative cycles") {
  const auto f = padded_antipodal_network(8);
  const auto cycles = attractive_cycles(f);
  CHECK(std::find(cycles.begin(), cycles.end(), canonical_antipodal_cycle(8)) != cycles.end());
  CHECK(local_cycles(f, SignFilter::Negative).size() == 8);
  for (int i = 0; i <= 5; ++i) CHECK(padding_pattern_check(f, i) == PaddingPattern::H);
  CHECK(padding_pattern_check(pure_antipodal_network(8), 0) == PaddingPattern::Neither);
}

TEST_CASE("padding atlas") {
  CHECK_THROWS_AS(cycle_padding_atlas(6), std::invalid_argument);
  for (int n = 7; n <= 12; ++n) {
    const auto atlas = cycle_padding_atlas(n);
    CHECK(atlas.distinct_count() == static_cast<std::size_t>(8 * n));
    CHECK(atlas.all_points().size() == static_cast<std::size_t>(8 * n));
    CHECK(atlas.point('a', 0) == 0);
    CHECK(atlas.point('a', n) == full_mask(n));
    CHECK(atlas.point('a', 2 * n + 3) == atlas.point('a', 3));
    CHECK(atlas.point('a', -1) == atlas.point('a', 2 * n - 1));
    for (int i = 0; i < 2 * n; ++i) {
      const Word a = atlas.point('a', i);
      CHECK(atlas.point('b', i) == (a ^ unit((i + 1) % n)));
      CHECK(atlas.point('c', i) == (a ^ unit((i + 2) % n)));
      CHECK(atlas.point('d', i) == (a ^ unit((i + 2) % n) ^ unit((i + 3) % n)));
      CHECK(hamming(a, atlas.point('a', i + 1)) == 1);
    }
    CHECK(atlas.theta() == StateCycle{n, atlas.a});
  }
}

TEST_CASE("padded cycle network") {
  for (int n = 7; n <= 9; ++n) {
    const auto atlas = cycle_padding_atlas(n);
    const auto f = padded_cycle_network(n);
    for (int i = 0; i < 2 * n; ++i) {
      CHECK(f(atlas.point('a', i)) == atlas.point('a', i + 1));
      CHECK(f(atlas.point('b', i)) == atlas.point('a', i + 3));
      CHECK(f(atlas.point('c', i)) == atlas.point('a', i + 3));
      CHECK(f(atlas.point('d', i)) == (atlas.point('a', i + 4) ^ unit((i + 1) % n)));
    }
    const auto points = atlas.all_points();
    const std::set<Word> special(points.begin(), points.end());
    for (Word x = 0; x < state_count(n); ++x) {
      if (!special.count(x)) CHECK(f(x) == x);
    }
    CHECK(local_cycles(f, SignFilter::Negative).empty());
    const auto cycles = attractive_cycles(f);
    CHECK(std::find(cycles.begin(), cycles.end(), atlas.theta()) != cycles.end());
  }
}

TEST_CASE("isometries") {
  const int n = 4;
  const Isometry s = shift_isometry(n);
  const Isometry t = twist_isometry(n);
  CHECK(s(0b0001) == 0b0010);
  CHECK(s(0b1000) == 0b0001);
  CHECK(t(0) == 0b0001);
  CHECK(identity_isometry(n)(0b1011) == 0b1011);
  for (Word x = 0; x < 16; ++x) {
    CHECK(compose(s, t)(x) == s(t(x)));
    CHECK(compose(t, s)(x) == t(s(x)));
    for (Word y = 0; y < 16; ++y) CHECK(hamming(t(x), t(y)) == hamming(x, y));
  }
  // T has order 2n.
  Isometry power = identity_isometry(n);
  for (int k = 1; k <= 2 * n; ++k) {
    power = compose(t, power);
    CHECK((power == identity_isometry(n)) == (k == 2 * n));
  }
  CHECK(all_isometries(1).size() == 2);
  CHECK(all_isometries(3).size() == 48);
  CHECK(all_isometries(4).size() == 384);
  for (int m = 1; m <= 4; ++m) CHECK(verify_isometry_characterization(m).passed);
  CHECK(verify_isometry_characterization(4).distance_preserving_bijections == 384);
}

TEST_CASE("equivariance") {
  const auto f = padded_cycle_network(7);
  CHECK(is_equivariant(f, twist_isometry(7)));
  CHECK_FALSE(is_equivariant(f, shift_isometry(7)));
  CHECK_FALSE(is_equivariant(cyclic_example_network(), twist_isometry(3)));
  CHECK(is_equivariant(BooleanNetwork::negation(3), shift_isometry(3)));
  for (Word x : {Word{0}, Word{5}, Word{77}}) {
    const auto r = equivariance_isomorphism_check(f, twist_isometry(7), x);
    CHECK(r.image == twist_isometry(7)(x));
    CHECK(r.isomorphic);
    CHECK(r.cycle_signs_kept);
  }
}

TEST_CASE("neighbour lists") {
  for (int n = 7; n <= 11; ++n) {
    const auto r = verify_neighbor_lists(n);
    CHECK(r.passed);
    CHECK(r.lists.size() == 4);
  }
  const auto seven = verify_neighbor_lists(7);
  const auto& d0 = seven.lists[3];
  CHECK(d0.center.to_string() == "d^0");
  const std::vector<AtlasLabel> expected{{'c', 0}, {'d', -5}, {'d', 0}, {'d', 5}};
  CHECK(std::includes(d0.computed.begin(), d0.computed.end(), expected.begin(), expected.end()));
}

TEST_CASE("padding patterns") {
  const auto f = padded_cycle_network(8);
  for (int i = 0; i <= 5; ++i) CHECK(padding_pattern_check(f, i) == PaddingPattern::K);
  CHECK_THROWS_AS(padding_pattern_check(f, 6), std::invalid_argument);
  CHECK_THROWS_AS(padding_pattern_check(BooleanNetwork::identity(8), 0), std::invalid_argument);
  CHECK(to_string(PaddingPattern::Both) == "both");
}
