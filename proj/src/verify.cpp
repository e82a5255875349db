#include "bnscope/verify.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "bnscope/andnet_analysis.hpp"
#include "bnscope/constructions.hpp"
#include "bnscope/dynamics.hpp"
#include "bnscope/interaction.hpp"
#include "bnscope/transform.hpp"

namespace bnscope {

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

void VerifyReport::add(std::string claim, bool ok, std::string detail) {
  checks.push_back({std::move(claim), ok, std::move(detail)});
}

namespace {

std::string count_text(std::size_t count, const char* what) {
  return std::to_string(count) + " " + what;
}

// Edge list of the 12-dimensional and-net as drawn: for i = 0..3 with
// i' = 5 + 2i and i'' = 4 + 2i, positive i -> i', i -> i'', i'' -> i',
// negative i' -> i+1, i'' -> i+2, and the negative chords i -> i+2.
std::set<SignedEdge> expected_expansion_edges() {
  std::set<SignedEdge> edges;
  for (int i = 0; i < 4; ++i) {
    const int ip = 5 + 2 * i;
    const int ipp = 4 + 2 * i;
    edges.insert({i, ip, Sign::Positive});
    edges.insert({i, ipp, Sign::Positive});
    edges.insert({ipp, ip, Sign::Positive});
    edges.insert({ip, (i + 1) % 4, Sign::Negative});
    edges.insert({ipp, (i + 2) % 4, Sign::Negative});
    edges.insert({i, (i + 2) % 4, Sign::Negative});
  }
  return edges;
}

SignedCycle cycle_through(const SignedDigraph& g, const std::vector<int>& vertices) {
  std::vector<Sign> signs;
  for (std::size_t t = 0; t < vertices.size(); ++t) {
    const int from = vertices[t];
    const int to = vertices[(t + 1) % vertices.size()];
    signs.push_back(g.has_edge(from, to, Sign::Positive) ? Sign::Positive : Sign::Negative);
  }
  return SignedCycle(vertices, signs);
}

bool cycle_in_graph(const SignedDigraph& g, const SignedCycle& c) {
  for (const auto& e : c.edge_list()) {
    if (!g.has_edge(e.from, e.to, e.sign)) return false;
  }
  return true;
}

}  // namespace

VerifyReport verify_fixed_point_free_construction() {
  VerifyReport r{"fixed-point-free and-net without local negative cycle", {}};
  const AndNet seed = negative_seed_andnet();
  const BooleanNetwork seed_net = andnet_to_network(seed);
  r.add("the 4-dimensional seed has no fixed point", fixed_points(seed_net).empty());

  const auto negatives = negative_seed_cycles();
  std::vector<std::vector<int>> expected_cycles;
  for (int i = 0; i < 4; ++i) {
    expected_cycles.push_back(cycle_through(seed.graph(), {i, (i + 1) % 4, (i + 2) % 4}).canonical().vertices);
  }
  std::sort(expected_cycles.begin(), expected_cycles.end());
  std::vector<std::vector<int>> found_cycles;
  for (const auto& c : negatives) found_cycles.push_back(c.vertices);
  std::sort(found_cycles.begin(), found_cycles.end());
  r.add("the seed's negative cycles are exactly (i, i+1, i+2)", found_cycles == expected_cycles,
        count_text(negatives.size(), "negative cycles"));

  const auto all_chi = all_quasi_delocalizing(seed, negatives);
  bool shape = all_chi.size() == 1;
  if (shape) {
    const auto& chi = all_chi.front();
    for (std::size_t t = 0; t < chi.size(); ++t) {
      const int i = chi.chord[t].first;
      shape = shape && chi.chord[t].second == (i + 2) % 4 && chi.step[t] == std::make_pair(i, (i + 1) % 4);
    }
  }
  r.add("exactly one quasi-delocalizing function, with chord (i, i+2) and step (i, i+1)", shape,
        count_text(all_chi.size(), "functions found"));

  const auto seed_cycles = attractive_cycles(seed_net);
  const std::vector<Word> expected_theta = {unit(3), unit(2) | unit(3), unit(2), unit(1) | unit(2),
                                            unit(1), unit(0) | unit(1), unit(0), unit(3) | unit(0)};
  bool theta_found = false;
  for (const auto& c : seed_cycles) {
    if (c.length() != expected_theta.size()) continue;
    for (std::size_t shift = 0; shift < c.length() && !theta_found; ++shift) {
      bool same = true;
      for (std::size_t t = 0; t < c.length() && same; ++t) {
        same = c.states[(t + shift) % c.length()] == expected_theta[t];
      }
      theta_found = same;
    }
  }
  r.add("the seed has the attractive cycle e^3, e^{2,3}, e^2, e^{1,2}, e^1, e^{0,1}, e^0, e^{3,0}",
        theta_found);

  const auto [g, trace] = fixed_point_free_expansion();
  const SignedDigraph gg = g.graph();
  const auto edges = gg.edges();
  r.add("the expansion has the 24 drawn edges on vertices 0..11",
        g.n == 12 && std::set<SignedEdge>(edges.begin(), edges.end()) == expected_expansion_edges(),
        count_text(edges.size(), "edges"));

  const BooleanNetwork gn = andnet_to_network(g);
  r.add("the 12-dimensional and-net has no fixed point", fixed_points(gn).empty());
  const auto local_negative = local_cycles(gn, SignFilter::Negative);
  r.add("no negative cycle is local at any of the 4096 states", local_negative.empty(),
        count_text(local_negative.size(), "local negative cycles"));

  const auto attrs = attractors(gn);
  const bool cyclic_not_attractive = std::any_of(attrs.begin(), attrs.end(), [](const Attractor& a) {
    return a.is_cyclic && !a.is_attractive_cycle;
  });
  r.add("it has a cyclic attractor that is not an attractive cycle", cyclic_not_attractive,
        count_text(attrs.size(), "attractors"));

  const SignedCycle example = cycle_through(gg, {0, 5, 1, 7, 2});
  bool triple_ok = false;
  if (cycle_in_graph(gg, example)) {
    const auto triples = delocalizing_triples(gg, example);
    const bool has_external = std::any_of(triples.begin(), triples.end(), [](const DelocalizingTriple& t) {
      return t.i == 4 && t.j == 5 && t.k == 2 && t.kind == TripleKind::External;
    });
    const bool no_internal = std::none_of(triples.begin(), triples.end(), [](const DelocalizingTriple& t) {
      return t.kind == TripleKind::Internal;
    });
    triple_ok = example.sign == Sign::Negative && has_external && no_internal;
  }
  r.add("the negative cycle (0,5,1,7,2,0) has the external triple (4,5,2) and no internal one",
        triple_ok);

  std::size_t undelocalized = 0;
  std::size_t negative_total = 0;
  for (const auto& c : enumerate_cycles(gg)) {
    if (c.sign != Sign::Negative) continue;
    ++negative_total;
    if (delocalizing_triples(gg, c).empty()) ++undelocalized;
  }
  r.add("every negative cycle of the expansion has a delocalizing triple", undelocalized == 0,
        count_text(negative_total, "negative cycles"));

  // Undo the expansion one added vertex at a time, newest first.
  BooleanNetwork current = gn;
  std::vector<int> position(static_cast<std::size_t>(g.n));
  for (int v = 0; v < g.n; ++v) position[static_cast<std::size_t>(v)] = v;
  bool reductions_ok = true;
  for (auto it = trace.vertices.rbegin(); it != trace.vertices.rend() && reductions_ok; ++it) {
    const int k = position[static_cast<std::size_t>(it->vertex)];
    if (!has_no_loop(current, k)) {
      reductions_ok = false;
      break;
    }
    current = reduce(current, k).network;
    for (auto& p : position) {
      if (p > k) --p;
    }
  }
  r.add("reducing the added vertices newest first gives back the seed",
        reductions_ok && current == seed_net);
  return r;
}

VerifyReport verify_kernel_free_digraph() {
  VerifyReport r{"kernel-free digraph whose odd cycles all have killing triples", {}};
  const AndNet subdivided = subdivide_positive_edges(fixed_point_free_andnet());
  r.add("subdividing the positive edges gives a negative and-net on 24 vertices",
        subdivided.is_negative() && subdivided.n == 24);
  const Digraph d = kernel_free_digraph();
  const auto ks = kernels(d);
  r.add("the digraph has no kernel", ks.empty(), count_text(ks.size(), "kernels"));
  r.add("the subdivided and-net has no fixed point either",
        fixed_points(andnet_to_network(subdivided)).empty());
  const auto cycles = enumerate_cycles(d);
  std::size_t odd = 0;
  std::size_t killed = 0;
  for (const auto& c : cycles) {
    if (c.size() % 2 == 0) continue;
    ++odd;
    if (!killing_triples(d, c).empty()) ++killed;
  }
  r.add("every odd cycle has a killing triple", odd > 0 && killed == odd,
        std::to_string(killed) + " of " + count_text(odd, "odd cycles"));
  return r;
}

VerifyReport verify_padded_cycle(const std::vector<int>& dimensions) {
  VerifyReport r{"attractive cycle without local negative cycle", {}};
  for (int n : dimensions) {
    const std::string at = " (n=" + std::to_string(n) + ")";
    const CyclePaddingAtlas atlas = cycle_padding_atlas(n);
    r.add("all 8n atlas points are distinct" + at,
          atlas.distinct_count() == static_cast<std::size_t>(8 * n),
          count_text(atlas.distinct_count(), "distinct points"));
    const BooleanNetwork f = padded_cycle_network(n);
    const auto cycles = attractive_cycles(f);
    const bool theta_ok = std::any_of(cycles.begin(), cycles.end(), [&](const StateCycle& c) {
      return c == StateCycle{n, atlas.a} && is_antipodal(c);
    });
    r.add("a^0, ..., a^{2n-1} is an antipodal attractive cycle of length 2n" + at, theta_ok);

    bool freedom_ok = true;
    for (int i = 0; i < 2 * n; ++i) {
      auto e = [n](int k) { return unit(((k % n) + n) % n); };
      freedom_ok = freedom_ok && freedom(f, atlas.point('b', i)) == (e(i) | e(i + 2)) &&
                   freedom(f, atlas.point('c', i)) == (e(i) | e(i + 1)) &&
                   freedom(f, atlas.point('d', i)) == e(i);
    }
    r.add("b^i moves along i, i+2; c^i along i, i+1; d^i along i" + at, freedom_ok);

    const auto negatives = local_cycles(f, SignFilter::Negative);
    r.add("no negative cycle is local at any state" + at, negatives.empty(),
          count_text(negatives.size(), "local negative cycles"));
    r.add("the network commutes with T" + at, is_equivariant(f, twist_isometry(n)));
    bool patterns = true;
    for (int i = 0; i <= n - 3; ++i) {
      const auto p = padding_pattern_check(f, i);
      patterns = patterns && (p == PaddingPattern::K || p == PaddingPattern::Both);
    }
    r.add("the asynchronous graph contains the K pattern at every position" + at, patterns);
  }
  return r;
}

VerifyReport verify_andnet_locality(int samples, std::uint64_t seed) {
  VerifyReport r{"and-net locality equals absence of delocalizing triples", {}};
  std::mt19937_64 rng(seed);
  std::size_t cycles = 0;
  std::size_t disagreements = 0;
  std::string first;
  for (int s = 0; s < samples; ++s) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const double density = 0.15 + 0.5 * static_cast<double>(rng() % 1000) / 1000.0;
    const AndNet a = random_andnet(n, rng(), density);
    const BooleanNetwork f = andnet_to_network(a);
    const SignedDigraph g = a.graph();
    for (const auto& c : enumerate_cycles(g)) {
      ++cycles;
      const bool by_triples = is_local_andnet_cycle(g, c);
      const bool by_witness = is_local_cycle(f, c).has_value();
      if (by_triples != by_witness) {
        ++disagreements;
        if (first.empty()) first = render_andnet(a) + " cycle " + c.to_string();
      }
    }
  }
  r.add("locality by delocalizing triples equals locality by witness search", disagreements == 0,
        std::to_string(samples) + " and-nets, " + count_text(cycles, "cycles") +
            (first.empty() ? "" : ", first disagreement: " + first));
  return r;
}

ReducibleSample reducible_sample(std::uint64_t seed, int max_dimension) {
  std::mt19937_64 rng(seed);
  ReducibleSample s;
  s.n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_dimension - 1));
  s.k = static_cast<int>(rng() % static_cast<std::uint64_t>(s.n));
  const bool single_moves = (rng() & 1U) != 0;
  s.images.resize(state_count(s.n));
  for (std::uint64_t x = 0; x < s.images.size(); ++x) {
    Word y;
    if (single_moves) {
      const auto choice = static_cast<int>(rng() % static_cast<std::uint64_t>(s.n + 1));
      y = static_cast<Word>(x) ^ (choice < s.n ? unit(choice) : 0);
    } else {
      y = static_cast<Word>(rng()) & full_mask(s.n);
    }
    s.images[x] = y;
  }
  // Make f_k independent of x_k by copying its value from the x_k = 0 half.
  for (std::uint64_t x = 0; x < s.images.size(); ++x) {
    if (!test_bit(static_cast<Word>(x), s.k)) continue;
    const Word low = s.images[x ^ unit(s.k)];
    s.images[x] = (s.images[x] & ~unit(s.k)) | (low & unit(s.k));
  }
  return s;
}

VerifyReport verify_reduction_dynamics(int samples, std::uint64_t seed) {
  VerifyReport r{"fixed points and attractive cycles under reduction", {}};
  std::size_t fixed_failures = 0;
  std::size_t cycle_failures = 0;
  std::size_t cycles_checked = 0;
  for (int s = 0; s < samples; ++s) {
    const ReducibleSample sample = reducible_sample(seed + static_cast<std::uint64_t>(s));
    const BooleanNetwork f(sample.n, sample.images);
    const Reduction red = reduce(f, sample.k);
    const BooleanNetwork& g = red.network;
    std::vector<Word> lifted;
    for (Word x : fixed_points(g)) lifted.push_back(lift_state(f, sample.k, x));
    std::sort(lifted.begin(), lifted.end());
    if (lifted != fixed_points(f)) ++fixed_failures;

    const auto reduced_cycles = attractive_cycles(g);
    for (const auto& c : attractive_cycles(f)) {
      ++cycles_checked;
      std::vector<Word> projected;
      for (Word x : c.states) {
        const Word p = drop_coordinate(x, sample.k);
        if (projected.empty() || projected.back() != p) projected.push_back(p);
      }
      while (projected.size() > 1 && projected.front() == projected.back()) projected.pop_back();
      std::rotate(projected.begin(), std::min_element(projected.begin(), projected.end()), projected.end());
      const bool found = std::any_of(reduced_cycles.begin(), reduced_cycles.end(),
                                     [&](const StateCycle& rc) { return rc.states == projected; });
      if (!found) ++cycle_failures;
    }
  }
  r.add("x is fixed for the reduced network iff its lift is fixed", fixed_failures == 0,
        std::to_string(samples) + " networks, " + count_text(fixed_failures, "failures"));
  r.add("projection maps attractive cycles to attractive cycles", cycle_failures == 0,
        count_text(cycles_checked, "cycles checked"));

  // f(x0, x1, x2) = (x1 + 1, x0, x0 + x1) reduced over x2.
  const BooleanNetwork example = BooleanNetwork::from_function(3, [](Word x) {
    const bool x0 = test_bit(x, 0);
    const bool x1 = test_bit(x, 1);
    return (x1 ? 0U : 1U) | (x0 ? 2U : 0U) | ((x0 != x1) ? 4U : 0U);
  });
  const BooleanNetwork expected = BooleanNetwork::from_function(2, [](Word x) {
    return (test_bit(x, 1) ? 0U : 1U) | (test_bit(x, 0) ? 2U : 0U);
  });
  const Reduction red = reduce(example, 2);
  r.add("(x1+1, x0, x0+x1) has no attractive cycle but reduces to (x1+1, x0), which has one",
        attractive_cycles(example).empty() && red.network == expected &&
            !attractive_cycles(red.network).empty());
  return r;
}

VerifyReport verify_reduction_jacobian(int samples, std::uint64_t seed) {
  VerifyReport r{"Jacobian of a reduced network", {}};
  std::size_t failures = 0;
  std::uint64_t checked = 0;
  std::string first;
  for (int s = 0; s < samples; ++s) {
    const ReducibleSample sample = reducible_sample(seed + static_cast<std::uint64_t>(s));
    const BooleanNetwork f(sample.n, sample.images);
    const auto report = check_reduction_jacobian(f, sample.k);
    checked += report.checked;
    if (!report.passed) {
      ++failures;
      if (first.empty()) first = "sample " + std::to_string(s);
    }
  }
  r.add("∂_j f'_i(x) = ∂_j f_i(x') + ∂_j f_k(x') ∂_k f_i(x' + e^j) everywhere", failures == 0,
        std::to_string(samples) + " networks, " + std::to_string(checked) + " identities" +
            (first.empty() ? "" : ", first failure: " + first));
  return r;
}

VerifyReport verify_sign_parity(int samples, std::uint64_t seed) {
  VerifyReport r{"sign of a local cycle from the degrees of freedom", {}};
  std::mt19937_64 rng(seed);
  std::size_t mismatches = 0;
  std::size_t fixed_negative = 0;
  std::uint64_t cycles = 0;
  for (int s = 0; s < samples; ++s) {
    const int n = 1 + static_cast<int>(rng() % 4);
    const BooleanNetwork f = random_network(n, rng());
    for (std::uint64_t st = 0; st < f.size(); ++st) {
      const auto x = static_cast<Word>(st);
      const bool fixed = f(x) == x;
      for (const auto& c : enumerate_cycles(local_graph(f, x))) {
        ++cycles;
        if (cycle_sign_by_parity(f, x, c) != c.sign) ++mismatches;
        if (fixed && c.sign == Sign::Negative) ++fixed_negative;
      }
    }
  }
  r.add("product of edge signs equals (-1)^|V(C) ∩ freedom(x)|", mismatches == 0,
        std::to_string(samples) + " networks, " + count_text(cycles, "local cycles"));
  r.add("no negative cycle is local at a fixed point", fixed_negative == 0);
  return r;
}

VerifyReport verify_isometries() {
  VerifyReport r{"hypercube isometries", {}};
  for (int n = 1; n <= 3; ++n) {
    const auto c = verify_isometry_characterization(n);
    r.add("every isometry of the " + std::to_string(n) + "-cube is a permutation plus translation",
          c.passed,
          std::to_string(c.distance_preserving_bijections) + " found, " + std::to_string(c.expected) +
              " expected");
  }
  const int n = 7;
  const BooleanNetwork f = padded_cycle_network(n);
  const Isometry t = twist_isometry(n);
  r.add("the padded-cycle network (n=7) commutes with T", is_equivariant(f, t));
  std::size_t bad = 0;
  for (std::uint64_t x = 0; x < f.size(); ++x) {
    const auto check = equivariance_isomorphism_check(f, t, static_cast<Word>(x));
    if (!check.isomorphic || !check.cycle_signs_kept) ++bad;
  }
  r.add("T carries every local graph onto the local graph at the image, keeping cycle signs",
        bad == 0, count_text(static_cast<std::size_t>(f.size()), "states"));
  const CyclePaddingAtlas atlas = cycle_padding_atlas(n);
  bool orbit = true;
  for (int i = 0; i < 2 * n; ++i) {
    for (char family : {'a', 'b', 'c', 'd'}) {
      orbit = orbit && t(atlas.point(family, i)) == atlas.point(family, i + 1);
    }
  }
  r.add("T sends a^i, b^i, c^i, d^i to index i+1", orbit);
  bool t_fixed = false;
  for (std::uint64_t x = 0; x < f.size(); ++x) t_fixed = t_fixed || t(static_cast<Word>(x)) == x;
  r.add("T has no fixed point", !t_fixed);
  return r;
}

VerifyReport verify_neighbor_list_claims(const std::vector<int>& dimensions) {
  VerifyReport r{"radius-1 neighbourhoods in the padding atlas", {}};
  for (int n : dimensions) {
    const auto report = verify_neighbor_lists(n);
    for (const auto& list : report.lists) {
      std::ostringstream detail;
      for (const auto& l : list.computed) detail << l.to_string() << ' ';
      r.add("n=" + std::to_string(n) + ": atlas points within distance 1 of " +
                list.center.to_string(),
            list.matches, detail.str());
    }
  }
  return r;
}

}  // namespace bnscope
