#include "bnscope/constructions.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "bnscope/andnet_analysis.hpp"
#include "bnscope/interaction.hpp"

namespace bnscope {

AndNet cyclic_example_andnet() {
  AndNet a(3);
  a.add_input(0, 1, Sign::Negative);
  a.add_input(0, 2, Sign::Positive);
  a.add_input(1, 2, Sign::Negative);
  a.add_input(2, 0, Sign::Negative);
  a.add_input(2, 1, Sign::Positive);
  return a;
}

BooleanNetwork cyclic_example_network() { return andnet_to_network(cyclic_example_andnet()); }

AndNet negative_seed_andnet() {
  AndNet a(4);
  for (int i = 0; i < 4; ++i) {
    a.add_input(i, (i + 3) % 4, Sign::Negative);
    a.add_input(i, (i + 2) % 4, Sign::Negative);
  }
  return a;
}

std::vector<SignedCycle> negative_seed_cycles() {
  std::vector<SignedCycle> out;
  for (auto& c : enumerate_cycles(negative_seed_andnet().graph())) {
    if (c.sign == Sign::Negative) out.push_back(std::move(c));
  }
  return out;
}

QuasiDelocalizingFn negative_seed_quasi_delocalizing() {
  auto chi = find_quasi_delocalizing(negative_seed_andnet(), negative_seed_cycles());
  if (!chi) throw std::logic_error("seed has no quasi-delocalizing function");
  return *chi;
}

std::pair<AndNet, ExpansionTrace> fixed_point_free_expansion() {
  return expand_delocalize(negative_seed_andnet(), negative_seed_quasi_delocalizing());
}

AndNet fixed_point_free_andnet() { return fixed_point_free_expansion().first; }

Digraph kernel_free_digraph() {
  return kernel_digraph(subdivide_positive_edges(fixed_point_free_andnet()));
}

StateCycle canonical_antipodal_cycle(int n) {
  check_dimension(n, true);
  StateCycle c{n, {}};
  for (int i = 0; i < n; ++i) c.states.push_back(prefix_mask(i));
  for (int i = 0; i < n; ++i) c.states.push_back(antipode(prefix_mask(i), n));
  return c;
}

BooleanNetwork pure_antipodal_network(int n) {
  if (n < 2) throw std::invalid_argument("pure antipodal network needs n >= 2");
  check_dimension(n);
  const StateCycle theta = canonical_antipodal_cycle(n);
  std::vector<Word> images(state_count(n));
  std::iota(images.begin(), images.end(), Word{0});
  for (std::size_t t = 0; t < theta.length(); ++t) {
    images[theta.states[t]] = theta.states[(t + 1) % theta.length()];
  }
  return BooleanNetwork(n, std::move(images));
}

BooleanNetwork padded_antipodal_network(int n) {
  const BooleanNetwork base = pure_antipodal_network(n);
  std::vector<Word> images = base.images();
  const StateCycle theta = canonical_antipodal_cycle(n);
  for (Word x : theta.states) {
    const IndexSet moving = base(x) ^ x;
    for (int j = 0; j < n; ++j) {
      if (test_bit(moving, j)) continue;
      const Word y = x ^ unit(j);
      images[y] = (images[y] & ~unit(j)) | (x & unit(j));
    }
  }
  return BooleanNetwork(n, std::move(images));
}

Word CyclePaddingAtlas::point(char family, int index) const {
  const int period = 2 * n;
  const auto k = static_cast<std::size_t>(((index % period) + period) % period);
  switch (family) {
    case 'a': return a[k];
    case 'b': return b[k];
    case 'c': return c[k];
    case 'd': return d[k];
    default: throw std::invalid_argument(std::string("unknown atlas family '") + family + "'");
  }
}

std::vector<Word> CyclePaddingAtlas::all_points() const {
  std::vector<Word> out;
  for (const auto* family : {&a, &b, &c, &d}) out.insert(out.end(), family->begin(), family->end());
  return out;
}

std::size_t CyclePaddingAtlas::distinct_count() const {
  const auto points = all_points();
  return std::set<Word>(points.begin(), points.end()).size();
}

StateCycle CyclePaddingAtlas::theta() const { return StateCycle{n, a}; }

CyclePaddingAtlas cycle_padding_atlas(int n) {
  if (n < 7) throw std::invalid_argument("the padding atlas needs n >= 7");
  check_dimension(n);
  CyclePaddingAtlas atlas;
  atlas.n = n;
  auto e = [n](int i) { return unit(((i % n) + n) % n); };
  for (int i = 0; i < 2 * n; ++i) {
    atlas.a.push_back(i < n ? prefix_mask(i) : antipode(prefix_mask(i - n), n));
  }
  for (int i = 0; i < 2 * n; ++i) {
    const Word ai = atlas.a[static_cast<std::size_t>(i)];
    atlas.b.push_back(ai ^ e(i + 1));
    atlas.c.push_back(ai ^ e(i + 2));
    atlas.d.push_back(ai ^ e(i + 2) ^ e(i + 3));
  }
  return atlas;
}

BooleanNetwork padded_cycle_network(int n) {
  const CyclePaddingAtlas atlas = cycle_padding_atlas(n);
  std::vector<Word> images(state_count(n));
  std::iota(images.begin(), images.end(), Word{0});
  std::vector<bool> assigned(images.size(), false);
  auto set = [&](Word x, Word y) {
    if (assigned[x]) {
      throw std::logic_error("two rules define the image of " + to_bitstring(x, n));
    }
    assigned[x] = true;
    images[x] = y;
  };
  for (int i = 0; i < 2 * n; ++i) {
    set(atlas.point('a', i), atlas.point('a', i + 1));
    set(atlas.point('b', i), atlas.point('a', i + 3));
    set(atlas.point('c', i), atlas.point('a', i + 3));
    set(atlas.point('d', i), atlas.point('a', i + 4) ^ unit((i + 1) % n));
  }
  return BooleanNetwork(n, std::move(images));
}

Word Isometry::operator()(Word x) const {
  Word y = offset;
  for (int i : indices_of(x)) y ^= unit(perm[static_cast<std::size_t>(i)]);
  return y;
}

Isometry identity_isometry(int n) {
  Isometry u{n, std::vector<int>(static_cast<std::size_t>(n)), 0};
  std::iota(u.perm.begin(), u.perm.end(), 0);
  return u;
}

Isometry compose(const Isometry& u, const Isometry& v) {
  if (u.n != v.n) throw DimensionError("composing isometries of different dimensions");
  Isometry w{u.n, std::vector<int>(static_cast<std::size_t>(u.n)), 0};
  for (int i = 0; i < u.n; ++i) {
    w.perm[static_cast<std::size_t>(i)] = u.perm[static_cast<std::size_t>(v.perm[static_cast<std::size_t>(i)])];
  }
  Isometry linear = u;
  linear.offset = 0;
  w.offset = u.offset ^ linear(v.offset);
  return w;
}

Isometry shift_isometry(int n) {
  Isometry u{n, std::vector<int>(static_cast<std::size_t>(n)), 0};
  for (int i = 0; i < n; ++i) u.perm[static_cast<std::size_t>(i)] = (i + 1) % n;
  return u;
}

Isometry twist_isometry(int n) {
  Isometry u = shift_isometry(n);
  u.offset = unit(0);
  return u;
}

std::vector<Isometry> all_isometries(int n) {
  check_dimension(n);
  std::vector<Isometry> out;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    for (std::uint64_t offset = 0; offset < state_count(n); ++offset) {
      out.push_back({n, perm, static_cast<Word>(offset)});
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

IsometryCharacterization verify_isometry_characterization(int n) {
  if (n < 0 || n > 4) throw std::invalid_argument("isometry enumeration limited to n <= 4");
  const std::uint64_t size = state_count(n);
  IsometryCharacterization report;
  report.n = n;
  std::uint64_t factorial = 1;
  for (int k = 2; k <= n; ++k) factorial *= static_cast<std::uint64_t>(k);
  report.expected = factorial * size;
  report.all_of_permutation_form = true;

  std::vector<Word> image(size);
  std::vector<bool> used(size, false);
  auto permutation_form = [&]() {
    const Word offset = image[0];
    std::vector<int> perm;
    for (int i = 0; i < n; ++i) {
      const Word moved = image[unit(i)] ^ offset;
      if (popcount(moved) != 1) return false;
      perm.push_back(std::countr_zero(moved));
    }
    const Isometry u{n, perm, offset};
    for (std::uint64_t x = 0; x < size; ++x) {
      if (u(static_cast<Word>(x)) != image[x]) return false;
    }
    return true;
  };
  std::function<void(std::uint64_t)> assign = [&](std::uint64_t x) {
    if (x == size) {
      ++report.distance_preserving_bijections;
      if (!permutation_form()) report.all_of_permutation_form = false;
      return;
    }
    for (std::uint64_t y = 0; y < size; ++y) {
      if (used[y]) continue;
      bool ok = true;
      for (std::uint64_t z = 0; z < x && ok; ++z) {
        ok = hamming(static_cast<Word>(y), image[z]) ==
             hamming(static_cast<Word>(x), static_cast<Word>(z));
      }
      if (!ok) continue;
      used[y] = true;
      image[x] = static_cast<Word>(y);
      assign(x + 1);
      used[y] = false;
    }
  };
  assign(0);
  report.passed = report.all_of_permutation_form &&
                  report.distance_preserving_bijections == report.expected;
  return report;
}

bool is_equivariant(const BooleanNetwork& f, const Isometry& u) {
  if (u.n != f.dimension()) throw DimensionError("isometry and network dimensions differ");
  for (std::uint64_t s = 0; s < f.size(); ++s) {
    const auto x = static_cast<Word>(s);
    if (f(u(x)) != u(f(x))) return false;
  }
  return true;
}

EquivarianceIsomorphism equivariance_isomorphism_check(const BooleanNetwork& f, const Isometry& u,
                                                       Word x) {
  if (u.n != f.dimension()) throw DimensionError("isometry and network dimensions differ");
  const int n = f.dimension();
  EquivarianceIsomorphism report;
  report.state = x;
  report.image = u(x);
  const SignedDigraph from = local_graph(f, x);
  const SignedDigraph to = local_graph(f, report.image);
  auto sigma = [&](int v) { return u.perm[static_cast<std::size_t>(v)]; };
  report.isomorphic = true;
  for (int j = 0; j < n && report.isomorphic; ++j) {
    for (int i = 0; i < n; ++i) {
      if (from.has_edge(j, i) != to.has_edge(sigma(j), sigma(i))) {
        report.isomorphic = false;
        break;
      }
    }
  }
  report.cycle_signs_kept = report.isomorphic;
  if (report.isomorphic) {
    const auto cycles = enumerate_cycles(from);
    report.cycles = cycles.size();
    for (const auto& c : cycles) {
      Sign mapped = Sign::Positive;
      for (const auto& e : c.edge_list()) {
        mapped = mapped * (to.has_edge(sigma(e.from), sigma(e.to), Sign::Positive) ? Sign::Positive
                                                                                  : Sign::Negative);
      }
      if (mapped != c.sign) {
        report.cycle_signs_kept = false;
        break;
      }
    }
  }
  return report;
}

std::string AtlasLabel::to_string() const {
  return std::string(1, family) + "^" + (index < 0 ? "{" + std::to_string(index) + "}" : std::to_string(index));
}

NeighborListReport verify_neighbor_lists(int n) {
  const CyclePaddingAtlas atlas = cycle_padding_atlas(n);
  NeighborListReport report;
  report.n = n;
  auto label = [n](char family, int index) {
    const int k = ((index % (2 * n)) + 2 * n) % (2 * n);
    return AtlasLabel{family, k > n ? k - 2 * n : k};
  };
  std::vector<std::pair<AtlasLabel, std::vector<AtlasLabel>>> expected = {
      {label('a', 0),
       {label('a', -1), label('a', 0), label('a', 1), label('b', -2), label('b', 0), label('c', 0)}},
      {label('b', 0), {label('a', 0), label('a', 2), label('b', 0), label('c', -1)}},
      {label('c', 0), {label('a', 0), label('b', 1), label('c', 0), label('d', 0)}},
      {label('d', 0), {label('c', 0), label('d', 0)}},
  };
  if (n == 7) {
    expected[3].second.push_back(label('d', -5));
    expected[3].second.push_back(label('d', 5));
  }
  report.passed = true;
  for (auto& [center, list] : expected) {
    NeighborList entry;
    entry.center = center;
    entry.expected = list;
    std::sort(entry.expected.begin(), entry.expected.end());
    const Word p = atlas.point(center.family, center.index);
    for (char family : {'a', 'b', 'c', 'd'}) {
      for (int i = 0; i < 2 * n; ++i) {
        if (hamming(atlas.point(family, i), p) <= 1) entry.computed.push_back(label(family, i));
      }
    }
    std::sort(entry.computed.begin(), entry.computed.end());
    entry.matches = entry.computed == entry.expected;
    report.passed = report.passed && entry.matches;
    report.lists.push_back(std::move(entry));
  }
  return report;
}

std::string to_string(PaddingPattern p) {
  switch (p) {
    case PaddingPattern::H: return "H";
    case PaddingPattern::K: return "K";
    case PaddingPattern::Both: return "both";
    case PaddingPattern::Neither: return "neither";
  }
  return "neither";
}

PaddingPattern padding_pattern_check(const BooleanNetwork& f, int i) {
  const int n = f.dimension();
  if (i < 0 || i > n - 3) {
    throw std::invalid_argument("padding pattern index must lie in [0, n-3]");
  }
  for (int j = 0; j <= i + 2; ++j) {
    if (f(prefix_mask(j)) != prefix_mask(j + 1)) {
      throw std::invalid_argument("trajectory 0, e^0, e^{0,1}, ... breaks before the pattern at " +
                                  std::to_string(i));
    }
  }
  // Moves between corners of the cube at a^i spanned by coordinates i, i+1,
  // i+2; corner "xyz" sets those three coordinates to x, y, z.
  const Word base = prefix_mask(i);
  auto corner = [&](const char* bits) {
    Word x = base;
    for (int t = 0; t < 3; ++t) {
      if (bits[t] == '1') x |= unit(i + t);
    }
    return x;
  };
  auto has_move = [&](const char* from, const char* to) {
    const Word x = corner(from);
    const Word y = corner(to);
    return popcount(x ^ y) == 1 && ((f(x) ^ x) & (x ^ y)) != 0;
  };
  auto contains = [&](std::initializer_list<std::pair<const char*, const char*>> moves) {
    return std::all_of(moves.begin(), moves.end(),
                       [&](const auto& m) { return has_move(m.first, m.second); });
  };
  const bool h = contains({{"000", "100"}, {"100", "110"}, {"110", "111"}, {"010", "110"},
                           {"101", "111"}, {"011", "111"}});
  const bool k = contains({{"000", "100"}, {"100", "110"}, {"110", "111"}, {"010", "110"},
                           {"101", "111"}, {"010", "011"}, {"001", "011"}, {"001", "101"}});
  if (h && k) return PaddingPattern::Both;
  if (h) return PaddingPattern::H;
  if (k) return PaddingPattern::K;
  return PaddingPattern::Neither;
}

}  // namespace bnscope
