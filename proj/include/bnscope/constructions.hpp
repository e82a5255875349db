#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bnscope/andnet.hpp"
#include "bnscope/dynamics.hpp"
#include "bnscope/graph.hpp"
#include "bnscope/network.hpp"
#include "bnscope/transform.hpp"

namespace bnscope {

/// Three-dimensional and-net f0 = !x1 & x2, f1 = !x2, f2 = !x0 & x1: no fixed
/// point, one cyclic attractor on the seven states other than 111.
AndNet cyclic_example_andnet();
BooleanNetwork cyclic_example_network();

/// Four-dimensional negative and-net with N_i = {i-1, i+2} (mod 4): no fixed
/// point, an attractive cycle of length 8, negative cycles (i, i+1, i+2).
AndNet negative_seed_andnet();

/// The negative cycles of the seed and its unique quasi-delocalizing function.
std::vector<SignedCycle> negative_seed_cycles();
QuasiDelocalizingFn negative_seed_quasi_delocalizing();

/// The 12-dimensional expansion of the seed: no fixed point and no local
/// negative cycle. Vertices 4..11 are the expansion vertices.
std::pair<AndNet, ExpansionTrace> fixed_point_free_expansion();
AndNet fixed_point_free_andnet();

/// Transpose of the positive-edge subdivision of the 12-dimensional and-net:
/// kernel-free, and every odd cycle has a killing triple.
Digraph kernel_free_digraph();

/// The canonical antipodal cycle (0, e^0, e^{0,1}, ..., antipodes ...).
StateCycle canonical_antipodal_cycle(int n);

/// Moves only along the canonical antipodal cycle; everything else fixed.
BooleanNetwork pure_antipodal_network(int n);

/// The canonical antipodal cycle plus, for each cycle point x moving along
/// coordinate i and each j != i, the move x + e^j -> x.
BooleanNetwork padded_antipodal_network(int n);

/// Points a^i, b^i, c^i, d^i for i in [0, 2n): a^i = e^{0..i-1} for i < n,
/// a^{n+i} its antipode, b^i = a^i + e^{i+1}, c^i = a^i + e^{i+2},
/// d^i = a^i + e^{i+2,i+3} (coordinates mod n).
struct CyclePaddingAtlas {
  int n = 0;
  std::vector<Word> a;
  std::vector<Word> b;
  std::vector<Word> c;
  std::vector<Word> d;

  /// family is one of 'a', 'b', 'c', 'd'; index is taken mod 2n.
  Word point(char family, int index) const;
  /// All 8n points, family-major.
  std::vector<Word> all_points() const;
  /// Number of distinct points among all_points().
  std::size_t distinct_count() const;
  StateCycle theta() const;
};

/// Throws std::invalid_argument for n < 7.
CyclePaddingAtlas cycle_padding_atlas(int n);

/// f(a^i) = a^{i+1}, f(b^i) = f(c^i) = a^{i+3}, f(d^i) = a^{i+4} + e^{i+1},
/// identity elsewhere: an antipodal attractive cycle and no local negative
/// cycle. Throws std::logic_error if two rules target the same point.
BooleanNetwork padded_cycle_network(int n);

/// Hypercube isometry x -> offset + σ(x), where σ moves coordinate i to perm[i].
struct Isometry {
  int n = 0;
  std::vector<int> perm;
  Word offset = 0;

  Word operator()(Word x) const;
  friend bool operator==(const Isometry&, const Isometry&) = default;
};

Isometry identity_isometry(int n);
/// (U ∘ V)(x) = U(V(x)).
Isometry compose(const Isometry& u, const Isometry& v);
/// Coordinate rotation S: coordinate i of x becomes coordinate i+1.
Isometry shift_isometry(int n);
/// T = S followed by flipping coordinate 0; T(a^i) = a^{i+1}.
Isometry twist_isometry(int n);
/// Every (σ, offset) pair, n!·2^n of them.
std::vector<Isometry> all_isometries(int n);

struct IsometryCharacterization {
  int n = 0;
  std::uint64_t distance_preserving_bijections = 0;
  std::uint64_t expected = 0;  // n! * 2^n
  bool all_of_permutation_form = false;
  bool passed = false;
};

/// Enumerates every distance-preserving bijection of the n-cube by
/// backtracking and checks each is some (σ, offset). Requires n <= 4.
IsometryCharacterization verify_isometry_characterization(int n);

/// f ∘ U = U ∘ f everywhere.
bool is_equivariant(const BooleanNetwork& f, const Isometry& u);

struct EquivarianceIsomorphism {
  Word state = 0;
  Word image = 0;
  bool isomorphic = false;        // σ maps the underlying digraphs onto each other
  bool cycle_signs_kept = false;  // every cycle keeps its sign
  std::size_t cycles = 0;
};

/// Compares the local graph at x with the local graph at U(x) through σ.
EquivarianceIsomorphism equivariance_isomorphism_check(const BooleanNetwork& f, const Isometry& u,
                                                       Word x);

/// One atlas point named by family and index in (-n, n].
struct AtlasLabel {
  char family = 'a';
  int index = 0;

  std::string to_string() const;
  friend auto operator<=>(const AtlasLabel&, const AtlasLabel&) = default;
};

struct NeighborList {
  AtlasLabel center;
  std::vector<AtlasLabel> expected;
  std::vector<AtlasLabel> computed;
  bool matches = false;
};

struct NeighborListReport {
  int n = 0;
  std::vector<NeighborList> lists;
  bool passed = false;
};

/// Atlas points within distance 1 of a^0, b^0, c^0, d^0, by brute force, against
/// the expected lists (d^0 gains d^{-5} and d^5 when n = 7).
NeighborListReport verify_neighbor_lists(int n);

enum class PaddingPattern { H, K, Both, Neither };
std::string to_string(PaddingPattern p);

/// Which of the two padding patterns around the cube spanned by coordinates
/// i, i+1, i+2 at a^i the asynchronous graph contains. Requires
/// f(a^j) = a^{j+1} for j <= i+2 and i <= n-3; throws std::invalid_argument
/// otherwise.
PaddingPattern padding_pattern_check(const BooleanNetwork& f, int i);

}  // namespace bnscope
