#pragma once

#include <optional>
#include <vector>

#include "bnscope/graph.hpp"
#include "bnscope/network.hpp"

namespace bnscope {

/// ∂_j f_i(x) = f_i(x) XOR f_i(x + e^j).
inline bool partial(const BooleanNetwork& f, int i, int j, Word x) {
  return test_bit(f(x) ^ f(x ^ unit(j)), i);
}

/// n×n bit matrix; bit j of rows[i] is ∂_j f_i(x).
struct JacobianMatrix {
  int n = 0;
  std::vector<Word> rows;

  bool entry(int i, int j) const { return test_bit(rows[static_cast<std::size_t>(i)], j); }
  friend bool operator==(const JacobianMatrix&, const JacobianMatrix&) = default;
};

JacobianMatrix jacobian(const BooleanNetwork& f, Word x);

/// Edge (j, i) iff ∂_j f_i(x) = 1, positive iff x_j = f_i(x).
SignedDigraph local_graph(const BooleanNetwork& f, Word x);

/// Union of the local graphs over all states, keeping both signs when they occur.
SignedDigraph global_graph(const BooleanNetwork& f);

/// True when every signed edge of `c` lies in the local graph at x.
bool cycle_in_local_graph(const BooleanNetwork& f, Word x, const SignedCycle& c);

/// Smallest x whose local graph contains every signed edge of `c`. Throws
/// std::invalid_argument when `c` is not a cycle of the global graph.
std::optional<Word> is_local_cycle(const BooleanNetwork& f, const SignedCycle& c);

enum class SignFilter { All, Positive, Negative };

struct LocalCycle {
  SignedCycle cycle;
  Word witness = 0;
};

/// Every signed cycle that is local, with its smallest witness, in canonical
/// cycle order. Found by sweeping all states and enumerating each local graph.
std::vector<LocalCycle> local_cycles(const BooleanNetwork& f, SignFilter filter = SignFilter::All,
                                     std::size_t cap = kDefaultCycleCap);

/// (−1)^|V(C) ∩ freedom(f, x)|. Throws std::invalid_argument when `c` is not
/// in the local graph at x.
Sign cycle_sign_by_parity(const BooleanNetwork& f, Word x, const SignedCycle& c);

/// Vertex-disjoint cycles covering every vertex.
struct Hooping {
  std::vector<SignedCycle> cycles;  // canonical rotations, sorted
  Sign sign = Sign::Positive;
};

/// All hoopings, one per choice of successor permutation and edge signs.
/// Throws CycleLimitExceeded beyond `cap`.
std::vector<Hooping> hoopings(const SignedDigraph& g, std::size_t cap = kDefaultCycleCap);

/// Number of hoopings, counted without materializing them.
std::uint64_t hooping_count(const SignedDigraph& g);

/// Invertibility over the two-element field by Gaussian elimination.
bool gf2_invertible(const std::vector<Word>& rows, int n);
bool jacobian_invertible(const BooleanNetwork& f, Word x);

}  // namespace bnscope
