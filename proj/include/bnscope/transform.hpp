#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "bnscope/andnet.hpp"
#include "bnscope/graph.hpp"
#include "bnscope/network.hpp"

namespace bnscope {

/// Raised when a coordinate cannot be eliminated because it has a loop.
class LoopError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// True when f_k does not depend on x_k.
bool has_no_loop(const BooleanNetwork& f, int k);

struct Reduction {
  BooleanNetwork network;
  int removed = 0;
  /// renumber[old] is the new index of an old coordinate, -1 for the removed one.
  std::vector<int> renumber;
};

/// Eliminates coordinate k by substituting f_k; the remaining coordinates keep
/// their order. Throws LoopError when f_k depends on x_k.
Reduction reduce(const BooleanNetwork& f, int k);

/// Inserts f_k(x with x_k = 0) at position k of a reduced state.
Word lift_state(const BooleanNetwork& f, int k, Word reduced);

/// Removes bit k and shifts higher bits down.
Word drop_coordinate(Word x, int k);

struct ReductionJacobianReport {
  bool passed = true;
  std::uint64_t checked = 0;
  /// First failing (reduced state, i, j) in the reduced numbering.
  std::optional<std::tuple<Word, int, int>> counterexample;
};

/// Checks ∂_j f'_i(x) = ∂_j f_i(x') + ∂_j f_k(x') · ∂_k f_i(x' + e^j) at every
/// reduced state x and every i, j, where x' = lift_state(f, k, x).
ReductionJacobianReport check_reduction_jacobian(const BooleanNetwork& f, int k);

/// For each cycle in `cycles`, a chord (i, k) and the cycle edge (i, j)
/// leaving the same vertex, with no chord also used as a cycle edge.
struct QuasiDelocalizingFn {
  std::vector<SignedCycle> cycles;
  std::vector<std::pair<int, int>> chord;  // χ1
  std::vector<std::pair<int, int>> step;   // χ2

  std::size_t size() const { return cycles.size(); }
  friend bool operator==(const QuasiDelocalizingFn&, const QuasiDelocalizingFn&) = default;
};

/// Edges (i, k) of G between two vertices of `c` that `c` does not use,
/// loops excluded, ascending.
std::vector<std::pair<int, int>> chords(const SignedDigraph& g, const SignedCycle& c);

/// First valid assignment in backtracking order (cycles in the given order,
/// chords ascending). Throws std::invalid_argument unless `a` is negative.
std::optional<QuasiDelocalizingFn> find_quasi_delocalizing(const AndNet& a,
                                                           const std::vector<SignedCycle>& cycles);

/// Every valid assignment, in backtracking order, up to `limit`.
std::vector<QuasiDelocalizingFn> all_quasi_delocalizing(const AndNet& a,
                                                        const std::vector<SignedCycle>& cycles,
                                                        std::size_t limit = 1000);

/// Throws std::invalid_argument naming the first violated condition.
void validate_quasi_delocalizing(const AndNet& a, const QuasiDelocalizingFn& chi);

enum class ExpansionRole { Subdivider, Bypass };  // the i′ and i″ vertices

struct ExpansionVertex {
  int vertex = 0;
  ExpansionRole role = ExpansionRole::Subdivider;
  /// Subdivider: the cycle edge (i, j) it splits. Bypass: the chord (i, k).
  std::pair<int, int> source_edge;
  /// Bypass only: the subdivider it feeds.
  int partner = -1;
};

struct ExpansionTrace {
  int original_dimension = 0;
  std::vector<ExpansionVertex> vertices;  // creation order

  std::string to_json() const;
};

/// Splits every χ2 edge (i, j) through i′ (i -> i′ positive, i′ -> j negative),
/// then adds for every χ1 chord (i, k) a vertex i″ with i -> i″ and i″ -> i′
/// positive and i″ -> k negative. With r the rank of (i, j) among the distinct
/// χ2 edges, i′ = n + 2r + 1 and i″ = n + 2r; further chords sharing one χ2
/// edge get vertices after all of those.
std::pair<AndNet, ExpansionTrace> expand_delocalize(const AndNet& a, const QuasiDelocalizingFn& chi);

/// Cycles of 𝒢(g) made of edges above those of `c`, a cycle of 𝒢(f): removing
/// the vertices added by the expansion leaves exactly the vertex sequence of
/// `c`. Throws std::invalid_argument when the trace does not fit f and g or
/// `c` is not a cycle of 𝒢(f).
std::vector<SignedCycle> cycles_above(const AndNet& g, const AndNet& f, const ExpansionTrace& trace,
                                      const SignedCycle& c, std::size_t cap = kDefaultCycleCap);

}  // namespace bnscope
