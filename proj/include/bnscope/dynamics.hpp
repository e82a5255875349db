#pragma once

#include <utility>
#include <vector>

#include "bnscope/network.hpp"

namespace bnscope {

/// Coordinates i with f_i(x) != x_i.
inline IndexSet freedom(const BooleanNetwork& f, Word x) { return f(x) ^ x; }

/// States x + e^i for i in freedom(f, x), ascending by word value.
std::vector<Word> async_successors(const BooleanNetwork& f, Word x);

/// Every edge of the asynchronous graph, ordered by (source, flipped coordinate).
std::vector<std::pair<Word, Word>> async_edges(const BooleanNetwork& f);
std::uint64_t async_edge_count(const BooleanNetwork& f);

/// Rebuilds f from its asynchronous graph. Throws std::invalid_argument when an
/// edge does not flip exactly one bit or appears twice.
BooleanNetwork from_async_graph(int n, const std::vector<std::pair<Word, Word>>& edges);

std::vector<Word> fixed_points(const BooleanNetwork& f);

/// A cycle of the asynchronous graph; consecutive states (cyclically) differ in one bit.
struct StateCycle {
  int n = 0;
  std::vector<Word> states;

  std::size_t length() const { return states.size(); }
  friend bool operator==(const StateCycle&, const StateCycle&) = default;
};

/// Length 2n, and the state n steps ahead is always the antipode.
bool is_antipodal(const StateCycle& c);

/// Terminal strongly connected component of the asynchronous graph.
struct Attractor {
  std::vector<Word> states;  // ascending
  bool is_fixed_point = false;
  bool is_cyclic = false;
  bool is_attractive_cycle = false;
  bool is_antipodal = false;
};

/// All attractors, ordered by their smallest state.
std::vector<Attractor> attractors(const BooleanNetwork& f);

/// Cycles made only of states with exactly one degree of freedom. Each starts
/// at its smallest state; the list is ordered by that state.
std::vector<StateCycle> attractive_cycles(const BooleanNetwork& f);

/// d(f(x), f(y)) <= d(x, y) for all x, y. Checking hypercube edges suffices:
/// along a shortest path from x to y every step moves the image by at most 1.
bool is_nonexpansive(const BooleanNetwork& f);

/// The set of states agreeing with `base` outside `free`.
struct Subcube {
  int n = 0;
  Word base = 0;
  IndexSet free = 0;

  bool contains(Word x) const { return ((x ^ base) & ~free & full_mask(n)) == 0; }
  int dimension() const { return popcount(free); }
  /// Places the bits of y (dimension() wide) on the free coordinates, ascending.
  Word embed(Word y) const;
  /// Inverse of embed on members.
  Word project(Word x) const;
};

/// The network on the free coordinates of `cube` with the others frozen at
/// the base values; coordinate t is the t-th free coordinate.
BooleanNetwork restrict_subcube(const BooleanNetwork& f, const Subcube& cube);

}  // namespace bnscope
