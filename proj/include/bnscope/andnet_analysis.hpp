#pragma once

#include <vector>

#include "bnscope/andnet.hpp"
#include "bnscope/graph.hpp"

namespace bnscope {

enum class TripleKind { Internal, External };

/// Off-cycle edges (i, j) positive and (i, k) negative into distinct cycle
/// vertices j and k. Internal when i lies on the cycle.
struct DelocalizingTriple {
  int i = 0;
  int j = 0;  // target of the positive edge
  int k = 0;  // target of the negative edge
  TripleKind kind = TripleKind::External;

  friend bool operator==(const DelocalizingTriple&, const DelocalizingTriple&) = default;
};

/// All delocalizing triples of `c` in G, ordered by (i, j, k). Throws
/// std::invalid_argument when G is not simple or `c` is not a cycle of G.
std::vector<DelocalizingTriple> delocalizing_triples(const SignedDigraph& g, const SignedCycle& c);

/// For and-nets: a cycle is local exactly when it has no delocalizing triple.
bool is_local_andnet_cycle(const SignedDigraph& g, const SignedCycle& c);

/// Largest digraph accepted by the kernel search.
inline constexpr int kKernelVertexGuard = 24;

/// All independent absorbent vertex sets, ascending as bitmasks.
std::vector<VertexSet> kernels(const Digraph& d);

/// Digraph whose kernels are the fixed points of a negative and-net: the
/// transpose of the and-net's underlying graph.
Digraph kernel_digraph(const AndNet& a);

/// Fixed points of a negative and-net read off the kernels of kernel_digraph.
/// Throws std::invalid_argument when the and-net has a positive input.
std::vector<Word> fixed_points_via_kernels(const AndNet& a);

/// w is a subdivision of (u, v): arcs u -> w -> v, w has in- and out-degree 1,
/// w differs from u and v, and u -> v is not an arc.
struct Subdivision {
  int w = 0;
  int u = 0;
  int v = 0;

  friend bool operator==(const Subdivision&, const Subdivision&) = default;
};

/// All subdivisions, ordered by w.
std::vector<Subdivision> subdivisions(const Digraph& d);

/// (u, v1, v2) with v1 != v2 on the cycle, (v1, u) subdivided by some vertex
/// not on the cycle (and no subdivision of (v1, u) on the cycle), and
/// (v2, u) an arc not used by the cycle.
struct KillingTriple {
  int u = 0;
  int v1 = 0;
  int v2 = 0;
  int w = 0;  // smallest subdivision of (v1, u)
  bool internal = false;

  friend bool operator==(const KillingTriple&, const KillingTriple&) = default;
};

/// All killing triples of the cycle (vertex sequence), ordered by (u, v1, v2).
std::vector<KillingTriple> killing_triples(const Digraph& d, const std::vector<int>& cycle);

/// Replaces every positive input j of i by a fresh vertex w with negative
/// edges (j, w) and (w, i). Fresh vertices are numbered from n upward in
/// (j, i) order. Fixed points extend uniquely: x_w = 1 - x_j.
AndNet subdivide_positive_edges(const AndNet& a);

}  // namespace bnscope
