#include "bnscope/andnet_analysis.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <tuple>

namespace bnscope {
namespace {

constexpr VertexSet bit(int v) { return VertexSet{1} << v; }

void check_cycle_in(const SignedDigraph& g, const SignedCycle& c) {
  for (const auto& e : c.edge_list()) {
    if (!g.has_edge(e.from, e.to, e.sign)) {
      throw std::invalid_argument("cycle " + c.to_string() + " is not a cycle of the graph");
    }
  }
}

}  // namespace

std::vector<DelocalizingTriple> delocalizing_triples(const SignedDigraph& g,
                                                     const SignedCycle& c) {
  if (!g.is_simple()) throw std::invalid_argument("delocalizing triples need a simple graph");
  check_cycle_in(g, c);
  const VertexSet on_cycle = c.vertex_set();
  std::vector<DelocalizingTriple> out;
  for (int i = 0; i < g.vertex_count(); ++i) {
    // An edge (i, w) belongs to the cycle only when w is i's successor on it.
    VertexSet off = on_cycle;
    if (const int next = c.successor(i); next >= 0) off &= ~bit(next);
    const VertexSet positive = g.positive_out(i) & off;
    const VertexSet negative = g.negative_out(i) & off;
    for (int j = 0; j < g.vertex_count(); ++j) {
      if ((positive & bit(j)) == 0) continue;
      for (int k = 0; k < g.vertex_count(); ++k) {
        if ((negative & bit(k)) == 0 || k == j) continue;
        out.push_back({i, j, k, c.contains_vertex(i) ? TripleKind::Internal : TripleKind::External});
      }
    }
  }
  return out;
}

bool is_local_andnet_cycle(const SignedDigraph& g, const SignedCycle& c) {
  return delocalizing_triples(g, c).empty();
}

std::vector<VertexSet> kernels(const Digraph& d) {
  const int n = d.vertex_count();
  if (n > kKernelVertexGuard) {
    throw std::invalid_argument("kernel search limited to " + std::to_string(kKernelVertexGuard) +
                                " vertices, got " + std::to_string(n));
  }
  std::vector<VertexSet> neighbors(static_cast<std::size_t>(n), 0);  // in or out
  std::vector<int> last_out(static_cast<std::size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    neighbors[v] |= d.out(v) | d.in(v);
    if (d.out(v) != 0) last_out[v] = 63 - std::countl_zero(d.out(v));
  }
  // Vertices whose out-neighbours are all decided once vertex t is decided.
  std::vector<VertexSet> settled_at(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    settled_at[static_cast<std::size_t>(std::max(last_out[v], v))] |= bit(v);
  }
  std::vector<VertexSet> out;
  // Iterative depth-first search over include/exclude decisions.
  struct Frame {
    int next;
    VertexSet kernel;
    VertexSet excluded;
    int choice;  // 0: try include, 1: try exclude, 2: done
  };
  auto absorbed = [&](int t, VertexSet kernel, VertexSet excluded) {
    VertexSet check = settled_at[static_cast<std::size_t>(t)] & excluded;
    while (check != 0) {
      const int u = std::countr_zero(check);
      check &= check - 1;
      if ((d.out(u) & kernel) == 0) return false;
    }
    return true;
  };
  if (n == 0) return {0};
  std::vector<Frame> stack{{0, 0, 0, 0}};
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.choice == 2) {
      stack.pop_back();
      continue;
    }
    const int v = top.next;
    VertexSet kernel = top.kernel;
    VertexSet excluded = top.excluded;
    if (top.choice == 0) {
      top.choice = 1;
      if (d.has_edge(v, v) || (neighbors[v] & kernel) != 0) continue;
      kernel |= bit(v);
    } else {
      top.choice = 2;
      excluded |= bit(v);
    }
    if (!absorbed(v, kernel, excluded)) continue;
    if (v + 1 == n) {
      out.push_back(kernel);
    } else {
      stack.push_back({v + 1, kernel, excluded, 0});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Digraph kernel_digraph(const AndNet& a) { return underlying(a.graph()).transpose(); }

std::vector<Word> fixed_points_via_kernels(const AndNet& a) {
  if (!a.is_negative()) throw std::invalid_argument("and-net has positive inputs");
  std::vector<Word> out;
  for (VertexSet k : kernels(kernel_digraph(a))) out.push_back(static_cast<Word>(k));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subdivision> subdivisions(const Digraph& d) {
  std::vector<Subdivision> out;
  for (int w = 0; w < d.vertex_count(); ++w) {
    const VertexSet in = d.in(w);
    const VertexSet outs = d.out(w);
    if (std::popcount(in) != 1 || std::popcount(outs) != 1) continue;
    const int u = std::countr_zero(in);
    const int v = std::countr_zero(outs);
    if (u == w || v == w || d.has_edge(u, v)) continue;
    out.push_back({w, u, v});
  }
  return out;
}

std::vector<KillingTriple> killing_triples(const Digraph& d, const std::vector<int>& cycle) {
  const std::size_t len = cycle.size();
  VertexSet on_cycle = 0;
  for (std::size_t t = 0; t < len; ++t) {
    const int from = cycle[t];
    const int to = cycle[(t + 1) % len];
    if (!d.has_edge(from, to)) throw std::invalid_argument("sequence is not a cycle of the digraph");
    on_cycle |= bit(from);
  }
  auto uses = [&](int from, int to) {
    for (std::size_t t = 0; t < len; ++t) {
      if (cycle[t] == from && cycle[(t + 1) % len] == to) return true;
    }
    return false;
  };
  const auto subs = subdivisions(d);
  std::vector<KillingTriple> out;
  for (int u = 0; u < d.vertex_count(); ++u) {
    for (int v1 : cycle) {
      int witness = -1;
      bool on = false;
      for (const auto& s : subs) {
        if (s.u != v1 || s.v != u) continue;
        if ((on_cycle & bit(s.w)) != 0) on = true;
        if (witness < 0) witness = s.w;
      }
      if (witness < 0 || on) continue;
      for (int v2 : cycle) {
        if (v2 == v1 || !d.has_edge(v2, u) || uses(v2, u)) continue;
        out.push_back({u, v1, v2, witness, (on_cycle & bit(u)) != 0});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const KillingTriple& a, const KillingTriple& b) {
    return std::tie(a.u, a.v1, a.v2) < std::tie(b.u, b.v1, b.v2);
  });
  return out;
}

AndNet subdivide_positive_edges(const AndNet& a) {
  std::vector<std::pair<int, int>> positive_edges;  // (j, i)
  for (int j = 0; j < a.n; ++j) {
    for (int i = 0; i < a.n; ++i) {
      if (test_bit(a.positive[i], j)) positive_edges.emplace_back(j, i);
    }
  }
  const int m = a.n + static_cast<int>(positive_edges.size());
  AndNet out(m);
  for (int i = 0; i < a.n; ++i) out.negative[i] = a.negative[i];
  int w = a.n;
  for (auto [j, i] : positive_edges) {
    out.add_input(w, j, Sign::Negative);
    out.add_input(i, w, Sign::Negative);
    ++w;
  }
  return out;
}

}  // namespace bnscope
