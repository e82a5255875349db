#include "bnscope/interaction.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>

#include "bnscope/dynamics.hpp"
#include "bnscope/sweep.hpp"

namespace bnscope {

JacobianMatrix jacobian(const BooleanNetwork& f, Word x) {
  const int n = f.dimension();
  JacobianMatrix m{n, std::vector<Word>(static_cast<std::size_t>(n), 0)};
  const Word fx = f(x);
  for (int j = 0; j < n; ++j) {
    const Word column = fx ^ f(x ^ unit(j));
    for (int i : indices_of(column)) m.rows[static_cast<std::size_t>(i)] |= unit(j);
  }
  return m;
}

SignedDigraph local_graph(const BooleanNetwork& f, Word x) {
  const int n = f.dimension();
  SignedDigraph g(n);
  const Word fx = f(x);
  for (int j = 0; j < n; ++j) {
    const Word column = fx ^ f(x ^ unit(j));
    for (int i : indices_of(column)) {
      g.add_edge(j, i, test_bit(x, j) == test_bit(fx, i) ? Sign::Positive : Sign::Negative);
    }
  }
  return g;
}

SignedDigraph global_graph(const BooleanNetwork& f) {
  const int n = f.dimension();
  struct Masks {
    std::vector<Word> pos;  // pos[j] bit i: positive edge (j, i)
    std::vector<Word> neg;
  };
  auto parts = sweep_ranges<Masks>(f.size(), [&](std::uint64_t begin, std::uint64_t end) {
    Masks m{std::vector<Word>(static_cast<std::size_t>(n), 0),
            std::vector<Word>(static_cast<std::size_t>(n), 0)};
    for (std::uint64_t s = begin; s < end; ++s) {
      const auto x = static_cast<Word>(s);
      const Word fx = f(x);
      for (int j = 0; j < n; ++j) {
        const Word column = fx ^ f(x ^ unit(j));
        // Positive where f_i(x) equals x_j.
        const Word agree = test_bit(x, j) ? fx : ~fx;
        m.pos[static_cast<std::size_t>(j)] |= column & agree;
        m.neg[static_cast<std::size_t>(j)] |= column & ~agree;
      }
    }
    return m;
  });
  SignedDigraph g(n);
  for (const auto& m : parts) {
    for (int j = 0; j < n; ++j) {
      for (int i : indices_of(m.pos[static_cast<std::size_t>(j)] & full_mask(n))) {
        g.add_edge(j, i, Sign::Positive);
      }
      for (int i : indices_of(m.neg[static_cast<std::size_t>(j)] & full_mask(n))) {
        g.add_edge(j, i, Sign::Negative);
      }
    }
  }
  return g;
}

bool cycle_in_local_graph(const BooleanNetwork& f, Word x, const SignedCycle& c) {
  const Word fx = f(x);
  for (const auto& e : c.edge_list()) {
    if (!test_bit(fx ^ f(x ^ unit(e.from)), e.to)) return false;
    const bool positive = test_bit(x, e.from) == test_bit(fx, e.to);
    if (positive != (e.sign == Sign::Positive)) return false;
  }
  return true;
}

namespace {

void check_cycle_vertices(const BooleanNetwork& f, const SignedCycle& c) {
  for (int v : c.vertices) {
    if (v >= f.dimension()) {
      throw std::invalid_argument("cycle vertex " + std::to_string(v) +
                                  " outside network dimension");
    }
  }
}

}  // namespace

std::optional<Word> is_local_cycle(const BooleanNetwork& f, const SignedCycle& c) {
  check_cycle_vertices(f, c);
  const SignedDigraph g = global_graph(f);
  for (const auto& e : c.edge_list()) {
    if (!g.has_edge(e.from, e.to, e.sign)) {
      throw std::invalid_argument("cycle " + c.to_string() + " is not in the global graph");
    }
  }
  for (std::uint64_t s = 0; s < f.size(); ++s) {
    if (cycle_in_local_graph(f, static_cast<Word>(s), c)) return static_cast<Word>(s);
  }
  return std::nullopt;
}

std::vector<LocalCycle> local_cycles(const BooleanNetwork& f, SignFilter filter, std::size_t cap) {
  using Key = std::pair<std::vector<int>, std::vector<Sign>>;
  using Found = std::map<Key, LocalCycle>;
  auto keep = [filter](const SignedCycle& c) {
    switch (filter) {
      case SignFilter::All: return true;
      case SignFilter::Positive: return c.sign == Sign::Positive;
      case SignFilter::Negative: return c.sign == Sign::Negative;
    }
    return true;
  };
  auto parts = sweep_ranges<Found>(f.size(), [&](std::uint64_t begin, std::uint64_t end) {
    Found found;
    for (std::uint64_t s = begin; s < end; ++s) {
      const auto x = static_cast<Word>(s);
      for (auto& c : enumerate_cycles(local_graph(f, x), cap)) {
        if (!keep(c)) continue;
        Key key{c.vertices, c.signs};
        found.try_emplace(std::move(key), LocalCycle{std::move(c), x});
      }
    }
    return found;
  });
  // Ranges are ascending, so the first range that saw a cycle has its smallest witness.
  Found merged;
  for (auto& part : parts) {
    for (auto& [key, value] : part) merged.try_emplace(key, std::move(value));
  }
  std::vector<LocalCycle> out;
  out.reserve(merged.size());
  for (auto& [key, value] : merged) out.push_back(std::move(value));
  std::sort(out.begin(), out.end(), [](const LocalCycle& a, const LocalCycle& b) {
    return canonical_less(a.cycle, b.cycle);
  });
  return out;
}

Sign cycle_sign_by_parity(const BooleanNetwork& f, Word x, const SignedCycle& c) {
  check_cycle_vertices(f, c);
  if (!cycle_in_local_graph(f, x, c)) {
    throw std::invalid_argument("cycle " + c.to_string() + " is not in the local graph at " +
                                to_bitstring(x, f.dimension()));
  }
  Word on_cycle = 0;
  for (int v : c.vertices) on_cycle |= unit(v);
  return popcount(on_cycle & freedom(f, x)) % 2 == 0 ? Sign::Positive : Sign::Negative;
}

namespace {

// Calls visit(successor) for every permutation whose pairs v -> successor[v] are edges.
void for_each_cycle_cover(const SignedDigraph& g,
                          const std::function<void(const std::vector<int>&)>& visit) {
  const int n = g.vertex_count();
  std::vector<int> successor(static_cast<std::size_t>(n), -1);
  std::function<void(int, VertexSet)> assign = [&](int v, VertexSet used) {
    if (v == n) {
      visit(successor);
      return;
    }
    VertexSet options = g.out(v) & ~used;
    while (options != 0) {
      const int w = std::countr_zero(options);
      options &= options - 1;
      successor[static_cast<std::size_t>(v)] = w;
      assign(v + 1, used | (VertexSet{1} << w));
    }
  };
  assign(0, 0);
}

}  // namespace

std::vector<Hooping> hoopings(const SignedDigraph& g, std::size_t cap) {
  std::vector<Hooping> out;
  if (g.vertex_count() == 0) return out;
  for_each_cycle_cover(g, [&](const std::vector<int>& successor) {
    // Split the permutation into cycles, smallest vertex first.
    std::vector<std::vector<int>> cycles;
    std::vector<bool> seen(successor.size(), false);
    for (int v = 0; v < static_cast<int>(successor.size()); ++v) {
      if (seen[static_cast<std::size_t>(v)]) continue;
      std::vector<int> cycle;
      for (int w = v; !seen[static_cast<std::size_t>(w)]; w = successor[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = true;
        cycle.push_back(w);
      }
      cycles.push_back(std::move(cycle));
    }
    // Expand sign choices for every step.
    std::vector<std::vector<Sign>> signs(cycles.size());
    std::function<void(std::size_t, std::size_t)> expand = [&](std::size_t c, std::size_t t) {
      if (c == cycles.size()) {
        if (out.size() >= cap) {
          throw CycleLimitExceeded("hooping enumeration exceeded the cap of " +
                                   std::to_string(cap));
        }
        Hooping h;
        for (std::size_t k = 0; k < cycles.size(); ++k) {
          h.cycles.emplace_back(cycles[k], signs[k]);
          h.sign = h.sign * h.cycles.back().sign;
        }
        std::sort(h.cycles.begin(), h.cycles.end(), canonical_less);
        out.push_back(std::move(h));
        return;
      }
      const auto& cycle = cycles[c];
      if (t == cycle.size()) {
        expand(c + 1, 0);
        return;
      }
      if (t == 0) signs[c].assign(cycle.size(), Sign::Positive);
      const int from = cycle[t];
      const int to = cycle[(t + 1) % cycle.size()];
      for (Sign s : {Sign::Negative, Sign::Positive}) {
        if (!g.has_edge(from, to, s)) continue;
        signs[c][t] = s;
        expand(c, t + 1);
      }
    };
    expand(0, 0);
  });
  return out;
}

std::uint64_t hooping_count(const SignedDigraph& g) {
  std::uint64_t total = 0;
  if (g.vertex_count() == 0) return 0;
  for_each_cycle_cover(g, [&](const std::vector<int>& successor) {
    std::uint64_t ways = 1;
    for (int v = 0; v < static_cast<int>(successor.size()); ++v) {
      const int w = successor[static_cast<std::size_t>(v)];
      ways *= (g.has_edge(v, w, Sign::Positive) ? 1U : 0U) + (g.has_edge(v, w, Sign::Negative) ? 1U : 0U);
    }
    total += ways;
  });
  return total;
}

bool gf2_invertible(const std::vector<Word>& rows_in, int n) {
  std::vector<Word> rows(rows_in.begin(), rows_in.end());
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (test_bit(rows[static_cast<std::size_t>(r)], col)) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return false;
    std::swap(rows[static_cast<std::size_t>(col)], rows[static_cast<std::size_t>(pivot)]);
    for (int r = 0; r < n; ++r) {
      if (r != col && test_bit(rows[static_cast<std::size_t>(r)], col)) {
        rows[static_cast<std::size_t>(r)] ^= rows[static_cast<std::size_t>(col)];
      }
    }
  }
  return true;
}

bool jacobian_invertible(const BooleanNetwork& f, Word x) {
  return gf2_invertible(jacobian(f, x).rows, f.dimension());
}

}  // namespace bnscope
