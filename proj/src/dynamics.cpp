#include "bnscope/dynamics.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

#include "bnscope/sweep.hpp"

namespace bnscope {

std::vector<Word> async_successors(const BooleanNetwork& f, Word x) {
  std::vector<Word> out;
  for (int i : indices_of(freedom(f, x))) out.push_back(x ^ unit(i));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::pair<Word, Word>> async_edges(const BooleanNetwork& f) {
  std::vector<std::pair<Word, Word>> out;
  for (std::uint64_t s = 0; s < f.size(); ++s) {
    const auto x = static_cast<Word>(s);
    for (int i : indices_of(freedom(f, x))) out.emplace_back(x, x ^ unit(i));
  }
  return out;
}

std::uint64_t async_edge_count(const BooleanNetwork& f) {
  std::uint64_t total = 0;
  for (std::uint64_t s = 0; s < f.size(); ++s) {
    total += static_cast<std::uint64_t>(popcount(freedom(f, static_cast<Word>(s))));
  }
  return total;
}

BooleanNetwork from_async_graph(int n, const std::vector<std::pair<Word, Word>>& edges) {
  check_dimension(n);
  std::vector<Word> images(state_count(n));
  for (std::uint64_t x = 0; x < images.size(); ++x) images[x] = static_cast<Word>(x);
  std::vector<Word> moves(state_count(n), 0);
  for (auto [from, to] : edges) {
    if (((from | to) & ~full_mask(n)) != 0) {
      throw std::invalid_argument("edge endpoint outside dimension " + std::to_string(n));
    }
    const Word flip = from ^ to;
    if (popcount(flip) != 1) {
      throw std::invalid_argument("edge " + to_bitstring(from, n) + " -> " + to_bitstring(to, n) +
                                  " does not flip exactly one coordinate");
    }
    if ((moves[from] & flip) != 0) {
      throw std::invalid_argument("duplicate edge " + to_bitstring(from, n) + " -> " +
                                  to_bitstring(to, n));
    }
    moves[from] |= flip;
    images[from] ^= flip;
  }
  return BooleanNetwork(n, std::move(images));
}

std::vector<Word> fixed_points(const BooleanNetwork& f) {
  auto parts = sweep_ranges<std::vector<Word>>(f.size(), [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<Word> found;
    for (std::uint64_t s = begin; s < end; ++s) {
      if (f(static_cast<Word>(s)) == static_cast<Word>(s)) found.push_back(static_cast<Word>(s));
    }
    return found;
  });
  std::vector<Word> out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

bool is_antipodal(const StateCycle& c) {
  const std::size_t len = c.length();
  if (len == 0 || len != static_cast<std::size_t>(2 * c.n)) return false;
  for (std::size_t t = 0; t < len; ++t) {
    if (c.states[(t + static_cast<std::size_t>(c.n)) % len] != antipode(c.states[t], c.n)) {
      return false;
    }
  }
  return true;
}

namespace {

// Orders the states of an attractive-cycle attractor along the cycle, starting
// from the smallest one.
StateCycle trace_cycle(const BooleanNetwork& f, Word start) {
  StateCycle c{f.dimension(), {}};
  Word x = start;
  do {
    c.states.push_back(x);
    x = f(x);
  } while (x != start);
  return c;
}

}  // namespace

std::vector<Attractor> attractors(const BooleanNetwork& f) {
  // Iterative Tarjan over the asynchronous graph. A component is terminal when
  // no member has a successor in another component; successors are always
  // finished first, so their component ids are known when a root pops.
  const std::uint64_t total = f.size();
  constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> index(total, kUnvisited);
  std::vector<std::uint32_t> low(total, 0);
  std::vector<std::uint32_t> component(total, kUnvisited);
  std::vector<Word> stack;
  struct Frame {
    Word state;
    IndexSet remaining;
  };
  std::vector<Frame> calls;
  std::uint32_t next_index = 0;
  std::uint32_t next_component = 0;
  std::vector<Attractor> out;

  for (std::uint64_t root = 0; root < total; ++root) {
    if (index[root] != kUnvisited) continue;
    auto enter = [&](Word x) {
      index[x] = low[x] = next_index++;
      stack.push_back(x);
      calls.push_back({x, freedom(f, x)});
    };
    enter(static_cast<Word>(root));
    while (!calls.empty()) {
      Frame& frame = calls.back();
      const Word x = frame.state;
      if (frame.remaining != 0) {
        const int i = std::countr_zero(frame.remaining);
        frame.remaining &= frame.remaining - 1;
        const Word y = x ^ unit(i);
        if (index[y] == kUnvisited) {
          enter(y);
        } else if (component[y] == kUnvisited) {
          low[x] = std::min(low[x], index[y]);
        }
        continue;
      }
      calls.pop_back();
      if (!calls.empty()) {
        const Word parent = calls.back().state;
        low[parent] = std::min(low[parent], low[x]);
      }
      if (low[x] != index[x]) continue;
      std::vector<Word> members;
      Word y;
      do {
        y = stack.back();
        stack.pop_back();
        component[y] = next_component;
        members.push_back(y);
      } while (y != x);
      bool terminal = true;
      for (Word m : members) {
        for (int i : indices_of(freedom(f, m))) {
          if (component[m ^ unit(i)] != next_component) terminal = false;
        }
        if (!terminal) break;
      }
      ++next_component;
      if (!terminal) continue;
      std::sort(members.begin(), members.end());
      Attractor a;
      a.is_fixed_point = members.size() == 1;
      a.is_cyclic = !a.is_fixed_point;
      a.is_attractive_cycle =
          a.is_cyclic && std::all_of(members.begin(), members.end(),
                                     [&](Word m) { return popcount(freedom(f, m)) == 1; });
      a.is_antipodal = a.is_attractive_cycle && is_antipodal(trace_cycle(f, members.front()));
      a.states = std::move(members);
      out.push_back(std::move(a));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Attractor& a, const Attractor& b) { return a.states.front() < b.states.front(); });
  return out;
}

std::vector<StateCycle> attractive_cycles(const BooleanNetwork& f) {
  // Deterministic states form a functional graph x -> f(x); its cycles are the
  // attractive cycles.
  const std::uint64_t total = f.size();
  std::vector<std::uint8_t> color(total, 0);  // 0 new, 1 on current walk, 2 done
  std::vector<StateCycle> out;
  auto deterministic = [&](Word x) { return popcount(freedom(f, x)) == 1; };
  std::vector<Word> walk;
  for (std::uint64_t s = 0; s < total; ++s) {
    if (color[s] != 0) continue;
    walk.clear();
    Word x = static_cast<Word>(s);
    while (color[x] == 0 && deterministic(x)) {
      color[x] = 1;
      walk.push_back(x);
      x = f(x);
    }
    if (color[x] == 1) {
      const auto begin = std::find(walk.begin(), walk.end(), x);
      const Word smallest = *std::min_element(begin, walk.end());
      out.push_back(trace_cycle(f, smallest));
    }
    for (Word w : walk) color[w] = 2;
    color[x] = 2;
  }
  std::sort(out.begin(), out.end(),
            [](const StateCycle& a, const StateCycle& b) { return a.states.front() < b.states.front(); });
  return out;
}

bool is_nonexpansive(const BooleanNetwork& f) {
  const int n = f.dimension();
  auto parts = sweep_ranges<char>(f.size(), [&](std::uint64_t begin, std::uint64_t end) -> char {
    for (std::uint64_t s = begin; s < end; ++s) {
      const auto x = static_cast<Word>(s);
      for (int i = 0; i < n; ++i) {
        if (popcount(f(x) ^ f(x ^ unit(i))) > 1) return 0;
      }
    }
    return 1;
  });
  return std::all_of(parts.begin(), parts.end(), [](char ok) { return ok != 0; });
}

Word Subcube::embed(Word y) const {
  Word x = base & ~free & full_mask(n);
  int t = 0;
  for (int i : indices_of(free)) {
    if (test_bit(y, t++)) x |= unit(i);
  }
  return x;
}

Word Subcube::project(Word x) const {
  Word y = 0;
  int t = 0;
  for (int i : indices_of(free)) {
    if (test_bit(x, i)) y |= unit(t);
    ++t;
  }
  return y;
}

BooleanNetwork restrict_subcube(const BooleanNetwork& f, const Subcube& cube) {
  if (cube.n != f.dimension()) {
    throw DimensionError("subcube of dimension " + std::to_string(cube.n) +
                         " on network of dimension " + std::to_string(f.dimension()));
  }
  if ((cube.free & ~full_mask(cube.n)) != 0 || (cube.base & ~full_mask(cube.n)) != 0) {
    throw std::invalid_argument("subcube has bits above the dimension");
  }
  const int k = cube.dimension();
  std::vector<Word> images(state_count(k));
  for (std::uint64_t y = 0; y < images.size(); ++y) {
    images[y] = cube.project(f(cube.embed(static_cast<Word>(y))));
  }
  return BooleanNetwork(k, std::move(images));
}

}  // namespace bnscope
