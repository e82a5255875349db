#include "bnscope/transform.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include <json.hpp>

namespace bnscope {
namespace {

Word insert_coordinate(Word y, int k, bool value) {
  const Word low = y & full_mask(k);
  const Word high = (y >> k) << (k + 1);
  return low | high | (value ? unit(k) : 0);
}

void check_coordinate(const BooleanNetwork& f, int k) {
  if (k < 0 || k >= f.dimension()) {
    throw std::out_of_range("coordinate " + std::to_string(k) + " outside dimension " +
                            std::to_string(f.dimension()));
  }
}

void require_no_loop(const BooleanNetwork& f, int k) {
  check_coordinate(f, k);
  if (!has_no_loop(f, k)) {
    throw LoopError("coordinate " + std::to_string(k) + " has a loop and cannot be eliminated");
  }
}

}  // namespace

bool has_no_loop(const BooleanNetwork& f, int k) {
  check_coordinate(f, k);
  for (std::uint64_t s = 0; s < f.size(); ++s) {
    const auto x = static_cast<Word>(s);
    if (f.coordinate(k, x) != f.coordinate(k, x ^ unit(k))) return false;
  }
  return true;
}

Word drop_coordinate(Word x, int k) {
  return (x & full_mask(k)) | ((x >> (k + 1)) << k);
}

Word lift_state(const BooleanNetwork& f, int k, Word reduced) {
  require_no_loop(f, k);
  const Word base = insert_coordinate(reduced, k, false);
  return base | (f.coordinate(k, base) ? unit(k) : 0);
}

Reduction reduce(const BooleanNetwork& f, int k) {
  require_no_loop(f, k);
  const int n = f.dimension();
  std::vector<Word> images(state_count(n - 1));
  for (std::uint64_t y = 0; y < images.size(); ++y) {
    const Word base = insert_coordinate(static_cast<Word>(y), k, false);
    const Word lifted = base | (f.coordinate(k, base) ? unit(k) : 0);
    images[y] = drop_coordinate(f(lifted), k);
  }
  Reduction r{BooleanNetwork(n - 1, std::move(images)), k, {}};
  for (int i = 0; i < n; ++i) r.renumber.push_back(i < k ? i : (i == k ? -1 : i - 1));
  return r;
}

ReductionJacobianReport check_reduction_jacobian(const BooleanNetwork& f, int k) {
  const Reduction r = reduce(f, k);
  const BooleanNetwork& g = r.network;
  const int m = g.dimension();
  ReductionJacobianReport report;
  auto d = [&](const BooleanNetwork& h, int i, int j, Word x) {
    return test_bit(h(x) ^ h(x ^ unit(j)), i);
  };
  for (std::uint64_t s = 0; s < g.size(); ++s) {
    const auto x = static_cast<Word>(s);
    const Word lifted = lift_state(f, k, x);
    for (int i = 0; i < m; ++i) {
      const int oi = i < k ? i : i + 1;
      for (int j = 0; j < m; ++j) {
        const int oj = j < k ? j : j + 1;
        const bool lhs = d(g, i, j, x);
        const bool rhs = d(f, oi, oj, lifted) ^
                         (d(f, k, oj, lifted) && d(f, oi, k, lifted ^ unit(oj)));
        ++report.checked;
        if (lhs != rhs && report.passed) {
          report.passed = false;
          report.counterexample = std::make_tuple(x, i, j);
        }
      }
    }
  }
  return report;
}

std::vector<std::pair<int, int>> chords(const SignedDigraph& g, const SignedCycle& c) {
  std::vector<std::pair<int, int>> out;
  for (int i : c.vertices) {
    for (int k : c.vertices) {
      if (i != k && g.has_edge(i, k) && !c.uses_pair(i, k)) out.emplace_back(i, k);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void search_quasi_delocalizing(const AndNet& a, const std::vector<SignedCycle>& cycles,
                               std::size_t limit, std::vector<QuasiDelocalizingFn>& out) {
  if (!a.is_negative()) {
    throw std::invalid_argument("quasi-delocalizing functions need a negative and-net");
  }
  const SignedDigraph g = a.graph();
  for (const auto& c : cycles) {
    for (const auto& e : c.edge_list()) {
      if (!g.has_edge(e.from, e.to, e.sign)) {
        throw std::invalid_argument("cycle " + c.to_string() + " is not a cycle of the and-net");
      }
    }
  }
  std::vector<std::vector<std::pair<int, int>>> options;
  for (const auto& c : cycles) options.push_back(chords(g, c));

  QuasiDelocalizingFn current;
  current.cycles = cycles;
  current.chord.resize(cycles.size());
  current.step.resize(cycles.size());
  std::multiset<std::pair<int, int>> used_chords;
  std::multiset<std::pair<int, int>> used_steps;
  std::function<void(std::size_t)> assign = [&](std::size_t t) {
    if (out.size() >= limit) return;
    if (t == cycles.size()) {
      out.push_back(current);
      return;
    }
    for (const auto& chord : options[t]) {
      const std::pair<int, int> step{chord.first, cycles[t].successor(chord.first)};
      if (used_steps.count(chord) != 0 || used_chords.count(step) != 0 || chord == step) continue;
      current.chord[t] = chord;
      current.step[t] = step;
      const auto c_it = used_chords.insert(chord);
      const auto s_it = used_steps.insert(step);
      assign(t + 1);
      used_chords.erase(c_it);
      used_steps.erase(s_it);
    }
  };
  assign(0);
}

}  // namespace

std::optional<QuasiDelocalizingFn> find_quasi_delocalizing(const AndNet& a,
                                                           const std::vector<SignedCycle>& cycles) {
  std::vector<QuasiDelocalizingFn> found;
  search_quasi_delocalizing(a, cycles, 1, found);
  if (found.empty()) return std::nullopt;
  return found.front();
}

std::vector<QuasiDelocalizingFn> all_quasi_delocalizing(const AndNet& a,
                                                        const std::vector<SignedCycle>& cycles,
                                                        std::size_t limit) {
  std::vector<QuasiDelocalizingFn> found;
  search_quasi_delocalizing(a, cycles, limit, found);
  return found;
}

void validate_quasi_delocalizing(const AndNet& a, const QuasiDelocalizingFn& chi) {
  if (!a.is_negative()) {
    throw std::invalid_argument("quasi-delocalizing functions need a negative and-net");
  }
  if (chi.chord.size() != chi.cycles.size() || chi.step.size() != chi.cycles.size()) {
    throw std::invalid_argument("quasi-delocalizing function needs one chord and step per cycle");
  }
  const SignedDigraph g = a.graph();
  std::set<std::pair<int, int>> chord_image(chi.chord.begin(), chi.chord.end());
  for (std::size_t t = 0; t < chi.size(); ++t) {
    const auto& c = chi.cycles[t];
    for (const auto& e : c.edge_list()) {
      if (!g.has_edge(e.from, e.to, e.sign)) {
        throw std::invalid_argument("cycle " + c.to_string() + " is not a cycle of the and-net");
      }
    }
    const auto [i, k] = chi.chord[t];
    const auto options = chords(g, c);
    if (std::find(options.begin(), options.end(), chi.chord[t]) == options.end()) {
      throw std::invalid_argument("(" + std::to_string(i) + "," + std::to_string(k) +
                                  ") is not a chord of " + c.to_string());
    }
    if (chi.step[t] != std::make_pair(i, c.successor(i))) {
      throw std::invalid_argument("step of " + c.to_string() +
                                  " does not leave the chord's source along the cycle");
    }
    if (chord_image.count(chi.step[t]) != 0) {
      throw std::invalid_argument("an edge is used both as a chord and as a step");
    }
  }
}

std::string ExpansionTrace::to_json() const {
  nlohmann::ordered_json j;
  j["original_dimension"] = original_dimension;
  j["vertices"] = nlohmann::ordered_json::array();
  for (const auto& v : vertices) {
    nlohmann::ordered_json e;
    e["vertex"] = v.vertex;
    e["role"] = v.role == ExpansionRole::Subdivider ? "i_prime" : "i_dprime";
    e["source_edge"] = {v.source_edge.first, v.source_edge.second};
    if (v.role == ExpansionRole::Bypass) e["partner"] = v.partner;
    j["vertices"].push_back(e);
  }
  return j.dump(2);
}

std::pair<AndNet, ExpansionTrace> expand_delocalize(const AndNet& a, const QuasiDelocalizingFn& chi) {
  validate_quasi_delocalizing(a, chi);
  const int n = a.n;
  const std::set<std::pair<int, int>> step_set(chi.step.begin(), chi.step.end());
  const std::vector<std::pair<int, int>> steps(step_set.begin(), step_set.end());
  std::map<std::pair<int, int>, int> rank;
  for (std::size_t r = 0; r < steps.size(); ++r) rank[steps[r]] = static_cast<int>(r);

  // Distinct (step, chord) pairs, grouped by step rank then chord.
  std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> pair_set;
  for (std::size_t t = 0; t < chi.size(); ++t) pair_set.insert({chi.step[t], chi.chord[t]});

  const int step_count = static_cast<int>(steps.size());
  const int total = n + step_count + static_cast<int>(pair_set.size());
  AndNet g(total);
  for (int i = 0; i < n; ++i) {
    g.positive[i] = a.positive[i];
    g.negative[i] = a.negative[i];
  }
  ExpansionTrace trace{n, {}};
  auto subdivider = [&](const std::pair<int, int>& step) { return n + 2 * rank.at(step) + 1; };
  for (const auto& step : steps) {
    const auto [i, j] = step;
    const int ip = subdivider(step);
    g.negative[j] &= ~unit(i);
    g.add_input(ip, i, Sign::Positive);
    g.add_input(j, ip, Sign::Negative);
    trace.vertices.push_back({ip, ExpansionRole::Subdivider, step, -1});
  }
  std::set<std::pair<int, int>> first_taken;
  int extra = n + 2 * step_count;
  for (const auto& [step, chord] : pair_set) {
    int ipp;
    if (first_taken.insert(step).second) {
      ipp = n + 2 * rank.at(step);
    } else {
      ipp = extra++;
    }
    const int ip = subdivider(step);
    const auto [i, k] = chord;
    g.add_input(ipp, i, Sign::Positive);
    g.add_input(ip, ipp, Sign::Positive);
    g.add_input(k, ipp, Sign::Negative);
    trace.vertices.push_back({ipp, ExpansionRole::Bypass, chord, ip});
  }
  return {std::move(g), std::move(trace)};
}

std::vector<SignedCycle> cycles_above(const AndNet& g, const AndNet& f, const ExpansionTrace& trace,
                                      const SignedCycle& c, std::size_t cap) {
  if (trace.original_dimension != f.n ||
      g.n != f.n + static_cast<int>(trace.vertices.size())) {
    throw std::invalid_argument("expansion trace does not match the two and-nets");
  }
  for (const auto& v : trace.vertices) {
    if (v.vertex < f.n || v.vertex >= g.n) {
      throw std::invalid_argument("expansion trace names a vertex outside the added range");
    }
  }
  const SignedDigraph base = f.graph();
  for (const auto& e : c.edge_list()) {
    if (!base.has_edge(e.from, e.to, e.sign)) {
      throw std::invalid_argument("cycle " + c.to_string() + " is not a cycle of the original graph");
    }
  }
  const SignedCycle target = c.canonical();
  std::vector<SignedCycle> out;
  for (auto& candidate : enumerate_cycles(g.graph(), cap)) {
    std::vector<int> projected;
    for (int v : candidate.vertices) {
      if (v < f.n) projected.push_back(v);
    }
    if (projected.size() != target.length()) continue;
    const auto first = std::min_element(projected.begin(), projected.end());
    std::rotate(projected.begin(), first, projected.end());
    if (projected == target.vertices) out.push_back(std::move(candidate));
  }
  return out;
}

}  // namespace bnscope
