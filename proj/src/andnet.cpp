#include "bnscope/andnet.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <sstream>

#include "bnscope/expr.hpp"

namespace bnscope {

AndNet::AndNet(int dimension)
    : n(dimension),
      positive(static_cast<std::size_t>(dimension), 0),
      negative(static_cast<std::size_t>(dimension), 0) {
  check_dimension(dimension, true);
}

AndNet::AndNet(int dimension, std::vector<IndexSet> positive_inputs,
               std::vector<IndexSet> negative_inputs)
    : n(dimension), positive(std::move(positive_inputs)), negative(std::move(negative_inputs)) {
  check_dimension(dimension, true);
  if (positive.size() != static_cast<std::size_t>(n) ||
      negative.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("and-net needs one input pair per coordinate");
  }
  for (int i = 0; i < n; ++i) {
    if (((positive[i] | negative[i]) & ~full_mask(n)) != 0) {
      throw std::invalid_argument("and-net input outside the dimension");
    }
    if ((positive[i] & negative[i]) != 0) {
      throw std::invalid_argument("and-net coordinate " + std::to_string(i) +
                                  " has an input with both signs");
    }
  }
}

void AndNet::add_input(int target, int source, Sign sign) {
  if (target < 0 || target >= n || source < 0 || source >= n) {
    throw std::out_of_range("and-net input outside the dimension");
  }
  auto& same = sign == Sign::Positive ? positive : negative;
  auto& other = sign == Sign::Positive ? negative : positive;
  if (test_bit(other[target], source)) {
    throw std::invalid_argument("and-net coordinate " + std::to_string(target) +
                                " already has input " + std::to_string(source) +
                                " with the opposite sign");
  }
  same[target] |= unit(source);
}

bool AndNet::is_negative() const {
  for (IndexSet p : positive) {
    if (p != 0) return false;
  }
  return true;
}

SignedDigraph AndNet::graph() const {
  SignedDigraph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j : indices_of(positive[i])) g.add_edge(j, i, Sign::Positive);
    for (int j : indices_of(negative[i])) g.add_edge(j, i, Sign::Negative);
  }
  return g;
}

BooleanNetwork andnet_to_network(const AndNet& a, bool force) {
  const auto& pos = a.positive;
  const auto& neg = a.negative;
  return BooleanNetwork::from_function(
      a.n,
      [&](Word x) {
        Word y = 0;
        for (int i = 0; i < a.n; ++i) {
          if ((x & pos[i]) == pos[i] && (x & neg[i]) == 0) y |= unit(i);
        }
        return y;
      },
      force);
}

AndNet network_to_andnet(const BooleanNetwork& f) {
  const int n = f.dimension();
  AndNet a(n);
  const Word mask = full_mask(n);
  for (int i = 0; i < n; ++i) {
    Word all_ones = mask;   // coordinates equal to 1 on every true point
    Word all_zeros = mask;  // coordinates equal to 0 on every true point
    std::uint64_t count = 0;
    for (std::uint64_t x = 0; x < f.size(); ++x) {
      if (!f.coordinate(i, static_cast<Word>(x))) continue;
      all_ones &= static_cast<Word>(x);
      all_zeros &= ~static_cast<Word>(x);
      ++count;
    }
    const int fixed = popcount(all_ones) + popcount(all_zeros);
    if (count == 0 || count != state_count(n - fixed)) {
      throw NotAnAndNet("coordinate " + std::to_string(i) + " is not a product of literals");
    }
    a.positive[i] = all_ones;
    a.negative[i] = all_zeros & mask;
  }
  return a;
}

AndNet andnet_from_signed_digraph(const SignedDigraph& g) {
  if (!g.is_simple()) {
    throw std::invalid_argument("signed digraph has parallel edges of opposite signs");
  }
  AndNet a(g.vertex_count());
  for (const auto& e : g.edges()) a.add_input(e.to, e.from, e.sign);
  return a;
}

AndNet random_andnet(int n, std::uint64_t seed, double density) {
  check_dimension(n);
  std::mt19937_64 rng(seed);
  // Compare raw 53-bit draws so the sequence does not depend on the standard
  // library's distribution implementations.
  const auto threshold = static_cast<std::uint64_t>(std::clamp(density, 0.0, 1.0) * 0x1p53);
  AndNet a(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const bool present = (rng() >> 11) < threshold;
      const bool negative = (rng() & 1U) != 0;
      if (present) a.add_input(i, j, negative ? Sign::Negative : Sign::Positive);
    }
  }
  return a;
}

std::string render_andnet(const AndNet& a) {
  std::ostringstream out;
  out << "n = " << a.n << '\n';
  for (int i = 0; i < a.n; ++i) {
    out << i << ':';
    for (int j = 0; j < a.n; ++j) {
      if (test_bit(a.positive[i], j)) out << " +" << j;
      if (test_bit(a.negative[i], j)) out << " -" << j;
    }
    out << '\n';
  }
  return out.str();
}

AndNet parse_andnet(std::string_view text) {
  struct Line {
    int index;
    std::vector<std::pair<int, Sign>> inputs;
    int line;
  };
  std::vector<Line> lines;
  int declared = -1;
  int max_index = -1;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::size_t pos = raw.find_first_not_of(" \t\r");
    if (pos == std::string::npos) continue;
    auto error = [&](const std::string& message) {
      return ParseError(message, line_no, static_cast<int>(pos) + 1);
    };
    auto skip_space = [&] {
      while (pos < raw.size() && std::isspace(static_cast<unsigned char>(raw[pos]))) ++pos;
    };
    auto read_int = [&]() -> int {
      const std::size_t start = pos;
      while (pos < raw.size() && std::isdigit(static_cast<unsigned char>(raw[pos]))) ++pos;
      if (pos == start || pos - start > 6) throw error("expected a coordinate index");
      return std::stoi(raw.substr(start, pos - start));
    };
    if (raw[pos] == 'n') {
      ++pos;
      skip_space();
      if (pos >= raw.size() || raw[pos] != '=') throw error("expected '=' after n");
      ++pos;
      skip_space();
      if (declared >= 0) throw error("dimension declared twice");
      declared = read_int();
      skip_space();
      if (pos < raw.size()) throw error("unexpected text after dimension");
      continue;
    }
    Line line{read_int(), {}, line_no};
    skip_space();
    if (pos >= raw.size() || raw[pos] != ':') throw error("expected ':' after coordinate index");
    ++pos;
    while (true) {
      skip_space();
      if (pos >= raw.size()) break;
      Sign sign;
      if (raw[pos] == '+') {
        sign = Sign::Positive;
      } else if (raw[pos] == '-') {
        sign = Sign::Negative;
      } else {
        throw error("expected +<j> or -<j>");
      }
      ++pos;
      const int j = read_int();
      line.inputs.emplace_back(j, sign);
      max_index = std::max(max_index, j);
    }
    max_index = std::max(max_index, line.index);
    lines.push_back(std::move(line));
  }
  const int n = declared >= 0 ? declared : max_index + 1;
  if (max_index >= n) {
    throw ParseError("index " + std::to_string(max_index) + " outside declared dimension " +
                         std::to_string(n),
                     line_no, 1);
  }
  check_dimension(n, true);
  AndNet a(n);
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (const auto& line : lines) {
    if (seen[line.index]) {
      throw ParseError("coordinate " + std::to_string(line.index) + " defined twice", line.line, 1);
    }
    seen[line.index] = true;
    for (auto [j, sign] : line.inputs) {
      const auto& same = sign == Sign::Positive ? a.positive : a.negative;
      if (test_bit(same[line.index], j)) {
        throw ParseError("input " + std::to_string(j) + " listed twice", line.line, 1);
      }
      try {
        a.add_input(line.index, j, sign);
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), line.line, 1);
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    if (!seen[i]) throw ParseError("coordinate " + std::to_string(i) + " is not defined", line_no, 1);
  }
  return a;
}

}  // namespace bnscope
