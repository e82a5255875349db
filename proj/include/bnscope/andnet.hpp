#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bnscope/graph.hpp"
#include "bnscope/network.hpp"

namespace bnscope {

class NotAnAndNet : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Network whose coordinate i is the product of x_j over j in positive[i] and
/// of (x_j + 1) over j in negative[i]; an empty product is 1.
struct AndNet {
  int n = 0;
  std::vector<IndexSet> positive;
  std::vector<IndexSet> negative;

  AndNet() = default;
  explicit AndNet(int dimension);
  AndNet(int dimension, std::vector<IndexSet> positive_inputs,
         std::vector<IndexSet> negative_inputs);

  void add_input(int target, int source, Sign sign);
  /// No positive inputs anywhere.
  bool is_negative() const;
  /// The simple signed digraph with an edge (j, i) for every input j of i.
  SignedDigraph graph() const;

  friend bool operator==(const AndNet&, const AndNet&) = default;
};

BooleanNetwork andnet_to_network(const AndNet& a, bool force = false);

/// Throws NotAnAndNet when some coordinate is not a product of literals.
AndNet network_to_andnet(const BooleanNetwork& f);

/// Throws std::invalid_argument when G carries both signs on a vertex pair.
AndNet andnet_from_signed_digraph(const SignedDigraph& g);

/// Each ordered pair (j, i) is an input with probability `density`, with a
/// fair sign. Deterministic in (n, seed, density).
AndNet random_andnet(int n, std::uint64_t seed, double density = 0.5);

/// .anet text: one line "<i>: +j -k ..." per coordinate, inputs ascending.
std::string render_andnet(const AndNet& a);
AndNet parse_andnet(std::string_view text);

}  // namespace bnscope
