#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bnscope {

/// Graphs are stored as 64-bit adjacency rows, so vertex counts stop at 64.
inline constexpr int kMaxGraphVertices = 64;

using VertexSet = std::uint64_t;

enum class Sign : int { Negative = -1, Positive = 1 };

inline constexpr int to_int(Sign s) { return static_cast<int>(s); }
inline constexpr Sign operator*(Sign a, Sign b) {
  return a == b ? Sign::Positive : Sign::Negative;
}
inline constexpr Sign flip(Sign s) { return s == Sign::Positive ? Sign::Negative : Sign::Positive; }
char sign_char(Sign s);

struct SignedEdge {
  int from = 0;
  int to = 0;
  Sign sign = Sign::Positive;

  friend auto operator<=>(const SignedEdge&, const SignedEdge&) = default;
};

/// Directed graph with signed edges; a vertex pair may carry both signs.
class SignedDigraph {
 public:
  SignedDigraph() = default;
  explicit SignedDigraph(int vertices);

  int vertex_count() const { return n_; }

  void add_edge(int from, int to, Sign sign);
  bool has_edge(int from, int to, Sign sign) const;
  bool has_edge(int from, int to) const;

  /// Targets reachable over edges of the given sign.
  VertexSet positive_out(int v) const { return pos_[static_cast<std::size_t>(v)]; }
  VertexSet negative_out(int v) const { return neg_[static_cast<std::size_t>(v)]; }
  VertexSet out(int v) const { return positive_out(v) | negative_out(v); }

  /// No vertex pair carries both signs.
  bool is_simple() const;
  std::size_t edge_count() const;
  /// Edges sorted by (from, to, sign).
  std::vector<SignedEdge> edges() const;

  /// Subgraph induced on `vertices`, renumbered in increasing order.
  SignedDigraph induced(const std::vector<int>& vertices) const;
  SignedDigraph transpose() const;

  friend bool operator==(const SignedDigraph&, const SignedDigraph&) = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<VertexSet> pos_;
  std::vector<VertexSet> neg_;
};

/// An elementary cycle; step t is the edge vertices[t] -> vertices[t+1 mod len]
/// with sign signs[t]. Canonical rotation puts the smallest vertex first.
struct SignedCycle {
  std::vector<int> vertices;
  std::vector<Sign> signs;
  Sign sign = Sign::Positive;

  SignedCycle() = default;
  SignedCycle(std::vector<int> vertices, std::vector<Sign> signs);

  std::size_t length() const { return vertices.size(); }
  SignedEdge edge(std::size_t t) const;
  std::vector<SignedEdge> edge_list() const;
  VertexSet vertex_set() const;
  bool contains_vertex(int v) const;
  /// True iff some step goes from `from` to `to` (either sign).
  bool uses_pair(int from, int to) const;
  /// Successor of v along the cycle, or -1 if v is not on it.
  int successor(int v) const;
  SignedCycle canonical() const;
  std::string to_string() const;

  friend bool operator==(const SignedCycle&, const SignedCycle&) = default;
};

/// (length, vertex sequence, overall sign, step signs).
bool canonical_less(const SignedCycle& a, const SignedCycle& b);

class CycleLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultCycleCap = 1'000'000;

/// All elementary cycles of the unsigned digraph given by adjacency rows, each
/// starting at its smallest vertex, in the order found. Throws
/// CycleLimitExceeded beyond `cap`.
std::vector<std::vector<int>> elementary_cycles(const std::vector<VertexSet>& adjacency,
                                                std::size_t cap = kDefaultCycleCap);

/// All elementary signed cycles in canonical order. Parallel edges of opposite
/// signs give distinct signed cycles over the same vertex sequence.
std::vector<SignedCycle> enumerate_cycles(const SignedDigraph& g,
                                          std::size_t cap = kDefaultCycleCap);

/// Unsigned directed graph.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int vertices);

  int vertex_count() const { return n_; }
  void add_edge(int from, int to);
  bool has_edge(int from, int to) const;
  VertexSet out(int v) const { return out_[static_cast<std::size_t>(v)]; }
  VertexSet in(int v) const;
  int out_degree(int v) const;
  int in_degree(int v) const;
  std::size_t edge_count() const;
  std::vector<std::pair<int, int>> edges() const;
  const std::vector<VertexSet>& adjacency() const { return out_; }
  Digraph transpose() const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<VertexSet> out_;
};

/// Signs dropped; pairs with both signs collapse to one edge.
Digraph underlying(const SignedDigraph& g);

/// Elementary cycles of an unsigned digraph, canonical rotation, sorted by
/// (length, vertex sequence).
std::vector<std::vector<int>> enumerate_cycles(const Digraph& d,
                                               std::size_t cap = kDefaultCycleCap);

/// Graphviz: vertices v0..v(n-1); positive edges solid labelled "+", negative
/// edges dashed labelled "−".
std::string to_dot(const SignedDigraph& g, std::string_view name = "G");
std::string to_dot(const Digraph& d, std::string_view name = "G");

/// Edge-list text: "# n=<int>" header then one "u v" line per edge.
std::string to_edge_list(const Digraph& d);
Digraph parse_edge_list(std::string_view text);

/// Minimal DOT reader for digraphs written by to_dot (vN -> vM edges).
Digraph parse_dot_digraph(std::string_view text);

}  // namespace bnscope
