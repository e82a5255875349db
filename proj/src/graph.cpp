#include "bnscope/graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <functional>
#include <sstream>

namespace bnscope {
namespace {

constexpr VertexSet bit(int v) { return VertexSet{1} << v; }

template <typename Fn>
void for_each_vertex(VertexSet set, Fn&& fn) {
  while (set != 0) {
    fn(std::countr_zero(set));
    set &= set - 1;
  }
}

void check_vertex_count(int n) {
  if (n < 0 || n > kMaxGraphVertices) {
    throw std::invalid_argument("graph vertex count " + std::to_string(n) + " outside [0, 64]");
  }
}

}  // namespace

char sign_char(Sign s) { return s == Sign::Positive ? '+' : '-'; }

SignedDigraph::SignedDigraph(int vertices)
    : n_(vertices),
      pos_(static_cast<std::size_t>(std::max(vertices, 0)), 0),
      neg_(static_cast<std::size_t>(std::max(vertices, 0)), 0) {
  check_vertex_count(vertices);
}

void SignedDigraph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " outside graph of " +
                            std::to_string(n_) + " vertices");
  }
}

void SignedDigraph::add_edge(int from, int to, Sign sign) {
  check_vertex(from);
  check_vertex(to);
  auto& row = sign == Sign::Positive ? pos_ : neg_;
  row[static_cast<std::size_t>(from)] |= bit(to);
}

bool SignedDigraph::has_edge(int from, int to, Sign sign) const {
  if (from < 0 || from >= n_ || to < 0 || to >= n_) return false;
  const auto& row = sign == Sign::Positive ? pos_ : neg_;
  return (row[static_cast<std::size_t>(from)] & bit(to)) != 0;
}

bool SignedDigraph::has_edge(int from, int to) const {
  return has_edge(from, to, Sign::Positive) || has_edge(from, to, Sign::Negative);
}

bool SignedDigraph::is_simple() const {
  for (int v = 0; v < n_; ++v) {
    if ((positive_out(v) & negative_out(v)) != 0) return false;
  }
  return true;
}

std::size_t SignedDigraph::edge_count() const {
  std::size_t count = 0;
  for (int v = 0; v < n_; ++v) {
    count += static_cast<std::size_t>(std::popcount(positive_out(v)) +
                                      std::popcount(negative_out(v)));
  }
  return count;
}

std::vector<SignedEdge> SignedDigraph::edges() const {
  std::vector<SignedEdge> out;
  for (int v = 0; v < n_; ++v) {
    for_each_vertex(this->out(v), [&](int w) {
      if (has_edge(v, w, Sign::Negative)) out.push_back({v, w, Sign::Negative});
      if (has_edge(v, w, Sign::Positive)) out.push_back({v, w, Sign::Positive});
    });
  }
  return out;
}

SignedDigraph SignedDigraph::induced(const std::vector<int>& vertices) const {
  std::vector<int> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  SignedDigraph sub(static_cast<int>(sorted.size()));
  for (std::size_t a = 0; a < sorted.size(); ++a) {
    for (std::size_t b = 0; b < sorted.size(); ++b) {
      for (Sign s : {Sign::Positive, Sign::Negative}) {
        if (has_edge(sorted[a], sorted[b], s)) {
          sub.add_edge(static_cast<int>(a), static_cast<int>(b), s);
        }
      }
    }
  }
  return sub;
}

SignedDigraph SignedDigraph::transpose() const {
  SignedDigraph t(n_);
  for (const auto& e : edges()) t.add_edge(e.to, e.from, e.sign);
  return t;
}

SignedCycle::SignedCycle(std::vector<int> vertices_, std::vector<Sign> signs_)
    : vertices(std::move(vertices_)), signs(std::move(signs_)) {
  if (vertices.empty() || vertices.size() != signs.size()) {
    throw std::invalid_argument("cycle needs one sign per step and at least one vertex");
  }
  VertexSet seen = 0;
  for (int v : vertices) {
    if (v < 0 || v >= kMaxGraphVertices || (seen & bit(v)) != 0) {
      throw std::invalid_argument("cycle vertices must be distinct and in range");
    }
    seen |= bit(v);
  }
  sign = Sign::Positive;
  for (Sign s : signs) sign = sign * s;
}

SignedEdge SignedCycle::edge(std::size_t t) const {
  return {vertices[t], vertices[(t + 1) % vertices.size()], signs[t]};
}

std::vector<SignedEdge> SignedCycle::edge_list() const {
  std::vector<SignedEdge> out;
  out.reserve(length());
  for (std::size_t t = 0; t < length(); ++t) out.push_back(edge(t));
  return out;
}

VertexSet SignedCycle::vertex_set() const {
  VertexSet set = 0;
  for (int v : vertices) set |= bit(v);
  return set;
}

bool SignedCycle::contains_vertex(int v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

bool SignedCycle::uses_pair(int from, int to) const {
  for (std::size_t t = 0; t < length(); ++t) {
    const auto e = edge(t);
    if (e.from == from && e.to == to) return true;
  }
  return false;
}

int SignedCycle::successor(int v) const {
  for (std::size_t t = 0; t < length(); ++t) {
    if (vertices[t] == v) return vertices[(t + 1) % length()];
  }
  return -1;
}

SignedCycle SignedCycle::canonical() const {
  const auto first = std::min_element(vertices.begin(), vertices.end()) - vertices.begin();
  std::vector<int> vs;
  std::vector<Sign> ss;
  for (std::size_t t = 0; t < length(); ++t) {
    const std::size_t k = (static_cast<std::size_t>(first) + t) % length();
    vs.push_back(vertices[k]);
    ss.push_back(signs[k]);
  }
  return SignedCycle(std::move(vs), std::move(ss));
}

std::string SignedCycle::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t t = 0; t < length(); ++t) out << vertices[t] << ' ' << sign_char(signs[t]) << ' ';
  out << vertices.front() << ")" << sign_char(sign);
  return out.str();
}

bool canonical_less(const SignedCycle& a, const SignedCycle& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  if (a.vertices != b.vertices) return a.vertices < b.vertices;
  if (a.sign != b.sign) return to_int(a.sign) < to_int(b.sign);
  return std::lexicographical_compare(a.signs.begin(), a.signs.end(), b.signs.begin(),
                                      b.signs.end(), [](Sign x, Sign y) {
                                        return to_int(x) < to_int(y);
                                      });
}

namespace {

// Johnson's circuit search for circuits through `start` within vertices >= start.
class CircuitSearch {
 public:
  CircuitSearch(const std::vector<VertexSet>& adjacency, std::size_t cap,
                std::vector<std::vector<int>>& out)
      : adj_(adjacency), cap_(cap), out_(out), blocked_map_(adjacency.size(), 0) {}

  void run(int start) {
    start_ = start;
    allowed_ = ~VertexSet{0} << start;
    blocked_ = 0;
    std::fill(blocked_map_.begin(), blocked_map_.end(), 0);
    circuit(start);
  }

 private:
  bool circuit(int v) {
    bool found = false;
    path_.push_back(v);
    blocked_ |= bit(v);
    const VertexSet next = adj_[static_cast<std::size_t>(v)] & allowed_;
    for_each_vertex(next, [&](int w) {
      if (w == start_) {
        if (out_.size() >= cap_) {
          throw CycleLimitExceeded("cycle enumeration exceeded the cap of " +
                                   std::to_string(cap_) + " cycles");
        }
        out_.push_back(path_);
        found = true;
      } else if ((blocked_ & bit(w)) == 0) {
        if (circuit(w)) found = true;
      }
    });
    if (found) {
      unblock(v);
    } else {
      for_each_vertex(next, [&](int w) { blocked_map_[static_cast<std::size_t>(w)] |= bit(v); });
    }
    path_.pop_back();
    return found;
  }

  void unblock(int u) {
    blocked_ &= ~bit(u);
    VertexSet waiting = blocked_map_[static_cast<std::size_t>(u)];
    blocked_map_[static_cast<std::size_t>(u)] = 0;
    for_each_vertex(waiting, [&](int w) {
      if ((blocked_ & bit(w)) != 0) unblock(w);
    });
  }

  const std::vector<VertexSet>& adj_;
  std::size_t cap_;
  std::vector<std::vector<int>>& out_;
  std::vector<VertexSet> blocked_map_;
  std::vector<int> path_;
  VertexSet allowed_ = 0;
  VertexSet blocked_ = 0;
  int start_ = 0;
};

}  // namespace

std::vector<std::vector<int>> elementary_cycles(const std::vector<VertexSet>& adjacency,
                                                std::size_t cap) {
  check_vertex_count(static_cast<int>(adjacency.size()));
  std::vector<std::vector<int>> out;
  CircuitSearch search(adjacency, cap, out);
  for (int s = 0; s < static_cast<int>(adjacency.size()); ++s) search.run(s);
  return out;
}

std::vector<SignedCycle> enumerate_cycles(const SignedDigraph& g, std::size_t cap) {
  std::vector<VertexSet> adjacency(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) adjacency[static_cast<std::size_t>(v)] = g.out(v);
  const auto cycles = elementary_cycles(adjacency, cap);

  std::vector<SignedCycle> out;
  for (const auto& vs : cycles) {
    const std::size_t len = vs.size();
    std::vector<std::vector<Sign>> choices(len);
    for (std::size_t t = 0; t < len; ++t) {
      const int from = vs[t];
      const int to = vs[(t + 1) % len];
      if (g.has_edge(from, to, Sign::Negative)) choices[t].push_back(Sign::Negative);
      if (g.has_edge(from, to, Sign::Positive)) choices[t].push_back(Sign::Positive);
    }
    std::vector<Sign> current(len);
    std::function<void(std::size_t)> expand = [&](std::size_t t) {
      if (t == len) {
        if (out.size() >= cap) {
          throw CycleLimitExceeded("signed cycle enumeration exceeded the cap of " +
                                   std::to_string(cap) + " cycles");
        }
        out.emplace_back(vs, current);
        return;
      }
      for (Sign s : choices[t]) {
        current[t] = s;
        expand(t + 1);
      }
    };
    expand(0);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

Digraph::Digraph(int vertices)
    : n_(vertices), out_(static_cast<std::size_t>(std::max(vertices, 0)), 0) {
  check_vertex_count(vertices);
}

void Digraph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " outside digraph of " +
                            std::to_string(n_) + " vertices");
  }
}

void Digraph::add_edge(int from, int to) {
  check_vertex(from);
  check_vertex(to);
  out_[static_cast<std::size_t>(from)] |= bit(to);
}

bool Digraph::has_edge(int from, int to) const {
  if (from < 0 || from >= n_ || to < 0 || to >= n_) return false;
  return (out_[static_cast<std::size_t>(from)] & bit(to)) != 0;
}

VertexSet Digraph::in(int v) const {
  VertexSet set = 0;
  for (int u = 0; u < n_; ++u) {
    if (has_edge(u, v)) set |= bit(u);
  }
  return set;
}

int Digraph::out_degree(int v) const { return std::popcount(out(v)); }
int Digraph::in_degree(int v) const { return std::popcount(in(v)); }

std::size_t Digraph::edge_count() const {
  std::size_t count = 0;
  for (VertexSet row : out_) count += static_cast<std::size_t>(std::popcount(row));
  return count;
}

std::vector<std::pair<int, int>> Digraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v < n_; ++v) for_each_vertex(this->out(v), [&](int w) { out.emplace_back(v, w); });
  return out;
}

Digraph Digraph::transpose() const {
  Digraph t(n_);
  for (auto [u, v] : edges()) t.add_edge(v, u);
  return t;
}

Digraph underlying(const SignedDigraph& g) {
  Digraph d(g.vertex_count());
  for (const auto& e : g.edges()) d.add_edge(e.from, e.to);
  return d;
}

std::vector<std::vector<int>> enumerate_cycles(const Digraph& d, std::size_t cap) {
  auto cycles = elementary_cycles(d.adjacency(), cap);
  std::sort(cycles.begin(), cycles.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return cycles;
}

std::string to_dot(const SignedDigraph& g, std::string_view name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (int v = 0; v < g.vertex_count(); ++v) out << "  v" << v << ";\n";
  for (const auto& e : g.edges()) {
    out << "  v" << e.from << " -> v" << e.to;
    if (e.sign == Sign::Positive) {
      out << " [label=\"+\", style=solid];\n";
    } else {
      out << " [label=\"−\", style=dashed];\n";
    }
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const Digraph& d, std::string_view name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  for (int v = 0; v < d.vertex_count(); ++v) out << "  v" << v << ";\n";
  for (auto [u, v] : d.edges()) out << "  v" << u << " -> v" << v << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_edge_list(const Digraph& d) {
  std::ostringstream out;
  out << "# n=" << d.vertex_count() << '\n';
  for (auto [u, v] : d.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Digraph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      const auto pos = line.find("n=", first);
      if (pos != std::string::npos && n < 0) n = std::stoi(line.substr(pos + 2));
      continue;
    }
    std::istringstream fields(line);
    int u = 0;
    int v = 0;
    std::string extra;
    if (!(fields >> u >> v) || (fields >> extra)) {
      throw std::invalid_argument("edge list line " + std::to_string(line_no) +
                                  ": expected \"u v\"");
    }
    edges.emplace_back(u, v);
  }
  if (n < 0) {
    n = 0;
    for (auto [u, v] : edges) n = std::max({n, u + 1, v + 1});
  }
  Digraph d(n);
  for (auto [u, v] : edges) d.add_edge(u, v);
  return d;
}

Digraph parse_dot_digraph(std::string_view text) {
  // Reads "vN" tokens; a line "vA -> vB ..." is an edge, a line "vA;" a vertex.
  auto read_vertex = [](const std::string& line, std::size_t& pos) -> int {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    if (pos >= line.size() || line[pos] != 'v') return -1;
    const std::size_t start = ++pos;
    while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) ++pos;
    if (pos == start) return -1;
    return std::stoi(line.substr(start, pos - start));
  };
  std::vector<std::pair<int, int>> edges;
  int n = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::size_t pos = 0;
    const int u = read_vertex(line, pos);
    if (u < 0) continue;
    n = std::max(n, u + 1);
    const auto arrow = line.find("->", pos);
    if (arrow == std::string::npos) continue;
    pos = arrow + 2;
    const int v = read_vertex(line, pos);
    if (v < 0) throw std::invalid_argument("DOT edge without a vN target: " + line);
    n = std::max(n, v + 1);
    edges.emplace_back(u, v);
  }
  Digraph d(n);
  for (auto [u, v] : edges) d.add_edge(u, v);
  return d;
}

}  // namespace bnscope
