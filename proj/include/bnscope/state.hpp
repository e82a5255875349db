#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bnscope {

/// A point of the hypercube packed into a machine word; bit i holds coordinate i.
using Word = std::uint32_t;

/// A subset of coordinates, packed the same way as a Word.
using IndexSet = Word;

/// Hard upper bound on the dimension of anything that is swept exhaustively.
inline constexpr int kMaxDimension = 30;

/// Default dimension guard; lifted by `force`.
inline constexpr int kDefaultDimensionGuard = 24;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws DimensionError unless 0 <= n <= guard (guard is 24 unless forced).
void check_dimension(int n, bool force = false);

inline constexpr Word full_mask(int n) {
  return n >= 32 ? ~Word{0} : ((Word{1} << n) - 1);
}

inline constexpr Word unit(int i) { return Word{1} << i; }

inline constexpr bool test_bit(Word x, int i) { return ((x >> i) & 1U) != 0; }

inline constexpr int popcount(Word x) { return std::popcount(x); }

inline constexpr std::uint64_t state_count(int n) { return std::uint64_t{1} << n; }

/// Index set {0, ..., k-1}.
inline constexpr Word prefix_mask(int k) { return full_mask(k); }

IndexSet make_index_set(std::initializer_list<int> indices);
std::vector<int> indices_of(IndexSet set);

struct State {
  Word bits = 0;
  int n = 0;

  State() = default;
  State(Word bits_, int n_);

  friend bool operator==(const State&, const State&) = default;
};

/// Hamming distance; throws DimensionError on mismatched dimensions.
int hamming(const State& x, const State& y);
inline int hamming(Word x, Word y) { return popcount(x ^ y); }

State antipode(const State& x);
inline Word antipode(Word x, int n) { return x ^ full_mask(n); }

/// Bitstring with coordinate 0 leftmost, e.g. e^{1} in dimension 3 is "010".
std::string to_bitstring(Word x, int n);
std::string to_bitstring(const State& x);

/// Inverse of to_bitstring; throws std::invalid_argument on bad characters.
State parse_bitstring(std::string_view text);

/// "{0,2}" style rendering of an index set.
std::string format_index_set(IndexSet set);

}  // namespace bnscope
