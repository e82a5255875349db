#include "bnscope/state.hpp"

namespace bnscope {

void check_dimension(int n, bool force) {
  const int guard = force ? kMaxDimension : kDefaultDimensionGuard;
  if (n < 0 || n > guard) {
    throw DimensionError("dimension " + std::to_string(n) + " outside [0, " +
                         std::to_string(guard) + "]" +
                         (force ? "" : " (use force to lift the guard)"));
  }
}

IndexSet make_index_set(std::initializer_list<int> indices) {
  IndexSet set = 0;
  for (int i : indices) set |= unit(i);
  return set;
}

std::vector<int> indices_of(IndexSet set) {
  std::vector<int> out;
  while (set != 0) {
    out.push_back(std::countr_zero(set));
    set &= set - 1;
  }
  return out;
}

State::State(Word bits_, int n_) : bits(bits_), n(n_) {
  if (n_ < 0 || n_ > kMaxDimension) throw DimensionError("state dimension out of range");
  if ((bits_ & ~full_mask(n_)) != 0) {
    throw std::invalid_argument("state has bits above its dimension");
  }
}

int hamming(const State& x, const State& y) {
  if (x.n != y.n) {
    throw DimensionError("hamming: dimension mismatch (" + std::to_string(x.n) + " vs " +
                         std::to_string(y.n) + ")");
  }
  return popcount(x.bits ^ y.bits);
}

State antipode(const State& x) { return State(antipode(x.bits, x.n), x.n); }

std::string to_bitstring(Word x, int n) {
  std::string out(static_cast<std::size_t>(n), '0');
  for (int i = 0; i < n; ++i) {
    if (test_bit(x, i)) out[static_cast<std::size_t>(i)] = '1';
  }
  return out;
}

std::string to_bitstring(const State& x) { return to_bitstring(x.bits, x.n); }

State parse_bitstring(std::string_view text) {
  if (text.size() > static_cast<std::size_t>(kMaxDimension)) {
    throw std::invalid_argument("bitstring too long");
  }
  Word bits = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      bits |= unit(static_cast<int>(i));
    } else if (text[i] != '0') {
      throw std::invalid_argument("bitstring may only contain 0 and 1: '" + std::string(text) +
                                  "'");
    }
  }
  return State(bits, static_cast<int>(text.size()));
}

std::string format_index_set(IndexSet set) {
  std::string out = "{";
  bool first = true;
  for (int i : indices_of(set)) {
    if (!first) out += ',';
    out += std::to_string(i);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace bnscope
