#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "bnscope/state.hpp"

namespace bnscope {

/// A map from the n-dimensional hypercube to itself.
///
/// Stored as the image word of every state, i.e. the n coordinate truth
/// tables transposed: bit i of `image(x)` is entry x of truth table i. Every
/// analysis in the library is a sweep over this array.
class BooleanNetwork {
 public:
  BooleanNetwork() = default;

  /// `images` must have exactly 2^n entries with no bits above n-1.
  BooleanNetwork(int n, std::vector<Word> images, bool force = false);

  static BooleanNetwork identity(int n);
  static BooleanNetwork constant(int n, Word value);
  static BooleanNetwork negation(int n);
  static BooleanNetwork from_function(int n, const std::function<Word(Word)>& fn,
                                      bool force = false);
  /// Builds from n truth tables of 2^n entries each.
  static BooleanNetwork from_tables(const std::vector<std::vector<bool>>& tables,
                                    bool force = false);

  int dimension() const { return n_; }
  std::uint64_t size() const { return images_.size(); }

  Word operator()(Word x) const { return images_[x]; }
  Word image(Word x) const { return images_[x]; }
  bool coordinate(int i, Word x) const { return test_bit(images_[x], i); }
  std::vector<bool> truth_table(int i) const;
  const std::vector<Word>& images() const { return images_; }

  friend bool operator==(const BooleanNetwork&, const BooleanNetwork&) = default;

 private:
  int n_ = 0;
  std::vector<Word> images_{0};
};

/// f(x) with a dimension check.
State eval(const BooleanNetwork& f, const State& x);

/// Uniformly random network, deterministic in (n, seed).
BooleanNetwork random_network(int n, std::uint64_t seed);

}  // namespace bnscope
