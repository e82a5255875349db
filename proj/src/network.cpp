#include "bnscope/network.hpp"

#include <random>
#include <string>

namespace bnscope {

BooleanNetwork::BooleanNetwork(int n, std::vector<Word> images, bool force)
    : n_(n), images_(std::move(images)) {
  check_dimension(n, force);
  if (images_.size() != state_count(n)) {
    throw std::invalid_argument("network of dimension " + std::to_string(n) + " needs " +
                                std::to_string(state_count(n)) + " images, got " +
                                std::to_string(images_.size()));
  }
  const Word mask = full_mask(n);
  for (Word y : images_) {
    if ((y & ~mask) != 0) throw std::invalid_argument("image has bits above the dimension");
  }
}

BooleanNetwork BooleanNetwork::identity(int n) {
  return from_function(n, [](Word x) { return x; });
}

BooleanNetwork BooleanNetwork::constant(int n, Word value) {
  check_dimension(n);
  return BooleanNetwork(n, std::vector<Word>(state_count(n), value & full_mask(n)));
}

BooleanNetwork BooleanNetwork::negation(int n) {
  return from_function(n, [n](Word x) { return antipode(x, n); });
}

BooleanNetwork BooleanNetwork::from_function(int n, const std::function<Word(Word)>& fn,
                                             bool force) {
  check_dimension(n, force);
  std::vector<Word> images(state_count(n));
  for (std::uint64_t x = 0; x < images.size(); ++x) images[x] = fn(static_cast<Word>(x));
  return BooleanNetwork(n, std::move(images), force);
}

BooleanNetwork BooleanNetwork::from_tables(const std::vector<std::vector<bool>>& tables,
                                           bool force) {
  const int n = static_cast<int>(tables.size());
  check_dimension(n, force);
  std::vector<Word> images(state_count(n), 0);
  for (int i = 0; i < n; ++i) {
    if (tables[i].size() != images.size()) {
      throw std::invalid_argument("truth table " + std::to_string(i) + " has " +
                                  std::to_string(tables[i].size()) + " entries, expected " +
                                  std::to_string(images.size()));
    }
    for (std::uint64_t x = 0; x < images.size(); ++x) {
      if (tables[i][x]) images[x] |= unit(i);
    }
  }
  return BooleanNetwork(n, std::move(images), force);
}

std::vector<bool> BooleanNetwork::truth_table(int i) const {
  std::vector<bool> table(images_.size());
  for (std::uint64_t x = 0; x < images_.size(); ++x) table[x] = test_bit(images_[x], i);
  return table;
}

State eval(const BooleanNetwork& f, const State& x) {
  if (x.n != f.dimension()) {
    throw DimensionError("eval: state of dimension " + std::to_string(x.n) +
                         " on network of dimension " + std::to_string(f.dimension()));
  }
  return State(f(x.bits), x.n);
}

BooleanNetwork random_network(int n, std::uint64_t seed) {
  check_dimension(n);
  std::mt19937_64 rng(seed);
  const Word mask = full_mask(n);
  std::vector<Word> images(state_count(n));
  for (auto& y : images) y = static_cast<Word>(rng()) & mask;
  return BooleanNetwork(n, std::move(images));
}

}  // namespace bnscope
