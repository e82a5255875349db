#include "bnscope/sweep.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace bnscope {
namespace {

int threads_from_env() {
  const char* value = std::getenv("BNSCOPE_THREADS");
  if (value == nullptr) return 1;
  try {
    return std::max(1, std::stoi(value));
  } catch (const std::exception&) {
    return 1;
  }
}

std::atomic<int>& thread_setting() {
  static std::atomic<int> setting{threads_from_env()};
  return setting;
}

}  // namespace

int thread_count() { return thread_setting().load(std::memory_order_relaxed); }

void set_thread_count(int threads) {
  thread_setting().store(std::max(1, threads), std::memory_order_relaxed);
}

}  // namespace bnscope
