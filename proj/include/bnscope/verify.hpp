#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bnscope {

struct CheckResult {
  std::string claim;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::string name;
  std::vector<CheckResult> checks;

  bool passed() const;
  void add(std::string claim, bool ok, std::string detail = {});
};

/// The 4-dimensional seed, its quasi-delocalizing function, and the
/// 12-dimensional fixed-point-free and-net without local negative cycle.
VerifyReport verify_fixed_point_free_construction();

/// The kernel-free digraph whose odd cycles all have killing triples.
VerifyReport verify_kernel_free_digraph();

/// Networks with an antipodal attractive cycle and no local negative cycle.
VerifyReport verify_padded_cycle(const std::vector<int>& dimensions);

/// Delocalizing-triple locality against exhaustive witness search on random and-nets.
VerifyReport verify_andnet_locality(int samples, std::uint64_t seed);

/// Fixed points and attractive cycles under reduction, plus the regression
/// where reduction creates an attractive cycle.
VerifyReport verify_reduction_dynamics(int samples, std::uint64_t seed);

/// The Jacobian identity for reduced networks.
VerifyReport verify_reduction_jacobian(int samples, std::uint64_t seed);

/// Cycle sign = parity of the cycle's overlap with the degrees of freedom.
VerifyReport verify_sign_parity(int samples, std::uint64_t seed);

/// Isometry counts for small n and T-equivariance of the padded-cycle network.
VerifyReport verify_isometries();

/// Atlas neighbourhoods of radius 1 by brute force.
VerifyReport verify_neighbor_list_claims(const std::vector<int>& dimensions);

/// Deterministic corpus of networks without loop on coordinate k, used by
/// the reduction checks: half uniform, half built from single-bit moves so
/// attractive cycles are common.
struct ReducibleSample {
  int k = 0;
  std::vector<std::uint32_t> images;
  int n = 0;
};
ReducibleSample reducible_sample(std::uint64_t seed, int max_dimension = 6);

}  // namespace bnscope
