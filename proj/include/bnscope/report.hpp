#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bnscope/dynamics.hpp"
#include "bnscope/interaction.hpp"

namespace bnscope {

struct AnalysisOptions {
  bool fixed_points = true;
  bool attractors = true;
  bool nonexpansive = true;
  std::optional<SignFilter> local_cycles = SignFilter::All;
  std::string source;
};

struct CycleCensus {
  std::size_t positive = 0;
  std::size_t negative = 0;
};

struct AnalysisReport {
  int n = 0;
  std::string source;
  std::optional<std::vector<Word>> fixed_points;
  std::optional<std::vector<Attractor>> attractors;
  SignedDigraph global_graph;
  /// Cycles of the global graph; empty when enumeration hit the cycle cap.
  std::optional<CycleCensus> global_cycles;
  SignFilter local_filter = SignFilter::All;
  std::optional<std::vector<LocalCycle>> local_cycles;
  std::optional<bool> nonexpansive;
  std::vector<std::pair<std::string, double>> timings;  // seconds per phase

  /// Keys appear in a fixed order; timings only when requested.
  std::string to_json(bool with_timings = false) const;
  std::string to_text(bool with_timings = false) const;
};

AnalysisReport analyze(const BooleanNetwork& f, const AnalysisOptions& options);

/// Asynchronous graph with bitstring node names.
std::string async_dot(const BooleanNetwork& f, std::string_view name = "async");

}  // namespace bnscope
