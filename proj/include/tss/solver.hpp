#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include "tss/graph.hpp"
#include "tss/thresholds.hpp"

namespace tss {

struct SolveLimits {
  std::size_t max_vertices = 24;
  std::chrono::milliseconds time_budget{0};  // zero means unlimited
  std::optional<std::size_t> max_size;       // give up above this seed size
  unsigned threads = 0;                      // zero picks hardware concurrency (capped at 8)
};

enum class SolveStatus { optimal, budget_exceeded };
std::string to_string(SolveStatus s);

struct SolveResult {
  std::size_t optimum = 0;  // best known size when the budget ran out
  VertexSet witness;
  std::uint64_t nodes_explored = 0;
  SolveStatus status = SolveStatus::optimal;
};

/// Smallest influencing seed by size-ascending enumeration of k-subsets.
/// Vertices with threshold above their degree are fixed into every candidate
/// and threshold-0 vertices are never seeded. The witness is the
/// lexicographically least optimal seed. Errors: TooLarge.
SolveResult exact_min_seed(const Graph& g, const ThresholdAssignment& theta, const SolveLimits& limits = {});

enum class Verdict { confirmed, refuted, inconclusive };
std::string to_string(Verdict v);

struct OptimalityCheck {
  Verdict verdict = Verdict::inconclusive;
  std::optional<std::size_t> optimum;
  VertexSet witness;   // an optimal seed when the search finished
  std::string reason;  // set when inconclusive
};

/// confirmed iff min-seed equals `claimed`; refuted carries an optimal witness.
/// TooLarge and an exhausted budget both come back as inconclusive.
OptimalityCheck verify_optimality(const Graph& g, const ThresholdAssignment& theta, std::size_t claimed,
                                  const SolveLimits& limits = {});

}  // namespace tss
