#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "tss/graph.hpp"
#include "tss/thresholds.hpp"

namespace tss {

/// Round-by-round record of the parallel activation process.
/// rounds[t] holds the vertices that became active at step t+1.
struct ActivationTrace {
  VertexSet seed;
  std::vector<std::vector<VertexId>> rounds;
  VertexSet final;
};

/// Order in which vertices of V \ S turn active one at a time.
struct ConvincedSequence {
  std::vector<VertexId> order;

  ConvincedSequence& operator+=(const ConvincedSequence& tail);
  std::size_t size() const noexcept { return order.size(); }
  friend bool operator==(const ConvincedSequence&, const ConvincedSequence&) = default;
};

/// Concatenation of convinced subsequences.
ConvincedSequence operator+(ConvincedSequence head, const ConvincedSequence& tail);

struct SequenceViolation {
  std::size_t position;  // 1-based index into the sequence
  VertexId vertex;
  int active_neighbors;
  int threshold;
};

struct SequenceCheck {
  bool ok = false;              // every step satisfied its threshold
  bool full_influence = false;  // ok and seed plus sequence covers V(g)
  std::optional<SequenceViolation> violation;
};

enum class OrderKind { lowest_id, highest_id, random };

/// Chooses which eligible vertex activates next in the sequential process.
struct OrderPolicy {
  OrderKind kind = OrderKind::lowest_id;
  std::uint64_t rng_seed = 0;

  static OrderPolicy lowest_id() { return {OrderKind::lowest_id, 0}; }
  static OrderPolicy highest_id() { return {OrderKind::highest_id, 0}; }
  static OrderPolicy random(std::uint64_t seed) { return {OrderKind::random, seed}; }
};

/// Reusable closure workspace with per-vertex active-neighbor counters.
/// Not thread-safe; give each worker its own engine.
class ClosureEngine {
 public:
  ClosureEngine(const Graph& g, const ThresholdAssignment& theta);

  /// Runs the process from seed and returns the size of the closure.
  std::size_t run(std::span<const VertexId> seed);
  bool active(VertexId v) const { return active_[v] != 0; }
  VertexSet active_set() const;

 private:
  const Graph* graph_;
  std::vector<int> theta_;
  std::vector<char> active_;
  std::vector<int> count_;
  std::vector<VertexId> stack_;
};

VertexSet closure(const Graph& g, const ThresholdAssignment& theta, const VertexSet& seed);
ActivationTrace parallel_trace(const Graph& g, const ThresholdAssignment& theta, const VertexSet& seed);
bool is_influencing(const Graph& g, const ThresholdAssignment& theta, const VertexSet& seed);

/// Errors: DuplicateVertex, SeedOverlap, VertexOutOfRange, SizeMismatch.
SequenceCheck validate_convinced_sequence(const Graph& g, const ThresholdAssignment& theta, const VertexSet& seed,
                                          const ConvincedSequence& alpha);

/// Sequential process; returns the activation order it produced.
ConvincedSequence sequential_order(const Graph& g, const ThresholdAssignment& theta, const VertexSet& seed,
                                   OrderPolicy policy);
VertexSet sequential_closure(const Graph& g, const ThresholdAssignment& theta, const VertexSet& seed,
                             OrderPolicy policy);

/// Flattens a trace's rounds into a convinced sequence.
ConvincedSequence sequence_from_trace(const ActivationTrace& trace);

}  // namespace tss
