#pragma once

#include <optional>
#include <vector>

#include "tss/graph.hpp"

namespace tss {

/// Per-vertex activation thresholds, paired with one graph by vertex count.
/// A value above the vertex degree is legal; such a vertex must be seeded.
class ThresholdAssignment {
 public:
  ThresholdAssignment() = default;
  /// Throws BadParam on a negative entry.
  explicit ThresholdAssignment(std::vector<int> values);

  std::size_t size() const noexcept { return values_.size(); }
  int operator[](VertexId v) const { return values_[v]; }
  const std::vector<int>& values() const noexcept { return values_; }

  /// The common value when every entry is equal (and the assignment non-empty).
  std::optional<int> constant_value() const;

  /// Throws SizeMismatch when the assignment does not belong to g.
  void check_against(const Graph& g) const;

  friend bool operator==(const ThresholdAssignment&, const ThresholdAssignment&) = default;

 private:
  std::vector<int> values_;
};

ThresholdAssignment constant_threshold(const Graph& g, int k);
/// ceil(d(v)/2)
ThresholdAssignment majority_threshold(const Graph& g);
/// ceil((d(v)+1)/2)
ThresholdAssignment strict_majority_threshold(const Graph& g);

}  // namespace tss
