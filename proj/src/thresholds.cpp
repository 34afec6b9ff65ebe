#include "tss/thresholds.hpp"

#include <string>

#include "tss/error.hpp"

namespace tss {

ThresholdAssignment::ThresholdAssignment(std::vector<int> values) : values_(std::move(values)) {
  for (int x : values_) {
    if (x < 0) throw Error(ErrorKind::BadParam, "negative threshold " + std::to_string(x));
  }
}

std::optional<int> ThresholdAssignment::constant_value() const {
  if (values_.empty()) return std::nullopt;
  for (int x : values_) {
    if (x != values_.front()) return std::nullopt;
  }
  return values_.front();
}

void ThresholdAssignment::check_against(const Graph& g) const {
  if (values_.size() != g.vertex_count()) {
    throw Error(ErrorKind::SizeMismatch, "threshold assignment has " + std::to_string(values_.size()) +
                                             " entries for a graph with " + std::to_string(g.vertex_count()) +
                                             " vertices");
  }
}

ThresholdAssignment constant_threshold(const Graph& g, int k) {
  if (k < 0) throw Error(ErrorKind::BadParam, "constant threshold must be >= 0");
  return ThresholdAssignment(std::vector<int>(g.vertex_count(), k));
}

ThresholdAssignment majority_threshold(const Graph& g) {
  std::vector<int> values(g.vertex_count());
  for (VertexId v = 0; v < values.size(); ++v) values[v] = static_cast<int>((g.degree(v) + 1) / 2);
  return ThresholdAssignment(std::move(values));
}

ThresholdAssignment strict_majority_threshold(const Graph& g) {
  std::vector<int> values(g.vertex_count());
  for (VertexId v = 0; v < values.size(); ++v) values[v] = static_cast<int>((g.degree(v) + 2) / 2);
  return ThresholdAssignment(std::move(values));
}

}  // namespace tss
