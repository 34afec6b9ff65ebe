#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace tss {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

/// Dense bitset over the ids 0..universe-1.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe);
  VertexSet(std::size_t universe, std::span<const VertexId> members);

  static VertexSet full(std::size_t universe);

  std::size_t universe() const noexcept { return universe_; }
  std::size_t size() const noexcept;
  bool empty() const noexcept { return size() == 0; }

  bool contains(VertexId v) const noexcept {
    return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1U) != 0;
  }
  /// Returns true if v was newly inserted. Throws VertexOutOfRange.
  bool insert(VertexId v);
  void erase(VertexId v);

  bool is_subset_of(const VertexSet& other) const;
  VertexSet& operator|=(const VertexSet& other);

  /// Members in ascending id order.
  std::vector<VertexId> members() const;

  friend bool operator==(const VertexSet& a, const VertexSet& b) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Immutable simple undirected graph with contiguous ids and optional labels.
///
/// Edges are kept in canonical (min,max) order, sorted. Adjacency is stored in
/// CSR form so neighbor lists are contiguous spans.
class Graph {
 public:
  Graph() = default;

  std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::span<const VertexId> neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const;
  std::size_t max_degree() const noexcept { return max_degree_; }
  double average_degree() const noexcept;
  bool has_edge(VertexId a, VertexId b) const;
  bool is_connected() const;

  bool has_labels() const noexcept { return !labels_.empty(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// Display label, or the decimal id when the graph is unlabeled.
  std::string label(VertexId v) const;
  std::optional<VertexId> find_label(const std::string& label) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count() == b.vertex_count() && a.edges_ == b.edges_;
  }

 private:
  friend Graph build_graph(std::size_t, std::span<const Edge>, std::vector<std::string>);

  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> adjacency_;
  std::size_t max_degree_ = 0;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, VertexId> label_index_;
};

/// Builds a graph, deduplicating edges by unordered-pair equality.
/// Errors: SelfLoop, VertexOutOfRange, DuplicateLabel, BadParam (label count).
Graph build_graph(std::size_t vertex_count, std::span<const Edge> edges,
                  std::vector<std::string> labels = {});

std::size_t degree(const Graph& g, VertexId v);

struct InducedSubgraph {
  Graph graph;
  /// old id -> new id; nullopt for vertices outside the kept set.
  std::vector<std::optional<VertexId>> old_to_new;
  /// new id -> old id.
  std::vector<VertexId> new_to_old;
};

/// G[keep]: new ids follow ascending old-id order; labels carry over.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

}  // namespace tss
