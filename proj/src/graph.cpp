#include "tss/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "tss/error.hpp"

namespace tss {

namespace {

void check_vertex(std::size_t n, VertexId v) {
  if (v >= n) {
    throw Error(ErrorKind::VertexOutOfRange,
                "vertex " + std::to_string(v) + " not below " + std::to_string(n));
  }
}

}  // namespace

VertexSet::VertexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

VertexSet::VertexSet(std::size_t universe, std::span<const VertexId> members) : VertexSet(universe) {
  for (VertexId v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~std::uint64_t{0};
  if (universe % 64 != 0 && !s.words_.empty()) {
    s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
  }
  return s;
}

std::size_t VertexSet::size() const noexcept {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool VertexSet::insert(VertexId v) {
  check_vertex(universe_, v);
  auto& word = words_[v >> 6];
  const std::uint64_t bit = std::uint64_t{1} << (v & 63);
  const bool fresh = (word & bit) == 0;
  word |= bit;
  return fresh;
}

void VertexSet::erase(VertexId v) {
  check_vertex(universe_, v);
  words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  if (universe_ != other.universe_) throw Error(ErrorKind::SizeMismatch, "vertex sets over different universes");
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  if (universe_ != other.universe_) throw Error(ErrorKind::SizeMismatch, "vertex sets over different universes");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

std::vector<VertexId> VertexSet::members() const {
  std::vector<VertexId> out;
  out.reserve(size());
  for (std::size_t w = 0; w < words_.size(); ++w) {
    auto word = words_[w];
    while (word != 0) {
      const int bit = std::countr_zero(word);
      out.push_back(static_cast<VertexId>(w * 64 + static_cast<std::size_t>(bit)));
      word &= word - 1;
    }
  }
  return out;
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
  check_vertex(vertex_count(), v);
  return {adjacency_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
}

std::size_t Graph::degree(VertexId v) const {
  check_vertex(vertex_count(), v);
  return offsets_[v + 1] - offsets_[v];
}

double Graph::average_degree() const noexcept {
  const auto n = vertex_count();
  return n == 0 ? 0.0 : 2.0 * static_cast<double>(edge_count()) / static_cast<double>(n);
}

bool Graph::has_edge(VertexId a, VertexId b) const {
  auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

bool Graph::is_connected() const {
  const auto n = vertex_count();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

std::string Graph::label(VertexId v) const {
  check_vertex(vertex_count(), v);
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

std::optional<VertexId> Graph::find_label(const std::string& label) const {
  auto it = label_index_.find(label);
  if (it == label_index_.end()) return std::nullopt;
  return it->second;
}

Graph build_graph(std::size_t vertex_count, std::span<const Edge> edges, std::vector<std::string> labels) {
  Graph g;
  g.edges_.reserve(edges.size());
  for (auto [a, b] : edges) {
    check_vertex(vertex_count, a);
    check_vertex(vertex_count, b);
    if (a == b) throw Error(ErrorKind::SelfLoop, "self-loop at vertex " + std::to_string(a));
    g.edges_.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

  std::vector<std::size_t> deg(vertex_count, 0);
  for (auto [a, b] : g.edges_) {
    ++deg[a];
    ++deg[b];
  }
  g.offsets_.assign(vertex_count + 1, 0);
  for (std::size_t v = 0; v < vertex_count; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.adjacency_.resize(2 * g.edges_.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (auto [a, b] : g.edges_) {
    g.adjacency_[cursor[a]++] = b;
    g.adjacency_[cursor[b]++] = a;
  }
  for (std::size_t v = 0; v < vertex_count; ++v) {
    std::sort(g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
  }
  g.max_degree_ = deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());

  if (!labels.empty()) {
    if (labels.size() != vertex_count) {
      throw Error(ErrorKind::BadParam, "label count " + std::to_string(labels.size()) +
                                           " differs from vertex count " + std::to_string(vertex_count));
    }
    for (std::size_t v = 0; v < labels.size(); ++v) {
      if (!g.label_index_.emplace(labels[v], static_cast<VertexId>(v)).second) {
        throw Error(ErrorKind::DuplicateLabel, "label '" + labels[v] + "' used twice");
      }
    }
    g.labels_ = std::move(labels);
  }
  return g;
}

std::size_t degree(const Graph& g, VertexId v) { return g.degree(v); }

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  const auto n = g.vertex_count();
  InducedSubgraph out;
  out.old_to_new.assign(n, std::nullopt);
  for (VertexId v : keep.members()) {
    check_vertex(n, v);
    out.old_to_new[v] = static_cast<VertexId>(out.new_to_old.size());
    out.new_to_old.push_back(v);
  }
  std::vector<Edge> edges;
  for (auto [a, b] : g.edges()) {
    if (out.old_to_new[a] && out.old_to_new[b]) edges.emplace_back(*out.old_to_new[a], *out.old_to_new[b]);
  }
  std::vector<std::string> labels;
  if (g.has_labels()) {
    for (VertexId old : out.new_to_old) labels.push_back(g.label(old));
  }
  out.graph = build_graph(out.new_to_old.size(), edges, std::move(labels));
  return out;
}

}  // namespace tss
