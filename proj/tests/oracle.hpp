#pragma once

// Deliberately naive reference implementations. They share nothing with the
// library beyond the Graph accessors.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "tss/graph.hpp"

namespace oracle {

using Adjacency = std::vector<std::vector<int>>;

inline Adjacency adjacency(const tss::Graph& g) {
  Adjacency adj(g.vertex_count());
  for (auto [a, b] : g.edges()) {
    adj[a].push_back(static_cast<int>(b));
    adj[b].push_back(static_cast<int>(a));
  }
  return adj;
}

// Rescan every vertex until nothing changes; the parallel rule round by round.
inline std::vector<std::vector<int>> rounds(const Adjacency& adj, const std::vector<int>& theta,
                                            std::vector<char>& active) {
  std::vector<std::vector<int>> out;
  while (true) {
    std::vector<int> fresh;
    for (std::size_t v = 0; v < adj.size(); ++v) {
      if (active[v]) continue;
      int count = 0;
      for (int w : adj[v]) count += active[w] ? 1 : 0;
      if (count >= theta[v]) fresh.push_back(static_cast<int>(v));
    }
    if (fresh.empty()) return out;
    for (int v : fresh) active[v] = 1;
    out.push_back(std::move(fresh));
  }
}

inline std::vector<char> closure(const Adjacency& adj, const std::vector<int>& theta, std::vector<char> active) {
  rounds(adj, theta, active);
  return active;
}

inline bool influences(const Adjacency& adj, const std::vector<int>& theta, std::uint64_t mask) {
  std::vector<char> active(adj.size());
  for (std::size_t v = 0; v < adj.size(); ++v) active[v] = ((mask >> v) & 1U) != 0;
  active = closure(adj, theta, active);
  return std::all_of(active.begin(), active.end(), [](char c) { return c != 0; });
}

inline std::vector<int> members(std::uint64_t mask) {
  std::vector<int> out;
  for (int v = 0; mask != 0; ++v, mask >>= 1) {
    if (mask & 1U) out.push_back(v);
  }
  return out;
}

struct MinSeed {
  std::size_t size = 0;
  std::vector<int> witness;  // lexicographically least among optimal seeds
};

// Every subset of V, no pruning. Fine up to ~16 vertices.
inline MinSeed min_seed(const Adjacency& adj, const std::vector<int>& theta) {
  const auto n = adj.size();
  MinSeed best{n + 1, {}};
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const auto k = static_cast<std::size_t>(std::popcount(mask));
    if (k > best.size) continue;
    if (!influences(adj, theta, mask)) continue;
    auto m = members(mask);
    if (k < best.size || m < best.witness) best = {k, std::move(m)};
  }
  return best;
}

// Random spanning tree plus each remaining pair with probability p.
inline std::vector<tss::Edge> random_connected_edges(std::size_t n, double p, std::mt19937_64& rng) {
  std::set<tss::Edge> edges;
  for (std::size_t v = 1; v < n; ++v) {
    const auto parent = std::uniform_int_distribution<std::size_t>(0, v - 1)(rng);
    edges.emplace(static_cast<tss::VertexId>(parent), static_cast<tss::VertexId>(v));
  }
  std::bernoulli_distribution extra(p);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (extra(rng)) edges.emplace(static_cast<tss::VertexId>(a), static_cast<tss::VertexId>(b));
    }
  }
  return {edges.begin(), edges.end()};
}

inline tss::Graph random_connected_graph(std::size_t n, double p, std::mt19937_64& rng) {
  const auto edges = random_connected_edges(n, p, rng);
  return tss::build_graph(n, edges);
}

inline tss::Graph relabel(const tss::Graph& g, const std::vector<tss::VertexId>& perm) {
  std::vector<tss::Edge> edges;
  for (auto [a, b] : g.edges()) edges.emplace_back(perm[a], perm[b]);
  return tss::build_graph(g.vertex_count(), edges);
}

}  // namespace oracle
