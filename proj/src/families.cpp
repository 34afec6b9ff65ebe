#include "tss/families.hpp"

#include <algorithm>
#include <set>

#include "tss/error.hpp"

namespace tss {

namespace {

std::string vlabel(char prefix, std::size_t i) { return std::string(1, prefix) + std::to_string(i); }

std::vector<std::string> torus_labels(std::size_t m, std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(m * n);
  for (std::size_t i = 1; i <= m; ++i) {
    for (std::size_t j = 1; j <= n; ++j) labels.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
  return labels;
}

// Rejects generated edge lists that would collapse under deduplication.
Graph build_simple(std::size_t n, const std::vector<Edge>& edges, std::vector<std::string> labels,
                   const char* family) {
  std::set<Edge> seen;
  for (auto [a, b] : edges) {
    if (!seen.emplace(std::min(a, b), std::max(a, b)).second) {
      throw Error(ErrorKind::NonSimpleResult, std::string(family) + " parameters produce a duplicate edge");
    }
  }
  return build_graph(n, edges, std::move(labels));
}

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorKind::BadParam, message);
}

}  // namespace

Permutation::Permutation(std::vector<std::size_t> mapping) : mapping_(std::move(mapping)) {
  std::vector<char> hit(mapping_.size(), 0);
  for (auto x : mapping_) {
    if (x >= mapping_.size() || hit[x]) throw Error(ErrorKind::BadPermutation, "mapping is not a bijection");
    hit[x] = 1;
  }
}

Permutation Permutation::identity(std::size_t p) {
  std::vector<std::size_t> m(p);
  for (std::size_t i = 0; i < p; ++i) m[i] = i;
  return Permutation(std::move(m));
}

Permutation Permutation::from_one_based(const std::vector<std::size_t>& images) {
  std::vector<std::size_t> m;
  m.reserve(images.size());
  for (auto x : images) {
    if (x == 0) throw Error(ErrorKind::BadPermutation, "1-based image 0");
    m.push_back(x - 1);
  }
  return Permutation(std::move(m));
}

std::size_t Permutation::inverse(std::size_t j) const {
  auto it = std::find(mapping_.begin(), mapping_.end(), j);
  if (it == mapping_.end()) throw Error(ErrorKind::BadParam, "value outside permutation range");
  return static_cast<std::size_t>(it - mapping_.begin());
}

std::string to_string(Family f) {
  switch (f) {
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::cycle_permutation: return "cycle_permutation";
    case Family::generalized_petersen: return "generalized_petersen";
    case Family::toroidal_mesh: return "toroidal_mesh";
    case Family::torus_cordalis: return "torus_cordalis";
    case Family::torus_serpentinus: return "torus_serpentinus";
  }
  return "unknown";
}

VertexId torus_id(std::size_t m, std::size_t n, long i, long j) {
  const long mm = static_cast<long>(m);
  const long nn = static_cast<long>(n);
  const long ii = ((i - 1) % mm + mm) % mm;
  const long jj = ((j - 1) % nn + nn) % nn;
  return static_cast<VertexId>(ii * nn + jj);
}

Graph path(std::size_t n) {
  require(n >= 1, "path needs n >= 1");
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(vlabel('x', i + 1));
  for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return build_simple(n, edges, std::move(labels), "path");
}

Graph cycle(std::size_t n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(vlabel('x', i + 1));
    edges.emplace_back(i, (i + 1) % n);
  }
  return build_simple(n, edges, std::move(labels), "cycle");
}

Graph cycle_permutation(std::size_t n, const Permutation& pi) {
  require(n >= 4, "cycle permutation graph needs n >= 4");
  if (pi.size() != n) throw Error(ErrorKind::BadPermutation, "permutation length differs from n");
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(vlabel('v', i + 1));
  for (std::size_t i = 0; i < n; ++i) labels.push_back(vlabel('u', i + 1));
  for (std::size_t i = 0; i < n; ++i) {
    edges.emplace_back(i, (i + 1) % n);
    edges.emplace_back(n + i, n + (i + 1) % n);
    edges.emplace_back(i, n + pi(i));
  }
  return build_simple(2 * n, edges, std::move(labels), "cycle_permutation");
}

Graph generalized_petersen(std::size_t m, std::size_t s) {
  require(m >= 3, "generalized Petersen graph needs m >= 3");
  require(s >= 1 && s <= (m - 1) / 2, "generalized Petersen graph needs 1 <= s <= floor((m-1)/2)");
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) labels.push_back(vlabel('v', i + 1));
  for (std::size_t i = 0; i < m; ++i) labels.push_back(vlabel('u', i + 1));
  for (std::size_t i = 0; i < m; ++i) {
    edges.emplace_back(i, (i + 1) % m);
    edges.emplace_back(m + i, i);
    edges.emplace_back(m + i, m + (i + s) % m);
  }
  return build_simple(2 * m, edges, std::move(labels), "generalized_petersen");
}

Graph toroidal_mesh(std::size_t m, std::size_t n) {
  require(m >= 3 && n >= 3, "toroidal mesh needs m >= 3 and n >= 3");
  std::vector<Edge> edges;
  for (long i = 1; i <= static_cast<long>(m); ++i) {
    for (long j = 1; j <= static_cast<long>(n); ++j) {
      edges.emplace_back(torus_id(m, n, i, j), torus_id(m, n, i + 1, j));
      edges.emplace_back(torus_id(m, n, i, j), torus_id(m, n, i, j + 1));
    }
  }
  return build_simple(m * n, edges, torus_labels(m, n), "toroidal_mesh");
}

namespace {

std::vector<Edge> cordalis_edges(std::size_t m, std::size_t n) {
  std::vector<Edge> edges;
  const long nn = static_cast<long>(n);
  for (long i = 1; i <= static_cast<long>(m); ++i) {
    for (long j = 1; j <= nn; ++j) {
      edges.emplace_back(torus_id(m, n, i, j), torus_id(m, n, i + 1, j));
      if (j < nn) {
        edges.emplace_back(torus_id(m, n, i, j), torus_id(m, n, i, j + 1));
      } else {
        edges.emplace_back(torus_id(m, n, i, nn), torus_id(m, n, i + 1, 1));
      }
    }
  }
  return edges;
}

}  // namespace

Graph torus_cordalis(std::size_t m, std::size_t n) {
  require(m >= 3 && n >= 2, "torus cordalis needs m >= 3 and n >= 2");
  return build_simple(m * n, cordalis_edges(m, n), torus_labels(m, n), "torus_cordalis");
}

Graph torus_serpentinus(std::size_t m, std::size_t n) {
  require(m >= 3 && n >= 2, "torus serpentinus needs m >= 3 and n >= 2");
  const long mm = static_cast<long>(m);
  std::vector<Edge> edges;
  for (auto e : cordalis_edges(m, n)) {
    // Row wraparound (m,j)(1,j) is replaced by (1,j)(m,j+1).
    const auto a = std::min(e.first, e.second);
    const auto b = std::max(e.first, e.second);
    const bool wrap = a < n && b >= (m - 1) * n && a == b - (m - 1) * n;
    if (!wrap) edges.push_back(e);
  }
  for (long j = 1; j <= static_cast<long>(n); ++j) {
    edges.emplace_back(torus_id(m, n, 1, j), torus_id(m, n, mm, j + 1));
  }
  return build_simple(m * n, edges, torus_labels(m, n), "torus_serpentinus");
}

}  // namespace tss
