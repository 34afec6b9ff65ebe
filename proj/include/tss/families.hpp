#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tss/graph.hpp"

namespace tss {

/// Bijection on {0..p-1}; entry i holds pi(i+1)-1 for a 1-based pi.
class Permutation {
 public:
  /// Throws BadPermutation unless mapping is a bijection on {0..size-1}.
  explicit Permutation(std::vector<std::size_t> mapping);

  static Permutation identity(std::size_t p);
  /// From 1-based images pi(1..p).
  static Permutation from_one_based(const std::vector<std::size_t>& images);

  std::size_t size() const noexcept { return mapping_.size(); }
  std::size_t operator()(std::size_t i) const { return mapping_.at(i); }
  std::size_t inverse(std::size_t j) const;
  const std::vector<std::size_t>& mapping() const noexcept { return mapping_; }

 private:
  std::vector<std::size_t> mapping_;
};

enum class Family { path, cycle, cycle_permutation, generalized_petersen, toroidal_mesh, torus_cordalis, torus_serpentinus };

std::string to_string(Family f);

// Torus coordinates are 1-based (i,j), 1<=i<=m, 1<=j<=n, and map row-major to
// id (i-1)*n + (j-1). Labels read "(i,j)".
VertexId torus_id(std::size_t m, std::size_t n, long i, long j);

Graph path(std::size_t n);
Graph cycle(std::size_t n);
/// Ids 0..n-1 are v_1..v_n, ids n..2n-1 are u_1..u_n; edges v_i u_pi(i).
Graph cycle_permutation(std::size_t n, const Permutation& pi);
/// Same id layout as cycle_permutation: v_i first, then u_i.
Graph generalized_petersen(std::size_t m, std::size_t s);
Graph toroidal_mesh(std::size_t m, std::size_t n);
Graph torus_cordalis(std::size_t m, std::size_t n);
Graph torus_serpentinus(std::size_t m, std::size_t n);

}  // namespace tss
