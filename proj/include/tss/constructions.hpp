#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tss/activation.hpp"
#include "tss/families.hpp"
#include "tss/graph.hpp"

namespace tss {

/// Which constructive case produced a seed.
///   T3       cycle permutation graphs, threshold 2
///   T4       generalized Petersen graphs, threshold 2
///   T5       torus cordalis with n = 3
///   T6a..c   n = 3s, s >= 2, split by parity of m and s
///   T7c1..3  n = 3s+1
///   T8c1..6  n = 3s+2, split by m mod 4 and parity of s
///   T9even/T9odd  m divisible by 3
///   fallback banded seed within the ceil(m/3)(n+1) bound
enum class TheoremCase {
  T3, T4, T5, T6a, T6b, T6c, T7c1, T7c2, T7c3,
  T8c1, T8c2, T8c3, T8c4, T8c5, T8c6, T9even, T9odd, fallback,
};

enum class ClaimKind { exact, upper_bound, upper_bound_gap_one };

/// Theorem families for the torus cordalis; used to force a particular
/// construction instead of the dispatcher's preference.
enum class CordalisTheorem { T5, T6, T7, T8, T9, fallback };

std::string to_string(TheoremCase c);
std::string to_string(ClaimKind k);
std::string to_string(CordalisTheorem t);
std::optional<CordalisTheorem> parse_cordalis_theorem(const std::string& name);

ClaimKind claim_kind(TheoremCase c);

/// Closed-form seed size for a case. For T3 and T4 `m` is the cycle length
/// (n resp. m) and `n` is ignored; for fallback it is the ceil(m/3)(n+1) cap.
std::int64_t case_formula(TheoremCase c, std::size_t m, std::size_t n);

struct SeedReport {
  Family family = Family::torus_cordalis;
  std::size_t m = 0;
  std::size_t n = 0;  // s for generalized Petersen graphs
  Graph graph;
  VertexSet seed;
  std::size_t size = 0;
  TheoremCase theorem_case = TheoremCase::fallback;
  ClaimKind claimed = ClaimKind::upper_bound;
  std::int64_t lower_bound = 0;
  ConvincedSequence sequence;
  bool verified = false;
};

/// Seed for (P_p, 2): odd positions x1,x3,... plus x_p when p is even.
/// Ids are path ids 0..p-1. p == 1 gives {x1}.
VertexSet path_seed_k2(std::size_t p);
/// The even positions not covered by path_seed_k2, left to right.
ConvincedSequence path_sequence_k2(std::size_t p);

SeedReport seed_cycle_permutation(std::size_t n, const Permutation& pi);
SeedReport seed_generalized_petersen(std::size_t m, std::size_t s);

SeedReport seed_cordalis_n3(std::size_t m);
/// n = 3s with s >= 2.
SeedReport seed_cordalis_n3s(std::size_t m, std::size_t s);
SeedReport seed_cordalis_n1mod3(std::size_t m, std::size_t n);
SeedReport seed_cordalis_n2mod3(std::size_t m, std::size_t n);
SeedReport seed_cordalis_m0mod3(std::size_t m, std::size_t n);
/// Two-row checkerboard bands of three rows plus one extra vertex per band.
SeedReport seed_cordalis_fallback(std::size_t m, std::size_t n);

/// Theorem families whose hypotheses hold for (m,n), in dispatch preference
/// order. Never contains fallback.
std::vector<CordalisTheorem> applicable_theorems(std::size_t m, std::size_t n);
SeedReport seed_torus_cordalis_by(std::size_t m, std::size_t n, CordalisTheorem theorem);
/// Best applicable construction; fallback when no theorem applies.
SeedReport seed_torus_cordalis(std::size_t m, std::size_t n);

}  // namespace tss
