#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "tss/bounds.hpp"
#include "tss/error.hpp"
#include "tss/families.hpp"
#include "tss/thresholds.hpp"

using namespace tss;

TEST_CASE("lemma bound examples") {
  CHECK(lower_bound_lemma(generalized_petersen(5, 2), 2) == 3);
  CHECK(lower_bound_lemma(torus_cordalis(12, 14), 3) == 57);
  // k equal to the maximum degree: every edge needs a seeded endpoint
  CHECK(lower_bound_lemma(cycle(4), 2) == 2);
  CHECK(lower_bound_lemma(cycle(5), 2) == 3);
  CHECK(lower_bound_lemma(cycle_permutation(4, Permutation::identity(4)), 3) == 4);
  CHECK(lower_bound_lemma(path(4), 3) == 4);
  CHECK(lower_bound_lemma(path(5), 1) == 0);
  CHECK_THROWS_AS(lower_bound_lemma(cycle(4), 0), Error);
  const std::vector<Edge> split{{0, 1}, {2, 3}};
  CHECK_THROWS_AS(lower_bound_lemma(build_graph(4, split), 2), Error);
}

TEST_CASE("torus closed forms") {
  CHECK(tss_lower_bound_torus(11, 3) == 12);
  CHECK(tss_lower_bound_torus(9, 9) == 28);
  CHECK(tss_lower_bound_torus(3, 3) == 4);
  CHECK(flocchini_upper(9, 9, TorusVariant::cordalis) == 30);
  CHECK(flocchini_upper(4, 3, TorusVariant::mesh) == 5);
  CHECK(flocchini_upper(3, 3, TorusVariant::cordalis) == 4);
  CHECK_THROWS_AS(tss_lower_bound_torus(2, 3), Error);
  CHECK_THROWS_AS(flocchini_upper(3, 2, TorusVariant::mesh), Error);
  CHECK_NOTHROW(flocchini_upper(3, 2, TorusVariant::serpentinus));
}

TEST_CASE("torus lower bound never exceeds the upper bounds") {
  for (std::int64_t m = 3; m <= 40; ++m) {
    for (std::int64_t n = 2; n <= 40; ++n) {
      CHECK(tss_lower_bound_torus(m, n) <= flocchini_upper(m, n, TorusVariant::cordalis));
      if (m * n <= 400) {
        const auto b = torus_bounds(m, n, TorusVariant::cordalis);
        REQUIRE(b.upper.has_value());
        CHECK(b.lower <= *b.upper);
        CHECK(*b.upper <= flocchini_upper(m, n, TorusVariant::cordalis));
      }
      if (n >= 3) {
        const auto mesh = torus_bounds(m, n, TorusVariant::mesh);
        CHECK(mesh.lower <= *mesh.upper);
        CHECK(mesh.upper_source == BoundSource::flocchini_b);
      }
    }
  }
  const auto b = torus_bounds(9, 9, TorusVariant::cordalis);
  CHECK(b.upper == 28);
  CHECK(b.upper_source == BoundSource::construction);
}

TEST_CASE("lemma bound never exceeds the brute-force optimum") {
  std::mt19937_64 rng(31337);
  int compared = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = std::uniform_int_distribution<std::size_t>(2, 12)(rng);
    const auto g = oracle::random_connected_graph(n, std::uniform_real_distribution<double>(0.0, 0.5)(rng), rng);
    for (int k : {1, 2, 3}) {
      const auto best = oracle::min_seed(oracle::adjacency(g), std::vector<int>(n, k));
      CHECK(lower_bound_lemma(g, k) <= static_cast<std::int64_t>(best.size));
      ++compared;
    }
  }
  CHECK(compared >= 200);
}

TEST_CASE("graph bounds carry only the lemma") {
  const auto r = graph_bounds(generalized_petersen(5, 2), 2);
  CHECK(r.lower == 3);
  CHECK(r.lower_source == BoundSource::lemma3);
  CHECK_FALSE(r.upper.has_value());
}
