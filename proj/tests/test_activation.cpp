#include <algorithm>
#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "tss/activation.hpp"
#include "tss/constructions.hpp"
#include "tss/error.hpp"
#include "tss/families.hpp"

using namespace tss;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Parse;
}

VertexSet from_flags(const std::vector<char>& flags) {
  VertexSet s(flags.size());
  for (VertexId v = 0; v < flags.size(); ++v) {
    if (flags[v]) s.insert(v);
  }
  return s;
}

VertexSet ids(std::size_t n, std::vector<VertexId> members) { return VertexSet(n, members); }

}  // namespace

TEST_CASE("closure examples") {
  const auto pet = generalized_petersen(5, 2);
  const auto two = constant_threshold(pet, 2);
  CHECK(closure(pet, two, VertexSet::full(10)) == VertexSet::full(10));
  CHECK(closure(pet, two, VertexSet(10)).empty());

  const auto report = seed_cordalis_n3(4);
  CHECK(report.size == 5);
  const auto three = constant_threshold(report.graph, 3);
  CHECK(closure(report.graph, three, report.seed).size() == 12);

  const auto c5 = cycle(5);
  CHECK(closure(c5, constant_threshold(c5, 0), VertexSet(5)) == VertexSet::full(5));
}

TEST_CASE("parallel trace examples") {
  const auto pet = generalized_petersen(5, 2);
  const auto full = parallel_trace(pet, constant_threshold(pet, 2), VertexSet::full(10));
  CHECK(full.rounds.empty());

  const auto p3 = path(3);
  const auto trace = parallel_trace(p3, constant_threshold(p3, 1), ids(3, {1}));
  REQUIRE(trace.rounds.size() == 1);
  CHECK(trace.rounds[0] == std::vector<VertexId>{0, 2});
  CHECK(trace.final == VertexSet::full(3));

  const auto fig = seed_cordalis_n3(11);
  CHECK(fig.size == 12);
  CHECK(parallel_trace(fig.graph, constant_threshold(fig.graph, 3), fig.seed).final.size() == 33);
}

TEST_CASE("convinced sequence validation") {
  const auto pet = generalized_petersen(5, 2);
  const auto two = constant_threshold(pet, 2);
  const auto empty = validate_convinced_sequence(pet, two, VertexSet::full(10), {});
  CHECK(empty.ok);
  CHECK(empty.full_influence);

  for (std::size_t m : {3, 4, 7, 12}) {
    const auto r = seed_cordalis_n3(m);
    const auto three = constant_threshold(r.graph, 3);
    const auto check = validate_convinced_sequence(r.graph, three, r.seed, r.sequence);
    CHECK(check.ok);
    CHECK(check.full_influence);

    ConvincedSequence reversed{{r.sequence.order.rbegin(), r.sequence.order.rend()}};
    const auto bad = validate_convinced_sequence(r.graph, three, r.seed, reversed);
    CHECK_FALSE(bad.ok);
    REQUIRE(bad.violation.has_value());
    // direct count along the reversed order
    auto active = r.seed;
    std::size_t position = 0;
    int have = 0;
    for (std::size_t p = 0; p < reversed.size(); ++p) {
      const auto v = reversed.order[p];
      have = 0;
      for (auto w : r.graph.neighbors(v)) have += active.contains(w) ? 1 : 0;
      if (have < 3) {
        position = p + 1;
        break;
      }
      active.insert(v);
    }
    CHECK(bad.violation->position == position);
    CHECK(bad.violation->vertex == reversed.order[position - 1]);
    CHECK(bad.violation->active_neighbors == have);
    // for even m the last vertex (m,3) already sees three seeds
    CHECK(position == (m % 2 == 1 ? 1 : 2));
  }

  const auto p5 = path(5);
  const auto k2 = constant_threshold(p5, 2);
  const auto seed = ids(5, {0, 2, 4});
  const auto partial = validate_convinced_sequence(p5, k2, seed, ConvincedSequence{{1}});
  CHECK(partial.ok);
  CHECK_FALSE(partial.full_influence);
  CHECK(kind_of([&] { validate_convinced_sequence(p5, k2, seed, ConvincedSequence{{1, 1}}); }) ==
        ErrorKind::DuplicateVertex);
  CHECK(kind_of([&] { validate_convinced_sequence(p5, k2, seed, ConvincedSequence{{2}}); }) ==
        ErrorKind::SeedOverlap);
  CHECK(kind_of([&] { validate_convinced_sequence(p5, k2, seed, ConvincedSequence{{9}}); }) ==
        ErrorKind::VertexOutOfRange);
}

TEST_CASE("sequence concatenation") {
  ConvincedSequence a{{1, 2}};
  const ConvincedSequence b{{3}};
  CHECK((a + b).order == std::vector<VertexId>{1, 2, 3});
  a += b;
  a += ConvincedSequence{};
  CHECK(a.size() == 3);
}

TEST_CASE("influence predicate") {
  const auto pet = generalized_petersen(5, 2);
  const auto two = constant_threshold(pet, 2);
  CHECK(is_influencing(pet, two, VertexSet::full(10)));
  CHECK_FALSE(is_influencing(pet, two, VertexSet(10)));
  const auto r = seed_generalized_petersen(10, 4);
  CHECK(r.size == 6);
  CHECK(is_influencing(r.graph, constant_threshold(r.graph, 2), r.seed));
}

TEST_CASE("sequential closure examples") {
  const auto p3 = path(3);
  CHECK(sequential_closure(p3, constant_threshold(p3, 1), ids(3, {1}), OrderPolicy::lowest_id()) ==
        VertexSet::full(3));
  const auto r = seed_cordalis_n3s(9, 3);
  CHECK(r.size == 28);
  const auto three = constant_threshold(r.graph, 3);
  for (std::uint64_t s : {0ULL, 1ULL, 99ULL}) {
    CHECK(sequential_closure(r.graph, three, r.seed, OrderPolicy::random(s)).size() == 81);
  }
  CHECK(sequential_closure(r.graph, three, VertexSet(81), OrderPolicy::highest_id()).empty());
}

TEST_CASE("size mismatches are rejected") {
  const auto c5 = cycle(5);
  CHECK(kind_of([&] { closure(c5, constant_threshold(cycle(4), 2), VertexSet(5)); }) == ErrorKind::SizeMismatch);
  CHECK(kind_of([&] { closure(c5, constant_threshold(c5, 2), VertexSet(4)); }) == ErrorKind::SizeMismatch);
  CHECK(kind_of([&] { parallel_trace(c5, constant_threshold(c5, 2), VertexSet(6)); }) == ErrorKind::SizeMismatch);
}

TEST_CASE("closure properties on random instances") {
  std::mt19937_64 rng(20240601);
  int instances = 0;
  for (int trial = 0; trial < 1200; ++trial) {
    const auto n = std::uniform_int_distribution<std::size_t>(1, 20)(rng);
    const double p = std::uniform_real_distribution<double>(0.0, 0.4)(rng);
    const auto g = oracle::random_connected_graph(n, p, rng);
    const auto adj = oracle::adjacency(g);
    std::vector<int> values(n);
    for (VertexId v = 0; v < n; ++v) {
      values[v] = std::uniform_int_distribution<int>(0, static_cast<int>(g.degree(v)) + 1)(rng);
    }
    const ThresholdAssignment theta(values);
    std::vector<char> flags(n);
    const double density = std::uniform_real_distribution<double>(0.0, 0.6)(rng);
    for (auto& f : flags) f = std::bernoulli_distribution(density)(rng) ? 1 : 0;
    const auto seed = from_flags(flags);

    const auto closed = closure(g, theta, seed);
    CHECK(closed == from_flags(oracle::closure(adj, values, flags)));
    CHECK(closure(g, theta, closed) == closed);
    CHECK(seed.is_subset_of(closed));

    auto bigger = flags;
    for (auto& f : bigger) f = f || std::bernoulli_distribution(0.2)(rng);
    CHECK(closed.is_subset_of(closure(g, theta, from_flags(bigger))));

    auto oracle_active = flags;
    const auto expected_rounds = oracle::rounds(adj, values, oracle_active);
    const auto trace = parallel_trace(g, theta, seed);
    REQUIRE(trace.rounds.size() == expected_rounds.size());
    for (std::size_t t = 0; t < trace.rounds.size(); ++t) {
      std::vector<int> got(trace.rounds[t].begin(), trace.rounds[t].end());
      std::sort(got.begin(), got.end());
      CHECK(got == expected_rounds[t]);
    }
    CHECK(trace.final == closed);

    CHECK(sequential_closure(g, theta, seed, OrderPolicy::lowest_id()) == closed);
    CHECK(sequential_closure(g, theta, seed, OrderPolicy::highest_id()) == closed);
    CHECK(sequential_closure(g, theta, seed, OrderPolicy::random(rng())) == closed);

    const bool influencing = closed.size() == n;
    CHECK(is_influencing(g, theta, seed) == influencing);
    const auto from_trace = validate_convinced_sequence(g, theta, seed, sequence_from_trace(trace));
    CHECK(from_trace.ok);
    CHECK(from_trace.full_influence == influencing);
    const auto seq = sequential_order(g, theta, seed, OrderPolicy::random(rng()));
    const auto seq_check = validate_convinced_sequence(g, theta, seed, seq);
    CHECK(seq_check.ok);
    CHECK(seq_check.full_influence == influencing);
    ++instances;
  }
  CHECK(instances >= 1000);
}
