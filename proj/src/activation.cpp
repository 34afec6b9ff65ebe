#include "tss/activation.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <string>

#include "tss/error.hpp"

namespace tss {

namespace {

void check_seed(const Graph& g, const ThresholdAssignment& theta, const VertexSet& seed) {
  theta.check_against(g);
  if (seed.universe() != g.vertex_count()) {
    throw Error(ErrorKind::SizeMismatch, "seed universe " + std::to_string(seed.universe()) +
                                             " differs from vertex count " + std::to_string(g.vertex_count()));
  }
}

int active_neighbors(const Graph& g, VertexId v, const std::vector<char>& active) {
  int c = 0;
  for (VertexId w : g.neighbors(v)) c += active[w];
  return c;
}

}  // namespace

ConvincedSequence& ConvincedSequence::operator+=(const ConvincedSequence& tail) {
  order.insert(order.end(), tail.order.begin(), tail.order.end());
  return *this;
}

ConvincedSequence operator+(ConvincedSequence head, const ConvincedSequence& tail) {
  head += tail;
  return head;
}

ClosureEngine::ClosureEngine(const Graph& g, const ThresholdAssignment& theta)
    : graph_(&g), theta_(theta.values()), active_(g.vertex_count(), 0), count_(g.vertex_count(), 0) {
  theta.check_against(g);
  stack_.reserve(g.vertex_count());
}

std::size_t ClosureEngine::run(std::span<const VertexId> seed) {
  const auto n = graph_->vertex_count();
  std::fill(active_.begin(), active_.end(), 0);
  std::fill(count_.begin(), count_.end(), 0);
  stack_.clear();
  std::size_t total = 0;
  auto activate = [&](VertexId v) {
    active_[v] = 1;
    ++total;
    stack_.push_back(v);
  };
  for (VertexId v : seed) {
    if (v >= n) throw Error(ErrorKind::VertexOutOfRange, "seed vertex " + std::to_string(v));
    if (!active_[v]) activate(v);
  }
  for (VertexId v = 0; v < n; ++v) {
    if (!active_[v] && theta_[v] <= 0) activate(v);
  }
  while (!stack_.empty()) {
    const VertexId v = stack_.back();
    stack_.pop_back();
    for (VertexId w : graph_->neighbors(v)) {
      if (!active_[w] && ++count_[w] >= theta_[w]) activate(w);
    }
  }
  return total;
}

VertexSet ClosureEngine::active_set() const {
  VertexSet out(active_.size());
  for (VertexId v = 0; v < active_.size(); ++v) {
    if (active_[v]) out.insert(v);
  }
  return out;
}

VertexSet closure(const Graph& g, const ThresholdAssignment& theta, const VertexSet& seed) {
  check_seed(g, theta, seed);
  ClosureEngine engine(g, theta);
  engine.run(seed.members());
  return engine.active_set();
}

bool is_influencing(const Graph& g, const ThresholdAssignment& theta, const VertexSet& seed) {
  check_seed(g, theta, seed);
  ClosureEngine engine(g, theta);
  return engine.run(seed.members()) == g.vertex_count();
}

ActivationTrace parallel_trace(const Graph& g, const ThresholdAssignment& theta, const VertexSet& seed) {
  check_seed(g, theta, seed);
  const auto n = g.vertex_count();
  ActivationTrace trace{seed, {}, seed};
  std::vector<char> active(n, 0);
  std::vector<int> count(n, 0);
  std::vector<VertexId> frontier = seed.members();
  for (VertexId v : frontier) active[v] = 1;

  // Counters reflect exactly the vertices active before the current step.
  auto absorb = [&](const std::vector<VertexId>& batch) {
    for (VertexId v : batch) {
      for (VertexId w : g.neighbors(v)) ++count[w];
    }
  };
  absorb(frontier);
  std::vector<VertexId> candidates;
  for (VertexId v = 0; v < n; ++v) {
    if (!active[v] && count[v] >= theta[v]) candidates.push_back(v);
  }
  while (!candidates.empty()) {
    for (VertexId v : candidates) {
      active[v] = 1;
      trace.final.insert(v);
    }
    absorb(candidates);
    std::vector<VertexId> next;
    for (VertexId v : candidates) {
      for (VertexId w : g.neighbors(v)) {
        if (!active[w] && count[w] >= theta[w]) next.push_back(w);
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    trace.rounds.push_back(std::move(candidates));
    candidates = std::move(next);
  }
  return trace;
}

SequenceCheck validate_convinced_sequence(const Graph& g, const ThresholdAssignment& theta, const VertexSet& seed,
                                          const ConvincedSequence& alpha) {
  check_seed(g, theta, seed);
  const auto n = g.vertex_count();
  std::vector<char> listed(n, 0);
  for (VertexId v : alpha.order) {
    if (v >= n) throw Error(ErrorKind::VertexOutOfRange, "sequence vertex " + std::to_string(v));
    if (seed.contains(v)) throw Error(ErrorKind::SeedOverlap, "sequence vertex " + std::to_string(v) + " is seeded");
    if (listed[v]) throw Error(ErrorKind::DuplicateVertex, "sequence repeats vertex " + std::to_string(v));
    listed[v] = 1;
  }

  std::vector<char> active(n, 0);
  for (VertexId v : seed.members()) active[v] = 1;
  SequenceCheck result;
  for (std::size_t p = 0; p < alpha.order.size(); ++p) {
    const VertexId v = alpha.order[p];
    const int have = active_neighbors(g, v, active);
    if (have < theta[v]) {
      result.violation = SequenceViolation{p + 1, v, have, theta[v]};
      return result;
    }
    active[v] = 1;
  }
  result.ok = true;
  result.full_influence = seed.size() + alpha.order.size() == n;
  return result;
}

ConvincedSequence sequential_order(const Graph& g, const ThresholdAssignment& theta, const VertexSet& seed,
                                   OrderPolicy policy) {
  check_seed(g, theta, seed);
  const auto n = g.vertex_count();
  std::vector<char> active(n, 0);
  std::vector<char> queued(n, 0);
  std::vector<int> count(n, 0);
  for (VertexId v : seed.members()) active[v] = 1;
  for (VertexId v : seed.members()) {
    for (VertexId w : g.neighbors(v)) ++count[w];
  }

  // Eligible pool; its representation depends on the policy.
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> low;
  std::priority_queue<VertexId> high;
  std::vector<VertexId> pool;
  std::mt19937_64 rng(policy.rng_seed);

  auto offer = [&](VertexId v) {
    if (active[v] || queued[v] || count[v] < theta[v]) return;
    queued[v] = 1;
    switch (policy.kind) {
      case OrderKind::lowest_id: low.push(v); break;
      case OrderKind::highest_id: high.push(v); break;
      case OrderKind::random: pool.push_back(v); break;
    }
  };
  auto take = [&]() -> std::optional<VertexId> {
    switch (policy.kind) {
      case OrderKind::lowest_id:
        if (low.empty()) return std::nullopt;
        {
          auto v = low.top();
          low.pop();
          return v;
        }
      case OrderKind::highest_id:
        if (high.empty()) return std::nullopt;
        {
          auto v = high.top();
          high.pop();
          return v;
        }
      case OrderKind::random:
        if (pool.empty()) return std::nullopt;
        {
          std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
          const auto idx = pick(rng);
          const auto v = pool[idx];
          pool[idx] = pool.back();
          pool.pop_back();
          return v;
        }
    }
    return std::nullopt;
  };

  for (VertexId v = 0; v < n; ++v) offer(v);
  ConvincedSequence out;
  while (auto next = take()) {
    const VertexId v = *next;
    active[v] = 1;
    out.order.push_back(v);
    for (VertexId w : g.neighbors(v)) {
      ++count[w];
      offer(w);
    }
  }
  return out;
}

VertexSet sequential_closure(const Graph& g, const ThresholdAssignment& theta, const VertexSet& seed,
                             OrderPolicy policy) {
  VertexSet out = seed;
  for (VertexId v : sequential_order(g, theta, seed, policy).order) out.insert(v);
  return out;
}

ConvincedSequence sequence_from_trace(const ActivationTrace& trace) {
  ConvincedSequence out;
  for (const auto& round : trace.rounds) out.order.insert(out.order.end(), round.begin(), round.end());
  return out;
}

}  // namespace tss
