#include "tss/solver.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

#include "tss/activation.hpp"
#include "tss/bounds.hpp"
#include "tss/error.hpp"

namespace tss {

namespace {

using Clock = std::chrono::steady_clock;

// Depth-first lexicographic enumeration of `pick`-subsets of the free
// candidates. Any completion of a node is a subset of chosen + suffix, so by
// monotonicity of the closure a node whose chosen + suffix fails cannot lead
// to a success.
class SubsetSearch {
 public:
  SubsetSearch(const Graph& g, const ThresholdAssignment& theta, const std::vector<VertexId>& forced,
               const std::vector<VertexId>& free, std::optional<Clock::time_point> deadline,
               std::atomic<bool>& stop)
      : engine_(g, theta), n_(g.vertex_count()), forced_(forced), free_(free), deadline_(deadline), stop_(stop) {}

  // Searches subsets whose smallest free index is `first` (or any, if nullopt).
  bool run(std::size_t pick, std::optional<std::size_t> first) {
    chosen_.clear();
    pick_ = pick;
    if (pick == 0) return feasible_with_suffix(free_.size());
    if (first) {
      if (*first + pick > free_.size()) return false;
      chosen_.push_back(free_[*first]);
      return descend(*first + 1);
    }
    return descend(0);
  }

  const std::vector<VertexId>& chosen() const noexcept { return chosen_; }
  std::uint64_t nodes() const noexcept { return nodes_; }
  bool timed_out() const noexcept { return timed_out_; }

 private:
  bool feasible_with_suffix(std::size_t from) {
    buffer_.assign(forced_.begin(), forced_.end());
    buffer_.insert(buffer_.end(), chosen_.begin(), chosen_.end());
    buffer_.insert(buffer_.end(), free_.begin() + static_cast<std::ptrdiff_t>(from), free_.end());
    return engine_.run(buffer_) == n_;
  }

  bool descend(std::size_t start) {
    if (stop_.load(std::memory_order_relaxed)) return false;
    if ((++nodes_ & 0x3ff) == 0 && deadline_ && Clock::now() > *deadline_) {
      timed_out_ = true;
      stop_.store(true);
      return false;
    }
    if (chosen_.size() == pick_) return feasible_with_suffix(free_.size());
    if (!feasible_with_suffix(start)) return false;
    const std::size_t need = pick_ - chosen_.size();
    for (std::size_t idx = start; idx + need <= free_.size(); ++idx) {
      chosen_.push_back(free_[idx]);
      if (descend(idx + 1)) return true;
      chosen_.pop_back();
      if (stop_.load(std::memory_order_relaxed)) return false;
    }
    return false;
  }

  ClosureEngine engine_;
  std::size_t n_;
  const std::vector<VertexId>& forced_;
  const std::vector<VertexId>& free_;
  std::optional<Clock::time_point> deadline_;
  std::atomic<bool>& stop_;
  std::vector<VertexId> chosen_;
  std::vector<VertexId> buffer_;
  std::size_t pick_ = 0;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
};

unsigned worker_count(const SolveLimits& limits) {
  if (limits.threads != 0) return limits.threads;
  return std::clamp(std::thread::hardware_concurrency(), 1U, 8U);
}

}  // namespace

std::string to_string(SolveStatus s) { return s == SolveStatus::optimal ? "optimal" : "budget_exceeded"; }

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::confirmed: return "confirmed";
    case Verdict::refuted: return "refuted";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "unknown";
}

SolveResult exact_min_seed(const Graph& g, const ThresholdAssignment& theta, const SolveLimits& limits) {
  theta.check_against(g);
  const auto n = g.vertex_count();
  if (n > limits.max_vertices) {
    throw Error(ErrorKind::TooLarge, std::to_string(n) + " vertices exceed the limit of " +
                                         std::to_string(limits.max_vertices));
  }

  std::vector<VertexId> forced;
  std::vector<VertexId> free;
  for (VertexId v = 0; v < n; ++v) {
    if (static_cast<std::size_t>(theta[v]) > g.degree(v)) {
      forced.push_back(v);
    } else if (theta[v] > 0) {
      free.push_back(v);
    }
  }

  std::size_t floor = forced.size();
  if (auto k = theta.constant_value(); k && *k >= 1 && n > 0 && g.is_connected()) {
    floor = std::max(floor, static_cast<std::size_t>(lower_bound_lemma(g, *k)));
  }

  SolveResult result;
  std::vector<VertexId> everything = forced;
  everything.insert(everything.end(), free.begin(), free.end());
  std::sort(everything.begin(), everything.end());
  // Seeding every candidate always influences: threshold-0 vertices follow.
  auto give_up = [&] {
    result.status = SolveStatus::budget_exceeded;
    result.optimum = everything.size();
    result.witness = VertexSet(n, everything);
    return result;
  };

  std::optional<Clock::time_point> deadline;
  if (limits.time_budget.count() > 0) deadline = Clock::now() + limits.time_budget;
  const unsigned workers = worker_count(limits);

  for (std::size_t k = floor; k <= everything.size(); ++k) {
    if (limits.max_size && k > *limits.max_size) return give_up();
    const std::size_t pick = k - forced.size();
    if (pick > free.size()) break;

    bool feasible = false;
    if (workers > 1 && pick > 0 && free.size() > 1) {
      std::atomic<bool> stop{false};
      std::atomic<bool> found{false};
      std::atomic<bool> timed_out{false};
      std::atomic<std::size_t> next_first{0};
      std::atomic<std::uint64_t> nodes{0};
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
          SubsetSearch search(g, theta, forced, free, deadline, stop);
          for (std::size_t first = next_first++; first + pick <= free.size() && !stop; first = next_first++) {
            if (search.run(pick, first)) {
              found = true;
              stop = true;
            }
          }
          if (search.timed_out()) timed_out = true;
          nodes += search.nodes();
        });
      }
      pool.clear();
      result.nodes_explored += nodes;
      if (timed_out && !found) return give_up();
      feasible = found;
    } else {
      feasible = true;  // decided by the sequential pass below
    }

    if (feasible) {
      // Deterministic pass: the first success in lexicographic order.
      std::atomic<bool> stop{false};
      SubsetSearch search(g, theta, forced, free, deadline, stop);
      const bool ok = search.run(pick, std::nullopt);
      result.nodes_explored += search.nodes();
      if (search.timed_out()) return give_up();
      if (ok) {
        std::vector<VertexId> seed = forced;
        seed.insert(seed.end(), search.chosen().begin(), search.chosen().end());
        result.optimum = k;
        result.witness = VertexSet(n, seed);
        result.status = SolveStatus::optimal;
        return result;
      }
    }
  }
  // Only reachable when the floor overshoots, which a sound bound rules out.
  throw Error(ErrorKind::BadParam, "no influencing seed found at or above the lower bound");
}

OptimalityCheck verify_optimality(const Graph& g, const ThresholdAssignment& theta, std::size_t claimed,
                                  const SolveLimits& limits) {
  OptimalityCheck out;
  SolveResult solved;
  try {
    solved = exact_min_seed(g, theta, limits);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::TooLarge) throw;
    out.reason = e.what();
    return out;
  }
  if (solved.status != SolveStatus::optimal) {
    out.reason = "search budget exhausted";
    return out;
  }
  out.optimum = solved.optimum;
  out.witness = solved.witness;
  out.verdict = solved.optimum == claimed ? Verdict::confirmed : Verdict::refuted;
  return out;
}

}  // namespace tss
