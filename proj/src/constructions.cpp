#include "tss/constructions.hpp"

#include <algorithm>
#include <initializer_list>
#include <sstream>
#include <utility>

#include "tss/bounds.hpp"
#include "tss/error.hpp"
#include "tss/thresholds.hpp"

namespace tss {

namespace {

// Ordered list of torus cells in 1-based coordinates; both coordinates are
// reduced (first mod m, second mod n) before the id lookup.
class Cells {
 public:
  Cells(std::size_t m, std::size_t n) : m_(m), n_(n) {}

  void add(long i, long j) { ids_.push_back(torus_id(m_, n_, i, j)); }
  void add(std::initializer_list<std::pair<long, long>> cells) {
    for (auto [i, j] : cells) add(i, j);
  }
  // (from,j), (from+step,j), ... up to and including `to`; empty when the
  // range runs the wrong way.
  void first_run(long from, long to, long step, long j) {
    for (long i = from; step > 0 ? i <= to : i >= to; i += step) add(i, j);
  }
  void second_run(long i, long from, long to, long step) {
    for (long j = from; step > 0 ? j <= to : j >= to; j += step) add(i, j);
  }
  void append(const Cells& other) { ids_.insert(ids_.end(), other.ids_.begin(), other.ids_.end()); }

  const std::vector<VertexId>& ids() const noexcept { return ids_; }
  ConvincedSequence sequence() const { return ConvincedSequence{ids_}; }

 private:
  std::size_t m_;
  std::size_t n_;
  std::vector<VertexId> ids_;
};

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

[[noreturn]] void fail(const SeedReport& r, const std::string& why) {
  std::ostringstream os;
  os << to_string(r.theorem_case) << " on " << to_string(r.family) << " (" << r.m << "," << r.n << "): " << why;
  throw Error(ErrorKind::ConstructionFailedVerification, os.str());
}

// Checks seed distinctness, the closed-form size, the convinced sequence and
// the closure before handing the report out.
SeedReport finish(SeedReport r, const std::vector<VertexId>& seed_ids, ConvincedSequence alpha,
                  std::int64_t expected_size, bool size_is_cap = false) {
  const auto theta = strict_majority_threshold(r.graph);
  r.seed = VertexSet(r.graph.vertex_count(), seed_ids);
  r.size = r.seed.size();
  r.sequence = std::move(alpha);
  r.claimed = claim_kind(r.theorem_case);

  if (r.size != seed_ids.size()) fail(r, "seed lists a vertex twice");
  const auto size = static_cast<std::int64_t>(r.size);
  if (size_is_cap ? size > expected_size : size != expected_size) {
    fail(r, "seed size " + std::to_string(size) + " vs formula " + std::to_string(expected_size));
  }
  SequenceCheck check;
  try {
    check = validate_convinced_sequence(r.graph, theta, r.seed, r.sequence);
  } catch (const Error& e) {
    fail(r, e.what());
  }
  if (!check.ok) {
    fail(r, "convinced sequence breaks at position " + std::to_string(check.violation->position));
  }
  if (!check.full_influence) fail(r, "convinced sequence does not cover every vertex");
  if (!is_influencing(r.graph, theta, r.seed)) fail(r, "seed does not influence the graph");
  if (r.claimed == ClaimKind::exact && size != r.lower_bound) {
    fail(r, "exact claim above the lower bound " + std::to_string(r.lower_bound));
  }
  r.verified = true;
  return r;
}

SeedReport cordalis_report(std::size_t m, std::size_t n, TheoremCase c) {
  SeedReport r;
  r.family = Family::torus_cordalis;
  r.m = m;
  r.n = n;
  r.graph = torus_cordalis(m, n);
  r.theorem_case = c;
  r.lower_bound = tss_lower_bound_torus(static_cast<std::int64_t>(m), static_cast<std::int64_t>(n));
  return r;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw Error(ErrorKind::BadParam, message);
}

}  // namespace

std::string to_string(TheoremCase c) {
  switch (c) {
    case TheoremCase::T3: return "T3";
    case TheoremCase::T4: return "T4";
    case TheoremCase::T5: return "T5";
    case TheoremCase::T6a: return "T6a";
    case TheoremCase::T6b: return "T6b";
    case TheoremCase::T6c: return "T6c";
    case TheoremCase::T7c1: return "T7c1";
    case TheoremCase::T7c2: return "T7c2";
    case TheoremCase::T7c3: return "T7c3";
    case TheoremCase::T8c1: return "T8c1";
    case TheoremCase::T8c2: return "T8c2";
    case TheoremCase::T8c3: return "T8c3";
    case TheoremCase::T8c4: return "T8c4";
    case TheoremCase::T8c5: return "T8c5";
    case TheoremCase::T8c6: return "T8c6";
    case TheoremCase::T9even: return "T9even";
    case TheoremCase::T9odd: return "T9odd";
    case TheoremCase::fallback: return "fallback";
  }
  return "unknown";
}

std::string to_string(ClaimKind k) {
  switch (k) {
    case ClaimKind::exact: return "exact";
    case ClaimKind::upper_bound: return "upper_bound";
    case ClaimKind::upper_bound_gap_one: return "upper_bound_gap_one";
  }
  return "unknown";
}

std::string to_string(CordalisTheorem t) {
  switch (t) {
    case CordalisTheorem::T5: return "T5";
    case CordalisTheorem::T6: return "T6";
    case CordalisTheorem::T7: return "T7";
    case CordalisTheorem::T8: return "T8";
    case CordalisTheorem::T9: return "T9";
    case CordalisTheorem::fallback: return "fallback";
  }
  return "unknown";
}

std::optional<CordalisTheorem> parse_cordalis_theorem(const std::string& name) {
  for (auto t : {CordalisTheorem::T5, CordalisTheorem::T6, CordalisTheorem::T7, CordalisTheorem::T8,
                 CordalisTheorem::T9, CordalisTheorem::fallback}) {
    if (to_string(t) == name) return t;
  }
  return std::nullopt;
}

ClaimKind claim_kind(TheoremCase c) {
  switch (c) {
    case TheoremCase::T3:
    case TheoremCase::T4:
    case TheoremCase::T5:
    case TheoremCase::T6a:
    case TheoremCase::T6b:
    case TheoremCase::T9even:
    case TheoremCase::T9odd: return ClaimKind::exact;
    case TheoremCase::T6c: return ClaimKind::upper_bound_gap_one;
    default: return ClaimKind::upper_bound;
  }
}

std::int64_t case_formula(TheoremCase c, std::size_t m_in, std::size_t n_in) {
  const auto m = static_cast<std::int64_t>(m_in);
  const auto n = static_cast<std::int64_t>(n_in);
  // Value = numerator / denominator, integral for valid parameters.
  std::int64_t num = 0;
  std::int64_t den = 1;
  switch (c) {
    case TheoremCase::T3:
    case TheoremCase::T4: return (m + 2) / 2;
    case TheoremCase::T5: return m + 1;
    case TheoremCase::T6a:
    case TheoremCase::T6b:
    case TheoremCase::T9even:
    case TheoremCase::T9odd: num = m * n + 3, den = 3; break;
    case TheoremCase::T6c: num = m * n + 6, den = 3; break;
    case TheoremCase::T7c1: num = 2 * m * n + m + 3, den = 6; break;
    case TheoremCase::T7c2: num = 2 * m * n + m, den = 6; break;
    case TheoremCase::T7c3: num = 2 * m * n + m + 6, den = 6; break;
    case TheoremCase::T8c1: num = 4 * m * n + m, den = 12; break;
    case TheoremCase::T8c2: num = 4 * m * n + m + 12, den = 12; break;
    case TheoremCase::T8c3: num = 4 * m * n + m + 3, den = 12; break;
    case TheoremCase::T8c4: num = 4 * m * n + m + 6, den = 12; break;
    case TheoremCase::T8c5: num = 4 * m * n + m + 18, den = 12; break;
    case TheoremCase::T8c6: num = 4 * m * n + m + 9, den = 12; break;
    case TheoremCase::fallback: return (m + 2) / 3 * (n + 1);
  }
  if (num % den != 0) {
    throw Error(ErrorKind::BadParam, to_string(c) + " formula is not integral at (" + std::to_string(m) + "," +
                                         std::to_string(n) + ")");
  }
  return num / den;
}

VertexSet path_seed_k2(std::size_t p) {
  require(p >= 1, "path seed needs p >= 1");
  VertexSet seed(p);
  for (std::size_t q = 0; q < p; q += 2) seed.insert(static_cast<VertexId>(q));
  seed.insert(static_cast<VertexId>(p - 1));
  return seed;
}

ConvincedSequence path_sequence_k2(std::size_t p) {
  require(p >= 1, "path seed needs p >= 1");
  ConvincedSequence alpha;
  for (std::size_t q = 1; q + 1 < p; q += 2) alpha.order.push_back(static_cast<VertexId>(q));
  return alpha;
}

SeedReport seed_cycle_permutation(std::size_t n, const Permutation& pi) {
  SeedReport r;
  r.family = Family::cycle_permutation;
  r.m = n;
  r.graph = cycle_permutation(n, pi);
  r.theorem_case = TheoremCase::T3;
  r.lower_bound = lower_bound_lemma(r.graph, 2);

  // Rotate the v-cycle so that v'_1 is the partner of u_1.
  const std::size_t a = pi.inverse(0);
  auto v = [&](std::size_t k) { return static_cast<VertexId>((a + k - 1) % n); };  // v'_k, 1-based
  auto u = [&](std::size_t k) { return static_cast<VertexId>(n + k - 1); };

  const std::size_t p = n - 2;  // H = G[{v'_3..v'_n}]
  std::vector<VertexId> seed_ids;
  for (VertexId q : path_seed_k2(p).members()) seed_ids.push_back(v(q + 3));
  seed_ids.push_back(u(1));

  ConvincedSequence alpha;
  for (VertexId q : path_sequence_k2(p).order) alpha.order.push_back(v(q + 3));
  alpha.order.push_back(v(1));
  alpha.order.push_back(v(2));
  for (std::size_t k = 2; k <= n; ++k) alpha.order.push_back(u(k));
  return finish(std::move(r), seed_ids, std::move(alpha), case_formula(TheoremCase::T3, n, 0));
}

SeedReport seed_generalized_petersen(std::size_t m, std::size_t s) {
  SeedReport r;
  r.family = Family::generalized_petersen;
  r.m = m;
  r.n = s;
  r.graph = generalized_petersen(m, s);
  r.theorem_case = TheoremCase::T4;
  r.lower_bound = lower_bound_lemma(r.graph, 2);

  auto v = [&](std::size_t k) { return static_cast<VertexId>(k - 1); };
  auto u = [&](std::size_t k) { return static_cast<VertexId>(m + k - 1); };

  const std::size_t p = m - 2 * s;  // H = G[{v_{s+1}..v_{m-s}}]
  std::vector<VertexId> seed_ids;
  for (VertexId q : path_seed_k2(p).members()) seed_ids.push_back(v(s + 1 + q));
  for (std::size_t k = 1; k <= s; ++k) seed_ids.push_back(u(k));

  ConvincedSequence alpha;
  for (VertexId q : path_sequence_k2(p).order) alpha.order.push_back(v(s + 1 + q));
  for (std::size_t k = s; k >= 1; --k) alpha.order.push_back(v(k));
  for (std::size_t k = s + 1; k <= m - s; ++k) alpha.order.push_back(u(k));
  for (std::size_t k = m - s + 1; k <= m; ++k) alpha.order.push_back(u(k));
  for (std::size_t k = m - s + 1; k <= m; ++k) alpha.order.push_back(v(k));
  return finish(std::move(r), seed_ids, std::move(alpha), case_formula(TheoremCase::T4, m, 0));
}

SeedReport seed_cordalis_n3(std::size_t m_in) {
  require(m_in >= 3, "n = 3 construction needs m >= 3");
  auto r = cordalis_report(m_in, 3, TheoremCase::T5);
  const long m = static_cast<long>(m_in);
  Cells seed(m_in, 3), alpha(m_in, 3);
  for (long i = 0; i <= (m - 1) / 2; ++i) seed.add(2 * i + 1, 1);
  for (long i = 1; i <= m / 2; ++i) seed.add(2 * i, 2);
  seed.add(1, 3);

  for (long i = 1; i <= m / 2; ++i) alpha.add(2 * i, 1);
  for (long i = 0; i <= (m - 1) / 2; ++i) alpha.add(2 * i + 1, 2);
  alpha.first_run(2, m, 1, 3);
  return finish(std::move(r), seed.ids(), alpha.sequence(), case_formula(TheoremCase::T5, m_in, 3));
}

SeedReport seed_cordalis_n3s(std::size_t m_in, std::size_t s_in) {
  require(s_in >= 2, "n = 3s construction needs s >= 2");
  const bool odd_m = m_in % 2 == 1;
  require(odd_m ? m_in >= 5 : m_in >= 8, "n = 3s construction needs odd m >= 5 or even m >= 8");
  const std::size_t n_in = 3 * s_in;
  const long m = static_cast<long>(m_in);
  const long s = static_cast<long>(s_in);
  const TheoremCase c = odd_m ? TheoremCase::T6a : (s % 2 == 0 ? TheoremCase::T6b : TheoremCase::T6c);
  auto r = cordalis_report(m_in, n_in, c);
  Cells seed(m_in, n_in), alpha(m_in, n_in);

  for (long j = 0; j <= s - 1; ++j) seed.add({{1, 1 + 3 * j}, {2, 2 + 3 * j}, {3, 1 + 3 * j}, {4, 3 + 3 * j}, {5, 2 + 3 * j}});
  const long inner = odd_m ? floor_div(m - 7, 2) : floor_div(m - 10, 2);
  for (long j = 0; j <= s - 1; ++j) {
    for (long i = 0; i <= inner; ++i) seed.add({{6 + 2 * i, 3 + 3 * j}, {7 + 2 * i, 2 + 3 * j}});
  }
  if (!odd_m) {
    for (long j = 0; j <= s - 1; ++j) seed.add({{m - 2, 1 + 3 * j}, {m - 1, 3 + 3 * j}, {m, 2 + 3 * j}});
  }
  seed.add(4, 1);
  if (c == TheoremCase::T6c) seed.add(m - 1, 1);

  // Shared prefix: alpha_1 and alpha_2.
  for (long j = 0; j <= s - 1; ++j) alpha.add({{1, 2 + 3 * j}, {2, 1 + 3 * j}});
  for (long j = 0; j <= s - 1; ++j) {
    for (long i = 0; i <= inner; ++i) alpha.add({{5 + 2 * i, 3 + 3 * j}, {6 + 2 * i, 2 + 3 * j}});
  }
  auto turn_left = [&](long col) {  // (4,c),(3,c),(3,c+1),(2,c+1),(1,c+1),(m,c+1)
    alpha.add({{4, col}, {3, col}, {3, col + 1}, {2, col + 1}, {1, col + 1}, {m, col + 1}});
  };
  auto stair = [&](long col) {  // (m,c),(m-1,c),(m-1,c+1),(m-2,c+1),(m-2,c+2),(m-3,c+2)
    alpha.add({{m, col}, {m - 1, col}, {m - 1, col + 1}, {m - 2, col + 1}, {m - 2, col + 2}, {m - 3, col + 2}});
  };
  auto sweep = [&](long col) { alpha.first_run(m - 3, 4, -1, col); };

  if (c == TheoremCase::T6a) {
    alpha.first_run(5, m, 1, 1);
    alpha.add({{4, 2}, {3, 2}, {3, 3}, {2, 3}, {1, 3}, {m, 3}});
    for (long j = 0; j <= s - 2; ++j) {
      alpha.first_run(m, 4, -1, 4 + 3 * j);
      turn_left(5 + 3 * j);
    }
  } else if (c == TheoremCase::T6b) {
    alpha.first_run(5, m - 3, 1, 1);
    alpha.add(m - 3, 3 * s);
    alpha.add({{4, 2}, {3, 2}, {3, 3}, {2, 3}, {1, 3}, {m, 3}});
    for (long k = 0; k <= floor_div(s - 4, 2); ++k) {
      stair(4 + 6 * k);
      sweep(7 + 6 * k);
      turn_left(8 + 6 * k);
    }
    alpha.add({{m, 3 * s - 2}, {m - 1, 3 * s - 2}, {m - 1, 3 * s - 1}, {m - 2, 3 * s - 1}, {m - 2, 3 * s}});
    for (long k = 0; k <= floor_div(s - 2, 2); ++k) {
      stair(1 + 6 * k);
      sweep(4 + 6 * k);
      turn_left(5 + 6 * k);
    }
  } else {
    alpha.first_run(5, m - 3, 1, 1);
    alpha.add({{4, 2}, {3, 2}, {3, 3}, {2, 3}, {1, 3}, {m, 3}});
    alpha.add({{m, 1}, {m - 1, 2}, {m - 2, 2}, {m - 2, 3}, {m - 3, 3}});
    for (long k = 0; k <= floor_div(s - 3, 2); ++k) {
      sweep(4 + 6 * k);
      turn_left(5 + 6 * k);
      stair(7 + 6 * k);
    }
    for (long k = 0; k <= floor_div(s - 3, 2); ++k) {
      stair(4 + 6 * k);
      sweep(7 + 6 * k);
      turn_left(8 + 6 * k);
    }
  }
  return finish(std::move(r), seed.ids(), alpha.sequence(), case_formula(c, m_in, n_in));
}

SeedReport seed_cordalis_n1mod3(std::size_t m_in, std::size_t n_in) {
  require(n_in >= 4 && n_in % 3 == 1, "n = 3s+1 construction needs n >= 4 with n = 1 mod 3");
  const bool odd_m = m_in % 2 == 1;
  require(odd_m ? m_in >= 5 : m_in >= 8, "n = 3s+1 construction needs odd m >= 5 or even m >= 8");
  const long m = static_cast<long>(m_in);
  const long s = static_cast<long>((n_in - 1) / 3);
  const TheoremCase c = odd_m ? TheoremCase::T7c1 : (s % 2 == 1 ? TheoremCase::T7c2 : TheoremCase::T7c3);
  auto r = cordalis_report(m_in, n_in, c);
  Cells seed(m_in, n_in), alpha(m_in, n_in);

  const long inner = odd_m ? floor_div(m - 7, 2) : floor_div(m - 10, 2);
  seed.add({{1, 1}, {2, 1}, {4, 1}});
  for (long j = 0; j <= s - 1; ++j) seed.add({{1, 2 + 3 * j}, {2, 3 + 3 * j}, {3, 2 + 3 * j}, {4, 4 + 3 * j}, {5, 3 + 3 * j}});
  seed.first_run(6, odd_m ? m - 1 : m - 4, 2, 1);
  for (long j = 0; j <= s - 1; ++j) {
    for (long i = 0; i <= inner; ++i) seed.add({{6 + 2 * i, 4 + 3 * j}, {7 + 2 * i, 3 + 3 * j}});
  }
  if (!odd_m) {
    for (long j = 0; j <= s - 1; ++j) seed.add({{m - 2, 2 + 3 * j}, {m - 1, 4 + 3 * j}, {m, 3 + 3 * j}});
    if (c == TheoremCase::T7c3) seed.add(m - 2, 1);
    seed.add(m - 1, 1);
  }

  for (long j = 0; j <= s - 1; ++j) alpha.add({{1, 3 + 3 * j}, {2, 2 + 3 * j}});
  for (long j = 0; j <= s - 1; ++j) {
    for (long i = 0; i <= inner; ++i) alpha.add({{5 + 2 * i, 4 + 3 * j}, {6 + 2 * i, 3 + 3 * j}});
  }
  auto turn_left = [&](long col) {
    alpha.add({{4, col}, {3, col}, {3, col + 1}, {2, col + 1}, {1, col + 1}, {m, col + 1}});
  };
  auto stair = [&](long col) {
    alpha.add({{m, col}, {m - 1, col}, {m - 1, col + 1}, {m - 2, col + 1}, {m - 2, col + 2}, {m - 3, col + 2}});
  };
  auto sweep = [&](long col) { alpha.first_run(m - 3, 4, -1, col); };

  if (c == TheoremCase::T7c1) {
    alpha.first_run(3, m, 2, 1);
    for (long j = 0; j <= s - 1; ++j) {
      alpha.first_run(m, 4, -1, 2 + 3 * j);
      turn_left(3 + 3 * j);
    }
  } else if (c == TheoremCase::T7c2) {
    alpha.first_run(3, m - 5, 2, 1);
    alpha.add({{m, 1}, {m, 2}, {m - 1, 2}, {m - 1, 3}, {m - 2, 3}, {m - 2, 4}, {m - 3, 4}});
    for (long k = 0; k <= floor_div(s - 3, 2); ++k) {
      sweep(5 + 6 * k);
      turn_left(6 + 6 * k);
      stair(8 + 6 * k);
    }
    alpha.add({{m - 2, 1}, {m - 3, 1}});
    sweep(2);
    turn_left(3);
    for (long k = 0; k <= floor_div(s - 3, 2); ++k) {
      stair(5 + 6 * k);
      sweep(8 + 6 * k);
      turn_left(9 + 6 * k);
    }
  } else {
    alpha.first_run(3, m - 3, 2, 1);
    alpha.add(m, 1);
    for (long k = 0; k <= floor_div(s - 2, 2); ++k) {
      sweep(2 + 6 * k);
      turn_left(3 + 6 * k);
      stair(5 + 6 * k);
    }
    for (long k = 0; k <= floor_div(s - 2, 2); ++k) {
      stair(2 + 6 * k);
      sweep(5 + 6 * k);
      turn_left(6 + 6 * k);
    }
  }
  return finish(std::move(r), seed.ids(), alpha.sequence(), case_formula(c, m_in, n_in));
}

SeedReport seed_cordalis_n2mod3(std::size_t m_in, std::size_t n_in) {
  require(m_in >= 10, "n = 3s+2 construction needs m >= 10");
  require(n_in >= 5 && n_in % 3 == 2, "n = 3s+2 construction needs n >= 5 with n = 2 mod 3");
  const long m = static_cast<long>(m_in);
  const long t = m / 4;
  const long rem = m % 4;
  const long s = static_cast<long>((n_in - 2) / 3);
  const bool even_s = s % 2 == 0;
  TheoremCase c{};
  switch (rem) {
    case 0: c = even_s ? TheoremCase::T8c1 : TheoremCase::T8c2; break;
    case 1: c = TheoremCase::T8c3; break;
    case 2: c = even_s ? TheoremCase::T8c4 : TheoremCase::T8c5; break;
    default: c = TheoremCase::T8c6; break;
  }
  auto r = cordalis_report(m_in, n_in, c);
  Cells seed(m_in, n_in), alpha(m_in, n_in);

  // r in {0,1} builds blocks from row 4, r in {2,3} from row 6 after a
  // five-row head. `last` is the upper end of the block index range.
  const bool wide_head = rem >= 2;
  const long last = (rem == 0 || rem == 2) ? t - 3 : t - 2;
  const long b = wide_head ? 2 : 0;  // row offset of the block pattern

  seed.add({{2, 1}, {3, 2}});
  if (wide_head) seed.add({{4, 1}, {5, 2}});
  if (rem == 1 || rem == 3) {
    seed.add({{m - 1, 1}, {m, 2}});
  } else {
    seed.add({{m - 4, 1}, {m - 3, 2}});
    if (!even_s) seed.add(m - 2, 1);
    seed.add({{m - 1, 1}, {m, 2}});
  }
  for (long j = 0; j <= s - 1; ++j) {
    seed.add({{1, 3 + 3 * j}, {2, 4 + 3 * j}, {3, 3 + 3 * j}});
    if (wide_head) seed.add({{4, 5 + 3 * j}, {5, 3 + 3 * j}});
  }
  for (long i = 0; i <= last; ++i) seed.add({{4 + b + 4 * i, 1}, {6 + b + 4 * i, 1}, {6 + b + 4 * i, 2}});
  for (long j = 0; j <= s - 1; ++j) {
    for (long i = 0; i <= last; ++i) {
      seed.add({{4 + b + 4 * i, 5 + 3 * j}, {5 + b + 4 * i, 3 + 3 * j}, {6 + b + 4 * i, 5 + 3 * j},
                {7 + b + 4 * i, 3 + 3 * j}});
    }
  }
  for (long j = 0; j <= s - 1; ++j) {
    if (rem == 1 || rem == 3) {
      seed.add({{m - 1, 5 + 3 * j}, {m, 4 + 3 * j}});
    } else {
      seed.add({{m - 4, 5 + 3 * j}, {m - 3, 4 + 3 * j}, {m - 2, 3 + 3 * j}, {m - 1, 5 + 3 * j}, {m, 4 + 3 * j}});
    }
  }

  for (long j = 0; j <= s - 1; ++j) alpha.add({{1, 4 + 3 * j}, {2, 3 + 3 * j}});
  if (wide_head) alpha.add({{4, 2}, {5, 1}});
  for (long i = 0; i <= last; ++i) {
    alpha.add({{7 + b + 4 * i, 1}, {7 + b + 4 * i, 2}, {5 + b + 4 * i, 1}, {5 + b + 4 * i, 2}, {4 + b + 4 * i, 2}});
  }
  if (wide_head) {
    for (long j = 0; j <= s - 1; ++j) alpha.add({{4, 3 + 3 * j}, {5, 5 + 3 * j}});
  }
  for (long j = 0; j <= s - 1; ++j) {
    for (long i = 0; i <= last; ++i) {
      alpha.add({{4 + b + 4 * i, 3 + 3 * j}, {5 + b + 4 * i, 5 + 3 * j}, {6 + b + 4 * i, 3 + 3 * j},
                 {7 + b + 4 * i, 5 + 3 * j}});
    }
  }

  auto tail = [&](long col) { alpha.add({{3, col}, {2, col}, {1, col}, {m, col}}); };
  auto stair = [&](long col) {
    alpha.add({{m, col}, {m - 1, col}, {m - 1, col + 1}, {m - 2, col + 1}, {m - 2, col + 2}, {m - 3, col + 2}});
  };
  auto long_stair = [&](long col) {
    stair(col);
    alpha.add({{m - 3, col + 3}, {m - 4, col + 3}});
  };
  auto sweep = [&](long col) { alpha.first_run(m - 4, 3, -1, col); };
  auto corner = [&] { alpha.add({{3, 1}, {2, 2}, {1, 2}, {1, 1}}); };

  if (rem == 1 || rem == 3) {
    alpha.add({{m - 1, 2}, {m, 1}});
    corner();
    for (long j = 0; j <= s - 1; ++j) {
      alpha.add({{m, 3 + 3 * j}, {m - 1, 3 + 3 * j}});
      alpha.first_run(m - 1, 3, -1, 4 + 3 * j);
      tail(5 + 3 * j);
    }
  } else if (even_s) {
    alpha.add({{m - 4, 2}, {m - 3, 1}});
    for (long k = 0; k <= floor_div(s - 2, 2); ++k) {
      alpha.add({{m - 3, 3 + 6 * k}, {m - 4, 3 + 6 * k}});
      sweep(4 + 6 * k);
      tail(5 + 6 * k);
      stair(6 + 6 * k);
    }
    alpha.add({{m - 2, 1}, {m - 2, 2}, {m - 1, 2}, {m, 1}});
    corner();
    for (long k = 0; k <= floor_div(s - 2, 2); ++k) {
      long_stair(3 + 6 * k);
      sweep(7 + 6 * k);
      tail(8 + 6 * k);
    }
  } else {
    alpha.add({{m - 4, 2}, {m - 3, 1}, {m - 2, 2}, {m - 1, 2}, {m, 1}});
    corner();
    alpha.add({{m - 3, 3}, {m - 4, 3}});
    sweep(4);
    tail(5);
    stair(3);
    for (long k = 0; k <= floor_div(s - 3, 2); ++k) {
      alpha.add({{m - 3, 6 + 6 * k}, {m - 4, 6 + 6 * k}});
      sweep(7 + 6 * k);
      tail(8 + 6 * k);
      stair(9 + 6 * k);
    }
    for (long k = 0; k <= floor_div(s - 3, 2); ++k) {
      long_stair(6 + 6 * k);
      sweep(10 + 6 * k);
      tail(11 + 6 * k);
    }
  }
  return finish(std::move(r), seed.ids(), alpha.sequence(), case_formula(c, m_in, n_in));
}

SeedReport seed_cordalis_m0mod3(std::size_t m_in, std::size_t n_in) {
  require(m_in >= 3 && m_in % 3 == 0, "m = 3t construction needs m >= 3 divisible by 3");
  require(n_in >= 2, "m = 3t construction needs n >= 2");
  if (n_in == 3) {
    // Odd n below 5 reduces to the n = 3 construction.
    auto r = seed_cordalis_n3(m_in);
    r.theorem_case = TheoremCase::T9odd;
    return r;
  }
  const long m = static_cast<long>(m_in);
  const long n = static_cast<long>(n_in);
  const long t = m / 3;
  const TheoremCase c = n % 2 == 0 ? TheoremCase::T9even : TheoremCase::T9odd;
  auto r = cordalis_report(m_in, n_in, c);
  Cells seed(m_in, n_in), alpha(m_in, n_in);

  if (c == TheoremCase::T9even) {
    for (long j = 0; j <= floor_div(n - 2, 2); ++j) seed.add({{1, 1 + 2 * j}, {2, 2 + 2 * j}});
    for (long i = 0; i <= t - 2; ++i) seed.add({{4 + 3 * i, 2}, {6 + 3 * i, 1}});
    for (long j = 0; j <= floor_div(n - 4, 2); ++j) {
      for (long i = 0; i <= t - 2; ++i) seed.add({{4 + 3 * i, 4 + 2 * j}, {5 + 3 * i, 3 + 2 * j}});
    }
    seed.add(3, 1);

    for (long j = 0; j <= floor_div(n - 2, 2); ++j) alpha.add({{2, 1 + 2 * j}, {1, 2 + 2 * j}});
    for (long i = 0; i <= t - 2; ++i) {
      for (long j = 0; j <= floor_div(n - 4, 2); ++j) alpha.add({{4 + 3 * i, 3 + 2 * j}, {5 + 3 * i, 4 + 2 * j}});
    }
    alpha.second_run(3, 2, n, 1);
    for (long i = 0; i <= t - 2; ++i) {
      alpha.add({{4 + 3 * i, 1}, {5 + 3 * i, 1}, {5 + 3 * i, 2}});
      alpha.second_run(6 + 3 * i, 2, n, 1);
    }
  } else {
    for (long i = 0; i <= t - 1; ++i) seed.add({{1 + 3 * i, 1}, {2 + 3 * i, 2}, {3 + 3 * i, 3}});
    for (long j = 0; j <= floor_div(n - 5, 2); ++j) seed.add({{1, 5 + 2 * j}, {2, 4 + 2 * j}});
    for (long j = 0; j <= floor_div(n - 5, 2); ++j) {
      for (long i = 0; i <= t - 2; ++i) seed.add({{4 + 3 * i, 4 + 2 * j}, {5 + 3 * i, 5 + 2 * j}});
    }
    seed.add(1, 3);

    for (long j = 0; j <= floor_div(n - 3, 2); ++j) alpha.add({{2, 1 + 2 * j}, {1, 2 + 2 * j}});
    for (long i = 0; i <= t - 2; ++i) {
      for (long j = 0; j <= floor_div(n - 7, 2); ++j) alpha.add({{4 + 3 * i, 5 + 2 * j}, {5 + 3 * i, 6 + 2 * j}});
    }
    for (long i = 0; i <= t - 2; ++i) {
      alpha.second_run(m - 3 * i, n, 4, -1);
      alpha.add({{m - 1 - 3 * i, 4}, {m - 1 - 3 * i, 3}, {m - 2 - 3 * i, 3}, {m - 2 - 3 * i, 2}, {m - 3 * i, 2},
                 {m - 3 * i, 1}, {m - 1 - 3 * i, 1}, {m - 2 - 3 * i, n}});
    }
    alpha.add({{3, 2}, {3, 1}, {2, n}});
    alpha.second_run(3, n, 4, -1);
  }
  return finish(std::move(r), seed.ids(), alpha.sequence(), case_formula(c, m_in, n_in));
}

SeedReport seed_cordalis_fallback(std::size_t m_in, std::size_t n_in) {
  require(m_in >= 3 && n_in >= 2, "torus cordalis needs m >= 3 and n >= 2");
  auto r = cordalis_report(m_in, n_in, TheoremCase::fallback);
  const long m = static_cast<long>(m_in);
  const long n = static_cast<long>(n_in);
  Cells cells(m_in, n_in);
  for (long top = 1; top <= m; top += 3) {
    if (top + 1 <= m) {
      for (long j = 1; j <= n; ++j) cells.add(j % 2 == 1 ? top : top + 1, j);
    } else {
      cells.second_run(top, 1, n, 1);
    }
    cells.add(top + 2, 1);
  }
  // The wrapped extra cell of a short final band can coincide with a seeded
  // cell, so deduplicate before verification.
  std::vector<VertexId> ids = cells.ids();
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

  const auto theta = strict_majority_threshold(r.graph);
  const auto alpha = sequence_from_trace(parallel_trace(r.graph, theta, VertexSet(r.graph.vertex_count(), ids)));
  return finish(std::move(r), ids, alpha, case_formula(TheoremCase::fallback, m_in, n_in), true);
}

std::vector<CordalisTheorem> applicable_theorems(std::size_t m, std::size_t n) {
  std::vector<CordalisTheorem> out;
  if (m < 3 || n < 2) return out;
  const bool m_ok = m % 2 == 1 ? m >= 5 : m >= 8;
  if (m % 3 == 0) out.push_back(CordalisTheorem::T9);
  if (n == 3) out.push_back(CordalisTheorem::T5);
  if (n % 3 == 0 && n >= 6 && m_ok) out.push_back(CordalisTheorem::T6);
  if (n % 3 == 1 && n >= 4 && m_ok) out.push_back(CordalisTheorem::T7);
  if (n % 3 == 2 && n >= 5 && m >= 10) out.push_back(CordalisTheorem::T8);
  // Exact claims first: T6 is exact unless it lands in case (c).
  std::stable_sort(out.begin(), out.end(), [&](CordalisTheorem a, CordalisTheorem b) {
    auto rank = [&](CordalisTheorem x) {
      if (x == CordalisTheorem::T9 || x == CordalisTheorem::T5) return 0;
      if (x == CordalisTheorem::T6) return (m % 2 == 0 && (n / 3) % 2 == 1) ? 1 : 0;
      return 2;
    };
    return rank(a) < rank(b);
  });
  return out;
}

SeedReport seed_torus_cordalis_by(std::size_t m, std::size_t n, CordalisTheorem theorem) {
  switch (theorem) {
    case CordalisTheorem::T5:
      require(n == 3, "T5 needs n = 3");
      return seed_cordalis_n3(m);
    case CordalisTheorem::T6:
      require(n % 3 == 0, "T6 needs n divisible by 3");
      return seed_cordalis_n3s(m, n / 3);
    case CordalisTheorem::T7: return seed_cordalis_n1mod3(m, n);
    case CordalisTheorem::T8: return seed_cordalis_n2mod3(m, n);
    case CordalisTheorem::T9: return seed_cordalis_m0mod3(m, n);
    case CordalisTheorem::fallback: return seed_cordalis_fallback(m, n);
  }
  throw Error(ErrorKind::BadParam, "unknown theorem");
}

SeedReport seed_torus_cordalis(std::size_t m, std::size_t n) {
  require(m >= 3 && n >= 2, "torus cordalis needs m >= 3 and n >= 2");
  const auto theorems = applicable_theorems(m, n);
  return seed_torus_cordalis_by(m, n, theorems.empty() ? CordalisTheorem::fallback : theorems.front());
}

}  // namespace tss
