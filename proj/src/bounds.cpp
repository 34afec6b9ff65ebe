#include "tss/bounds.hpp"

#include <algorithm>

#include "tss/constructions.hpp"
#include "tss/error.hpp"

namespace tss {

namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
  // b > 0
  return a >= 0 ? (a + b - 1) / b : -((-a) / b);
}

void check_torus(std::int64_t m, std::int64_t n, TorusVariant variant) {
  const std::int64_t min_n = variant == TorusVariant::mesh ? 3 : 2;
  if (m < 3 || n < min_n) {
    throw Error(ErrorKind::BadParam, "torus needs m >= 3 and n >= " + std::to_string(min_n));
  }
}

}  // namespace

std::string to_string(BoundSource s) {
  switch (s) {
    case BoundSource::lemma3: return "lemma3";
    case BoundSource::flocchini_a: return "flocchini_a";
    case BoundSource::flocchini_b: return "flocchini_b";
    case BoundSource::construction: return "construction";
  }
  return "unknown";
}

std::string to_string(TorusVariant v) {
  switch (v) {
    case TorusVariant::cordalis: return "cordalis";
    case TorusVariant::mesh: return "mesh";
    case TorusVariant::serpentinus: return "serpentinus";
  }
  return "unknown";
}

std::int64_t lower_bound_lemma(const Graph& g, int k) {
  if (k < 1) throw Error(ErrorKind::BadParam, "lemma bound needs k >= 1");
  if (!g.is_connected()) throw Error(ErrorKind::BadParam, "lemma bound needs a connected graph");
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  const auto edges = static_cast<std::int64_t>(g.edge_count());
  const auto delta = static_cast<std::int64_t>(g.max_degree());
  if (delta < k) return n;
  if (delta == k) return ceil_div(edges, k);
  return std::max<std::int64_t>(0, ceil_div(edges - (delta - k) * n + 1, k));
}

std::int64_t tss_lower_bound_torus(std::int64_t m, std::int64_t n) {
  check_torus(m, n, TorusVariant::cordalis);
  return ceil_div(m * n + 1, 3);
}

std::int64_t flocchini_upper(std::int64_t m, std::int64_t n, TorusVariant variant) {
  check_torus(m, n, variant);
  const auto rows = ceil_div(m, 3) * (n + 1);
  if (variant == TorusVariant::cordalis) return rows;
  return std::min(rows, ceil_div(n, 3) * (m + 1));
}

BoundsReport torus_bounds(std::int64_t m, std::int64_t n, TorusVariant variant) {
  BoundsReport r;
  check_torus(m, n, variant);
  r.lower = ceil_div(m * n + 1, 3);
  r.lower_source = BoundSource::lemma3;
  r.upper = flocchini_upper(m, n, variant);
  r.upper_source = variant == TorusVariant::cordalis ? BoundSource::flocchini_a : BoundSource::flocchini_b;
  if (variant == TorusVariant::cordalis) {
    const auto report = seed_torus_cordalis(static_cast<std::size_t>(m), static_cast<std::size_t>(n));
    if (static_cast<std::int64_t>(report.size) < *r.upper) {
      r.upper = static_cast<std::int64_t>(report.size);
      r.upper_source = BoundSource::construction;
    }
  }
  return r;
}

BoundsReport graph_bounds(const Graph& g, int k) {
  BoundsReport r;
  r.lower = lower_bound_lemma(g, k);
  r.lower_source = BoundSource::lemma3;
  return r;
}

}  // namespace tss
