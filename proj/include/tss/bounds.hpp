#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "tss/graph.hpp"

namespace tss {

enum class BoundSource { lemma3, flocchini_a, flocchini_b, construction };
std::string to_string(BoundSource s);

enum class TorusVariant { cordalis, mesh, serpentinus };
std::string to_string(TorusVariant v);

struct BoundsReport {
  std::int64_t lower = 0;
  std::optional<std::int64_t> upper;  // nullopt: no finite upper bound known
  BoundSource lower_source = BoundSource::lemma3;
  std::optional<BoundSource> upper_source;
};

/// Lower bound on min-seed(G,k) for a connected graph with constant threshold k:
/// ceil((|E| - (maxdeg-k)|V| + 1)/k) when maxdeg > k, floored at 0.
/// For k == maxdeg every edge needs a seeded end, giving ceil(|E|/k); for
/// k > maxdeg no vertex can be convinced and the bound is |V|.
/// Errors: BadParam (k < 1 or g disconnected).
std::int64_t lower_bound_lemma(const Graph& g, int k);

/// ceil((mn+1)/3). The Erdos average-degree argument behind it is not exposed.
std::int64_t tss_lower_bound_torus(std::int64_t m, std::int64_t n);

/// cordalis: ceil(m/3)(n+1); mesh and serpentinus: min of that and ceil(n/3)(m+1).
std::int64_t flocchini_upper(std::int64_t m, std::int64_t n, TorusVariant variant);

/// Closed-form bounds for a torus with threshold 3. For the cordalis the upper
/// bound is tightened by the dispatched seed construction.
BoundsReport torus_bounds(std::int64_t m, std::int64_t n, TorusVariant variant);

/// Lemma lower bound only; upper stays open.
BoundsReport graph_bounds(const Graph& g, int k);

}  // namespace tss
